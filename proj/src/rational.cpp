#include "qes/rational.hpp"

#include <cctype>

#include "qes/errors.hpp"

namespace qes {

Rat parse_rational(const std::string& text) {
  if (text.empty()) fail(errc::bad_input, "empty rational literal");
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    fail(errc::bad_input, "floating-point literal '" + text +
                              "' is not accepted; write an exact rational like \"1/2\"");
  }
  // shape: -?digits(/digits)?  so that mpq_set_str never sees surprises
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '-' && pos == 0) continue;
    if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      continue;
    }
    fail(errc::bad_input, "cannot parse rational '" + text + "'; use \"p/q\" or an integer");
  }
  if (!seen_digit) fail(errc::bad_input, "cannot parse rational '" + text + "'");

  Rat value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0)
    fail(errc::bad_input, "cannot parse rational '" + text + "'");
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0)
    fail(errc::bad_input, "zero denominator in '" + text + "'");
  mpq_canonicalize(value.get_mpq_t());
  return value;
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat make_rat(long num, long den) {
  Rat value{Int(num), Int(den)};
  mpq_canonicalize(value.get_mpq_t());
  return value;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int falling_factorial(long value, long count) {
  Int out = 1;
  for (long step = 0; step < count; ++step) out *= value - step;
  return out;
}

Int int_pow(long base, unsigned long exponent) {
  Int out;
  Int b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace qes
