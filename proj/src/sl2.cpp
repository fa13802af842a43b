#include "qes/sl2.hpp"

#include <cstdlib>

#include "qes/errors.hpp"

namespace qes {

RatMatrix RatMatrix::zero(long dim) {
  RatMatrix m;
  m.dim = dim;
  m.a.assign(dim * dim, Rat(0));
  return m;
}

RatMatrix RatMatrix::identity(long dim) {
  RatMatrix m = zero(dim);
  for (long d = 0; d < dim; ++d) m.at(d, d) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.dim != rhs.dim) fail(errc::dimension_mismatch, "matrix product dimensions differ");
  RatMatrix out = RatMatrix::zero(lhs.dim);
  for (long row = 0; row < lhs.dim; ++row)
    for (long mid = 0; mid < lhs.dim; ++mid) {
      const Rat& left = lhs.at(row, mid);
      if (left == 0) continue;  // generators are sparse; skip empty rows early
      for (long col = 0; col < lhs.dim; ++col) {
        const Rat& right = rhs.at(mid, col);
        if (right != 0) out.at(row, col) += left * right;
      }
    }
  return out;
}

RatMatrix operator+(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.dim != rhs.dim) fail(errc::dimension_mismatch, "matrix sum dimensions differ");
  RatMatrix out = lhs;
  for (std::size_t p = 0; p < out.a.size(); ++p) out.a[p] += rhs.a[p];
  return out;
}

RatMatrix operator-(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.dim != rhs.dim) fail(errc::dimension_mismatch, "matrix difference dimensions differ");
  RatMatrix out = lhs;
  for (std::size_t p = 0; p < out.a.size(); ++p) out.a[p] -= rhs.a[p];
  return out;
}

RatMatrix operator*(const Rat& scalar, const RatMatrix& matrix) {
  RatMatrix out = matrix;
  for (Rat& entry : out.a) entry *= scalar;
  return out;
}

Sl2Generators sl2_generators(long r) {
  if (r < 0) fail(errc::bad_input, "negative ladder length");
  const long dim = r + 1;
  Sl2Generators g{RatMatrix::zero(dim), RatMatrix::zero(dim), RatMatrix::zero(dim)};
  for (long t = 0; t <= r; ++t) {
    g.jzero.at(t, t) = make_rat(2 * t - r, 2);
    if (t >= 1) g.jminus.at(t - 1, t) = t;
    if (t + 1 <= r) g.jplus.at(t + 1, t) = t - r;
  }
  return g;
}

ReducedOperator reduced_direct(const Model& model, const SectorLabel& sector) {
  check_sector(model, sector);
  ReducedOperator op;
  op.dim = sector.dim();
  op.entries.assign(op.dim * op.dim, Int(0));
  op.built_from = ReducedOperator::Source::direct;
  for (long t = 0; t <= sector.r; ++t) {
    if (t >= 1) {
      // lowering part: the pump factors picked up moving down one rung
      Int down = 1;
      for (std::size_t l = 0; l < sector.nvec.size(); ++l)
        for (long j = 0; j < model.n[l]; ++j) down *= sector.nvec[l] - j + model.n[l] * t;
      op.at(t - 1, t) = down;
    }
    if (t + 1 <= sector.r) {
      Int up = 1;
      for (std::size_t k = 0; k < sector.mvec.size(); ++k)
        for (long i = 0; i < model.m[k]; ++i) up *= sector.mvec[k] - i - model.m[k] * t;
      op.at(t + 1, t) = up;
    }
  }
  return op;
}

std::vector<Sl2Term> sl2_expansion_with_choice(const Model& model, const SectorLabel& sector,
                                               long lprime, long kprime) {
  check_sector(model, sector);
  if (lprime < 0 || lprime >= model.modes_a() || sector.nvec[lprime] >= model.n[lprime])
    fail(errc::bad_input, "lprime does not index a bottomed-out pump mode");
  if (kprime < 0 || kprime >= model.modes_b() ||
      sector.mvec[kprime] / model.m[kprime] != sector.r)
    fail(errc::bad_input, "kprime does not index a mode attaining r");

  const Rat half_r = make_rat(sector.r, 2);
  std::vector<Sl2Term> terms(2);

  // Lowering term: every pump factor except the one that realizes J- itself.
  Sl2Term& low = terms[0];
  low.leading = Sl2Term::Leading::jminus;
  low.scalar = 1;
  for (std::size_t l = 0; l < sector.nvec.size(); ++l)
    low.scalar *= Rat(int_pow(model.n[l], model.n[l]));
  auto push_pump = [&](long l, long j) {
    low.shifts.push_back(make_rat(sector.nvec[l] - j, model.n[l]) + half_r);
  };
  for (long j = 0; j < model.n[lprime]; ++j)
    if (j != sector.nvec[lprime]) push_pump(lprime, j);
  for (long l = 0; l < model.modes_a(); ++l) {
    if (l == lprime) continue;
    for (long j = 0; j < model.n[l]; ++j) push_pump(l, j);
  }

  // Raising term: converted factors, minus the one absorbed into J+.
  Sl2Term& high = terms[1];
  high.leading = Sl2Term::Leading::jplus;
  high.scalar = 1;
  for (std::size_t k = 0; k < sector.mvec.size(); ++k) {
    Rat sign = model.m[k] % 2 == 0 ? 1 : -1;
    high.scalar *= sign * Rat(int_pow(model.m[k], model.m[k]));
  }
  auto push_converted = [&](long k, long i) {
    high.shifts.push_back(make_rat(i - sector.mvec[k], model.m[k]) + half_r);
  };
  const long skip = sector.mvec[kprime] % model.m[kprime];
  for (long i = 0; i < model.m[kprime]; ++i)
    if (i != skip) push_converted(kprime, i);
  for (long k = 0; k < model.modes_b(); ++k) {
    if (k == kprime) continue;
    for (long i = 0; i < model.m[k]; ++i) push_converted(k, i);
  }
  return terms;
}

std::vector<Sl2Term> sl2_expansion(const Model& model, const SectorLabel& sector) {
  check_sector(model, sector);
  long lprime = -1, kprime = -1;
  for (long l = 0; l < model.modes_a() && lprime < 0; ++l)
    if (sector.nvec[l] < model.n[l]) lprime = l;
  for (long k = 0; k < model.modes_b() && kprime < 0; ++k)
    if (sector.mvec[k] / model.m[k] == sector.r) kprime = k;
  return sl2_expansion_with_choice(model, sector, lprime, kprime);
}

ReducedOperator sl2_matrix(const std::vector<Sl2Term>& terms, long r) {
  const Sl2Generators g = sl2_generators(r);
  const RatMatrix id = RatMatrix::identity(r + 1);
  RatMatrix sum = RatMatrix::zero(r + 1);
  for (const Sl2Term& term : terms) {
    RatMatrix acc = term.leading == Sl2Term::Leading::jminus ? g.jminus : g.jplus;
    for (const Rat& shift : term.shifts) acc = acc * (g.jzero + shift * id);
    sum = sum + term.scalar * acc;
  }

  ReducedOperator op;
  op.dim = r + 1;
  op.entries.assign(op.dim * op.dim, Int(0));
  op.built_from = ReducedOperator::Source::sl2;
  for (long row = 0; row <= r; ++row)
    for (long col = 0; col <= r; ++col) {
      const Rat& value = sum.at(row, col);
      if (value.get_den() != 1)
        fail(errc::non_integer_entry, "entry (" + std::to_string(row) + "," +
                                          std::to_string(col) + ") = " + to_string(value));
      if (std::labs(row - col) != 1 && value != 0)
        fail(errc::not_tridiagonal, "term list is not a ladder operator for r=" +
                                        std::to_string(r));
      op.at(row, col) = value.get_num();
    }
  return op;
}

std::string format_terms(const std::vector<Sl2Term>& terms) {
  std::string out;
  for (std::size_t pos = 0; pos < terms.size(); ++pos) {
    const Sl2Term& term = terms[pos];
    if (pos > 0) out += " + ";
    if (term.scalar != 1) {
      const std::string s = to_string(term.scalar);
      out += term.scalar < 0 ? "(" + s + ")" : s;
      out += " * ";
    }
    out += term.leading == Sl2Term::Leading::jminus ? "J-" : "J+";
    for (const Rat& shift : term.shifts) {
      if (shift == 0)
        out += " * (J0)";
      else if (shift < 0)
        out += " * (J0 - " + to_string(Rat(-shift)) + ")";
      else
        out += " * (J0 + " + to_string(shift) + ")";
    }
  }
  return out;
}

}  // namespace qes
