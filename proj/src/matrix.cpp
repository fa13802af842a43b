#include "qes/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "qes/errors.hpp"

namespace qes {

double TridiagonalH1::inf_norm() const {
  double prev = 0.0, norm = 0.0;
  for (double h : offdiag) {
    norm = std::max(norm, prev + h);
    prev = h;
  }
  return std::max(norm, prev);
}

NormConstants norm_constants(const Model& model, const SectorLabel& sector) {
  check_sector(model, sector);
  NormConstants norms;
  norms.c.reserve(sector.dim());
  for (long s = 0; s <= sector.r; ++s) {
    Int c = 1;
    for (std::size_t l = 0; l < sector.nvec.size(); ++l)
      c *= factorial(sector.nvec[l] + model.n[l] * s);
    for (std::size_t k = 0; k < sector.mvec.size(); ++k)
      c *= factorial(sector.mvec[k] - model.m[k] * s);
    norms.c.push_back(c);
  }
  return norms;
}

namespace {

Int offdiag_sq_unchecked(const Model& model, const SectorLabel& sector, long s) {
  Int prod = 1;
  for (std::size_t l = 0; l < sector.nvec.size(); ++l) {
    const long base = sector.nvec[l] + model.n[l] * (s - 1);
    for (long j = 1; j <= model.n[l]; ++j) prod *= base + j;
  }
  for (std::size_t k = 0; k < sector.mvec.size(); ++k) {
    const long base = sector.mvec[k] - model.m[k] * (s - 1);
    for (long i = 0; i < model.m[k]; ++i) prod *= base - i;
  }
  return prod;
}

}  // namespace

Int offdiag_sq(const Model& model, const SectorLabel& sector, long s) {
  check_sector(model, sector);
  if (s < 1 || s > sector.r)
    fail(errc::index_out_of_range,
         "offdiagonal index " + std::to_string(s) + " outside 1.." + std::to_string(sector.r));
  return offdiag_sq_unchecked(model, sector, s);
}

TridiagonalH1 build_tridiagonal(const Model& model, const SectorLabel& sector) {
  check_sector(model, sector);
  std::vector<Int> squares(sector.r);
  for (long s = 1; s <= sector.r; ++s) squares[s - 1] = offdiag_sq_unchecked(model, sector, s);
  return tridiagonal_from_squares(std::move(squares));
}

TridiagonalH1 tridiagonal_from_squares(std::vector<Int> squares) {
  TridiagonalH1 t;
  t.dim = static_cast<long>(squares.size()) + 1;
  t.offdiag.resize(squares.size());
  t.offdiag_sq = std::move(squares);

  std::size_t max_bits = 0;
  for (const Int& sq : t.offdiag_sq) {
    if (sq <= 0)
      fail(errc::invalid_sector, "off-diagonal squares must be positive; got " + to_string(sq));
    max_bits = std::max(max_bits, mpz_sizeinbase(sq.get_mpz_t(), 2));
  }

  if (max_bits <= 1000) {
    for (std::size_t s = 0; s < t.offdiag.size(); ++s)
      t.offdiag[s] = std::sqrt(t.offdiag_sq[s].get_d());
    return t;
  }

  // Entries too large for double: split each square into mantissa * 2^exp and
  // factor one shared power of two out of the square roots. The scale is
  // exact, so no precision is lost to its size.
  std::vector<double> mant(t.offdiag.size());
  std::vector<long> half_exp(t.offdiag.size());
  long max_half = 0;
  for (std::size_t s = 0; s < t.offdiag.size(); ++s) {
    long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, t.offdiag_sq[s].get_mpz_t());
    if (exp2 % 2 != 0) {
      m *= 2.0;
      exp2 -= 1;
    }
    mant[s] = std::sqrt(m);
    half_exp[s] = exp2 / 2;
    max_half = std::max(max_half, half_exp[s]);
  }
  t.scale_log2 = max_half;
  for (std::size_t s = 0; s < t.offdiag.size(); ++s)
    t.offdiag[s] = std::ldexp(mant[s], half_exp[s] - max_half);
  return t;
}

TridiagonalH1 symmetrize_reduced(const ReducedOperator& reduced, const NormConstants& norms) {
  const long dim = reduced.dim;
  if (dim != static_cast<long>(norms.c.size()))
    fail(errc::dimension_mismatch, "norm constants do not match the operator dimension");

  for (long row = 0; row < dim; ++row)
    for (long col = 0; col < dim; ++col)
      if (std::labs(row - col) != 1 && reduced.at(row, col) != 0)
        fail(errc::not_tridiagonal, "nonzero entry at (" + std::to_string(row) + "," +
                                        std::to_string(col) + ")");

  std::vector<Int> squares(dim - 1);
  for (long s = 0; s + 1 < dim; ++s) {
    const Int& sub = reduced.at(s + 1, s);
    const Int& sup = reduced.at(s, s + 1);
    if (sub * norms.c[s + 1] != sup * norms.c[s])
      fail(errc::asymmetry_detected,
           "conjugated entries disagree across the diagonal at rung " + std::to_string(s));
    squares[s] = sub * sup;
  }
  return tridiagonal_from_squares(std::move(squares));
}

}  // namespace qes
