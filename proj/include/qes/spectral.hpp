#pragma once

#include <vector>

#include "qes/matrix.hpp"

namespace qes {

// Certified eigenvalues of one sector matrix. Values live at the matrix
// scale: true eigenvalue = eigenvalues[k] * 2^scale_log2.
struct Spectrum {
  enum class Method { sturm_bisection, dense_crosscheck };

  std::vector<double> eigenvalues;  // ascending
  double certified_width = 0.0;     // every value is within width/2 of exact
  long scale_log2 = 0;
  Method method = Method::sturm_bisection;
};

// Leading principal minors delta_0..delta_dim of e*I - H, with the running
// pair rescaled by powers of two when it leaves [2^-512, 2^512]. Signs are
// what matter; the rescaling never touches them.
std::vector<double> char_poly_sequence(const TridiagonalH1& matrix, double e);

// Number of eigenvalues strictly below e, by Sturm sign agreement counting.
// An exact zero minor takes the sign opposite to its predecessor, so the
// result is deterministic even at roots.
long sturm_count(const TridiagonalH1& matrix, double e);

// All dim eigenvalues by bisection, each bracketed to width
// tol * max(1, inf_norm). For dim <= 2000 the result is cross-checked
// against the dense solver; disagreement is an internal error.
Spectrum eigenvalues(const TridiagonalH1& matrix, double tol);

// Implicit-shift dense tridiagonal solver, used as the independent route.
Spectrum dense_eigenvalues(const TridiagonalH1& matrix);

struct TotalLevel {
  double total;   // e0 + g * lambda
  double lambda;  // conversion-term eigenvalue, unscaled
};

// Full interacting levels of one sector.
std::vector<TotalLevel> full_spectrum(const Model& model, const SectorLabel& sector, double tol);

// Spectrum of p(H1) on the sector, by functional calculus on the eigenvalues.
// Coefficients are ascending in degree. Duplicates are kept; order ascending.
std::vector<double> poly_spectrum(const TridiagonalH1& matrix,
                                  const std::vector<double>& coeffs, double tol);

}  // namespace qes
