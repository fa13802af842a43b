#pragma once

#include <vector>

#include "qes/sectors.hpp"
#include "qes/sl2.hpp"

namespace qes {

// Squared norms of the unnormalized sector members, as exact integers.
struct NormConstants {
  std::vector<Int> c;
};

// Symmetric tridiagonal matrix of the conversion term on the orthonormalized
// sector basis. The diagonal is identically zero; only the off-diagonal is
// stored. offdiag_sq holds the exact squares; offdiag holds floating square
// roots scaled by 2^-scale_log2 so they stay representable when the exact
// values outgrow double range.
struct TridiagonalH1 {
  long dim = 1;
  std::vector<Int> offdiag_sq;  // size dim-1, entry s couples rungs s and s+1
  std::vector<double> offdiag;  // same layout, scaled
  long scale_log2 = 0;

  // Max row sum of |entries| of the scaled floating matrix.
  double inf_norm() const;
};

NormConstants norm_constants(const Model& model, const SectorLabel& sector);

// Exact squared coupling between rungs s-1 and s, for s in 1..r.
Int offdiag_sq(const Model& model, const SectorLabel& sector, long s);

TridiagonalH1 build_tridiagonal(const Model& model, const SectorLabel& sector);

// Floating pipeline shared by every producer of exact squares: validates
// positivity and picks the power-of-two scale.
TridiagonalH1 tridiagonal_from_squares(std::vector<Int> squares);

// Conjugates an exact reduced operator by the norm diagonal. Verifies the
// similarity really is symmetric (an exact integer identity) before taking
// square roots.
TridiagonalH1 symmetrize_reduced(const ReducedOperator& reduced, const NormConstants& norms);

}  // namespace qes
