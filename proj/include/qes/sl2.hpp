#pragma once

#include <string>
#include <vector>

#include "qes/sectors.hpp"

namespace qes {

// Dense matrix over the rationals, row-major. Small: sector dimensions only.
struct RatMatrix {
  long dim = 0;
  std::vector<Rat> a;

  static RatMatrix zero(long dim);
  static RatMatrix identity(long dim);

  Rat& at(long row, long col) { return a[row * dim + col]; }
  const Rat& at(long row, long col) const { return a[row * dim + col]; }
  bool operator==(const RatMatrix&) const = default;
};

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
RatMatrix operator+(const RatMatrix& lhs, const RatMatrix& rhs);
RatMatrix operator-(const RatMatrix& lhs, const RatMatrix& rhs);
RatMatrix operator*(const Rat& scalar, const RatMatrix& matrix);

// Exact integer matrix of the conversion term on a sector basis, before
// normalization. Tridiagonal with zero diagonal for every valid sector.
struct ReducedOperator {
  enum class Source { direct, sl2 };

  long dim = 1;
  std::vector<Int> entries;  // row-major dim x dim
  Source built_from = Source::direct;

  Int& at(long row, long col) { return entries[row * dim + col]; }
  const Int& at(long row, long col) const { return entries[row * dim + col]; }
  bool same_entries(const ReducedOperator& other) const {
    return dim == other.dim && entries == other.entries;
  }
};

// Spin-(r/2) generator triple acting on the ladder monomials of one sector.
struct Sl2Generators {
  RatMatrix jplus, jzero, jminus;
};

Sl2Generators sl2_generators(long r);

// One product term: scalar * leading * (J0 + shift_1) * ... * (J0 + shift_p).
struct Sl2Term {
  enum class Leading { jminus, jplus };
  Leading leading = Leading::jminus;
  Rat scalar;
  std::vector<Rat> shifts;
  bool operator==(const Sl2Term&) const = default;
};

// Conversion term restricted to a sector, written directly from the closed
// form for its action on the ladder.
ReducedOperator reduced_direct(const Model& model, const SectorLabel& sector);

// The same operator as a two-term product expansion in the generators. The
// lowering term drops one pump factor, the raising term one converted factor;
// lprime/kprime pick which. Defaults choose the smallest valid index.
std::vector<Sl2Term> sl2_expansion(const Model& model, const SectorLabel& sector);
std::vector<Sl2Term> sl2_expansion_with_choice(const Model& model, const SectorLabel& sector,
                                               long lprime, long kprime);

// Evaluates a term list to an exact matrix. Every entry must come out an
// integer; anything else means the expansion is wrong for this r.
ReducedOperator sl2_matrix(const std::vector<Sl2Term>& terms, long r);

// "4 * J- * (J0 + 1/2) + (-1) * J+"
std::string format_terms(const std::vector<Sl2Term>& terms);

}  // namespace qes
