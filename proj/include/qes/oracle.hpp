#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qes/matrix.hpp"
#include "qes/sectors.hpp"

namespace qes {

// One normal-ordered term c * x^xpow y^ypow d/dx^dxpow d/dy^dypow, with one
// exponent per mode. Derivatives act first.
struct OpTerm {
  Rat coeff;
  std::vector<long> xpow, ypow, dxpow, dypow;
};

// Polynomial differential operator in the multiplication-and-derivative
// picture of the Fock space; the independent route used to check everything
// the closed-form builders produce.
struct PolyOperator {
  std::vector<OpTerm> terms;
};

// Finite rational combination of monomial states.
struct MonomialCombo {
  std::map<MonomialState, Rat> entries;

  bool is_zero() const { return entries.empty(); }
  bool operator==(const MonomialCombo&) const = default;
};

// The commuting family: free part, conversion term, and the pairwise
// imbalance charges.
struct OperatorSet {
  PolyOperator h0;
  PolyOperator h1;
  std::vector<PolyOperator> a;  // one per adjacent pump pair
  std::vector<PolyOperator> b;  // one per adjacent converted pair
};

OperatorSet build_operators(const Model& model);

MonomialCombo apply(const PolyOperator& op, const MonomialState& state);
MonomialCombo apply(const PolyOperator& op, const MonomialCombo& combo);

struct CommutatorReport {
  bool commute = true;
  std::optional<MonomialState> witness;  // first probe with a nonzero residual
  MonomialCombo residual;
};

// Evaluates [lhs, rhs] on every probe.
CommutatorReport commutator_check(const PolyOperator& lhs, const PolyOperator& rhs,
                                  const std::vector<MonomialState>& probes);

// Signed exact square: sign * sqrt(square). Matrix elements on the
// orthonormal basis are square roots of rationals, so this carries them
// without any rounding.
struct SignedSq {
  int sign = 0;  // -1, 0, +1
  Rat square;    // nonnegative
  bool operator==(const SignedSq&) const = default;
};

// Exhaustive reconstruction of one sector: every state of total degree at
// most max_photons sharing the seed's quantum numbers, plus the dense matrix
// of the conversion term on the orthonormalized span.
struct BruteForceSector {
  std::vector<MonomialState> states;  // ascending pump degree
  std::vector<SignedSq> elements;     // row-major dim x dim

  long dim() const { return static_cast<long>(states.size()); }
  const SignedSq& at(long row, long col) const { return elements[row * dim() + col]; }
};

BruteForceSector brute_force_sector(const Model& model, const MonomialState& seed,
                                    long max_photons);

// Deterministic pseudo-random states for property probes.
std::vector<MonomialState> random_probes(const Model& model, int count, int max_exponent,
                                         std::uint64_t seed);

std::string format_combo(const MonomialCombo& combo);

}  // namespace qes
