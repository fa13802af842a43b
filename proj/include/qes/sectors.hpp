#pragma once

#include <compare>
#include <vector>

#include "qes/model.hpp"

namespace qes {

// One monomial basis state x^i y^j of the Fock space, exponents per mode.
struct MonomialState {
  std::vector<long> i;  // pump exponents
  std::vector<long> j;  // converted exponents

  long total_degree() const;
  bool operator==(const MonomialState&) const = default;
  // lexicographic on (i, j); gives scan results a canonical order
  auto operator<=>(const MonomialState&) const = default;
};

// Conserved quantities of a state under the full commuting set. Two states
// interact only if every one of these agrees.
struct QuantumNumbers {
  Rat e0;                   // free-field energy
  std::vector<long> alpha;  // pump imbalances, one per adjacent pump pair
  std::vector<long> beta;   // converted imbalances
  bool operator==(const QuantumNumbers&) const = default;
};

// Canonical label of a finite invariant sector: the exponents of the
// lowest-rung member plus the number of conversion steps r.
struct SectorLabel {
  std::vector<long> nvec;
  std::vector<long> mvec;
  long r = 0;

  long dim() const { return r + 1; }
  bool operator==(const SectorLabel&) const = default;
  auto operator<=>(const SectorLabel&) const = default;
};

QuantumNumbers quantum_numbers(const Model& model, const MonomialState& state);

// Slides the given state to the lowest rung of its ladder and reads off the
// sector label. Total for every well-formed state.
SectorLabel canonicalize(const Model& model, const MonomialState& state);

// Throws InvalidSector unless the label is canonical for this model.
void check_sector(const Model& model, const SectorLabel& sector);

// Members ordered by rung: i = nvec + s*n, j = mvec - s*m for s = 0..r.
std::vector<MonomialState> sector_basis(const Model& model, const SectorLabel& sector);

// All sectors with at least one member of total degree <= max_photons,
// sorted lexicographically on (nvec, mvec). Scans the monomial lattice and
// deduplicates canonical labels; parallel over the leading exponent.
std::vector<SectorLabel> enumerate_sectors(const Model& model, long max_photons);

}  // namespace qes
