#include "qes/sectors.hpp"

#include <algorithm>
#include <set>

#include "qes/errors.hpp"

namespace qes {

long MonomialState::total_degree() const {
  long sum = 0;
  for (long v : i) sum += v;
  for (long v : j) sum += v;
  return sum;
}

namespace {

void check_state_shape(const Model& model, const MonomialState& state) {
  if (static_cast<long>(state.i.size()) != model.modes_a() ||
      static_cast<long>(state.j.size()) != model.modes_b())
    fail(errc::dimension_mismatch, "state exponent counts do not match the model");
  for (long v : state.i)
    if (v < 0) fail(errc::negative_exponent, "pump exponent below zero");
  for (long v : state.j)
    if (v < 0) fail(errc::negative_exponent, "converted exponent below zero");
}

}  // namespace

QuantumNumbers quantum_numbers(const Model& model, const MonomialState& state) {
  check_state_shape(model, state);
  QuantumNumbers qn;
  qn.e0 = 0;
  for (std::size_t l = 0; l < state.i.size(); ++l) qn.e0 += Rat(state.i[l]) * model.nu[l];
  for (std::size_t k = 0; k < state.j.size(); ++k) qn.e0 += Rat(state.j[k]) * model.mu[k];
  for (std::size_t l = 0; l + 1 < state.i.size(); ++l)
    qn.alpha.push_back(model.n[l + 1] * state.i[l] - model.n[l] * state.i[l + 1]);
  for (std::size_t k = 0; k + 1 < state.j.size(); ++k)
    qn.beta.push_back(model.m[k + 1] * state.j[k] - model.m[k] * state.j[k + 1]);
  return qn;
}

SectorLabel canonicalize(const Model& model, const MonomialState& state) {
  check_state_shape(model, state);
  // largest downward slide that keeps every pump exponent nonnegative
  long s0 = state.i[0] / model.n[0];
  for (std::size_t l = 1; l < state.i.size(); ++l)
    s0 = std::min(s0, state.i[l] / model.n[l]);
  s0 = -s0;

  SectorLabel sector;
  sector.nvec.resize(state.i.size());
  sector.mvec.resize(state.j.size());
  for (std::size_t l = 0; l < state.i.size(); ++l) {
    sector.nvec[l] = state.i[l] + s0 * model.n[l];
    if (sector.nvec[l] < 0) fail(errc::negative_exponent, "slide produced a negative exponent");
  }
  for (std::size_t k = 0; k < state.j.size(); ++k) {
    sector.mvec[k] = state.j[k] - s0 * model.m[k];
    if (sector.mvec[k] < 0) fail(errc::negative_exponent, "slide produced a negative exponent");
  }
  sector.r = sector.mvec[0] / model.m[0];
  for (std::size_t k = 1; k < sector.mvec.size(); ++k)
    sector.r = std::min(sector.r, sector.mvec[k] / model.m[k]);
  return sector;
}

void check_sector(const Model& model, const SectorLabel& sector) {
  if (static_cast<long>(sector.nvec.size()) != model.modes_a() ||
      static_cast<long>(sector.mvec.size()) != model.modes_b())
    fail(errc::invalid_sector, "sector exponent counts do not match the model");
  for (long v : sector.nvec)
    if (v < 0) fail(errc::invalid_sector, "negative pump exponent in sector label");
  for (long v : sector.mvec)
    if (v < 0) fail(errc::invalid_sector, "negative converted exponent in sector label");

  bool at_bottom = false;  // some pump mode cannot absorb another conversion step
  for (std::size_t l = 0; l < sector.nvec.size(); ++l)
    at_bottom = at_bottom || sector.nvec[l] < model.n[l];
  if (!at_bottom)
    fail(errc::invalid_sector, "label is not the lowest rung of its ladder");

  long r = sector.mvec[0] / model.m[0];
  for (std::size_t k = 1; k < sector.mvec.size(); ++k)
    r = std::min(r, sector.mvec[k] / model.m[k]);
  if (r != sector.r)
    fail(errc::invalid_sector, "declared r=" + std::to_string(sector.r) +
                                   " but the label supports r=" + std::to_string(r));
}

std::vector<MonomialState> sector_basis(const Model& model, const SectorLabel& sector) {
  check_sector(model, sector);
  std::vector<MonomialState> basis(sector.dim());
  for (long s = 0; s <= sector.r; ++s) {
    MonomialState& state = basis[s];
    state.i.resize(sector.nvec.size());
    state.j.resize(sector.mvec.size());
    for (std::size_t l = 0; l < sector.nvec.size(); ++l)
      state.i[l] = sector.nvec[l] + s * model.n[l];
    for (std::size_t k = 0; k < sector.mvec.size(); ++k)
      state.j[k] = sector.mvec[k] - s * model.m[k];
  }
  return basis;
}

namespace {

// Enumerates the exponents at position pos..end with the remaining degree
// budget and records every canonical label reached.
void scan_tail(const Model& model, MonomialState& state, std::size_t pos, long budget,
               std::set<SectorLabel>& found) {
  const std::size_t na = state.i.size();
  const std::size_t total = na + state.j.size();
  if (pos == total) {
    found.insert(canonicalize(model, state));
    return;
  }
  long& slot = pos < na ? state.i[pos] : state.j[pos - na];
  for (long v = 0; v <= budget; ++v) {
    slot = v;
    scan_tail(model, state, pos + 1, budget - v, found);
  }
  slot = 0;
}

}  // namespace

std::vector<SectorLabel> enumerate_sectors(const Model& model, long max_photons) {
  if (max_photons < 0) return {};
  std::vector<std::set<SectorLabel>> partial(max_photons + 1);

#pragma omp parallel for schedule(dynamic)
  for (long lead = 0; lead <= max_photons; ++lead) {
    MonomialState state;
    state.i.assign(model.modes_a(), 0);
    state.j.assign(model.modes_b(), 0);
    state.i[0] = lead;
    scan_tail(model, state, 1, max_photons - lead, partial[lead]);
  }

  std::set<SectorLabel> merged;
  for (auto& part : partial) merged.merge(part);
  return {merged.begin(), merged.end()};
}

}  // namespace qes
