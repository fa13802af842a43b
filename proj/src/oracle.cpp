#include "qes/oracle.hpp"

#include <algorithm>
#include <random>

#include "qes/errors.hpp"

namespace qes {

namespace {

OpTerm blank_term(const Model& model) {
  OpTerm term;
  term.coeff = 1;
  term.xpow.assign(model.n.size(), 0);
  term.dxpow.assign(model.n.size(), 0);
  term.ypow.assign(model.m.size(), 0);
  term.dypow.assign(model.m.size(), 0);
  return term;
}

}  // namespace

OperatorSet build_operators(const Model& model) {
  OperatorSet ops;

  for (std::size_t l = 0; l < model.n.size(); ++l) {
    OpTerm term = blank_term(model);
    term.coeff = model.nu[l];
    term.xpow[l] = 1;
    term.dxpow[l] = 1;
    ops.h0.terms.push_back(term);
  }
  for (std::size_t k = 0; k < model.m.size(); ++k) {
    OpTerm term = blank_term(model);
    term.coeff = model.mu[k];
    term.ypow[k] = 1;
    term.dypow[k] = 1;
    ops.h0.terms.push_back(term);
  }

  // conversion term: y^m d/dx^n + x^n d/dy^m across all modes
  OpTerm down = blank_term(model);
  OpTerm up = blank_term(model);
  for (std::size_t l = 0; l < model.n.size(); ++l) {
    down.dxpow[l] = model.n[l];
    up.xpow[l] = model.n[l];
  }
  for (std::size_t k = 0; k < model.m.size(); ++k) {
    down.ypow[k] = model.m[k];
    up.dypow[k] = model.m[k];
  }
  ops.h1.terms.push_back(down);
  ops.h1.terms.push_back(up);

  for (std::size_t l = 0; l + 1 < model.n.size(); ++l) {
    PolyOperator charge;
    OpTerm left = blank_term(model);
    left.coeff = model.n[l + 1];
    left.xpow[l] = 1;
    left.dxpow[l] = 1;
    OpTerm right = blank_term(model);
    right.coeff = -Rat(model.n[l]);
    right.xpow[l + 1] = 1;
    right.dxpow[l + 1] = 1;
    charge.terms = {left, right};
    ops.a.push_back(charge);
  }
  for (std::size_t k = 0; k + 1 < model.m.size(); ++k) {
    PolyOperator charge;
    OpTerm left = blank_term(model);
    left.coeff = model.m[k + 1];
    left.ypow[k] = 1;
    left.dypow[k] = 1;
    OpTerm right = blank_term(model);
    right.coeff = -Rat(model.m[k]);
    right.ypow[k + 1] = 1;
    right.dypow[k + 1] = 1;
    charge.terms = {left, right};
    ops.b.push_back(charge);
  }
  return ops;
}

MonomialCombo apply(const PolyOperator& op, const MonomialState& state) {
  MonomialCombo out;
  for (const OpTerm& term : op.terms) {
    if (term.xpow.size() != state.i.size() || term.dxpow.size() != state.i.size() ||
        term.ypow.size() != state.j.size() || term.dypow.size() != state.j.size())
      fail(errc::dimension_mismatch, "operator term shape does not match the state");
    Rat coeff = term.coeff;
    MonomialState image = state;
    bool killed = false;
    for (std::size_t l = 0; l < term.dxpow.size() && !killed; ++l) {
      const long deg = term.dxpow[l];
      if (deg > state.i[l]) {
        killed = true;
        break;
      }
      if (deg > 0) coeff *= Rat(falling_factorial(state.i[l], deg));
      image.i[l] = state.i[l] - deg + term.xpow[l];
    }
    for (std::size_t k = 0; k < term.dypow.size() && !killed; ++k) {
      const long deg = term.dypow[k];
      if (deg > state.j[k]) {
        killed = true;
        break;
      }
      if (deg > 0) coeff *= Rat(falling_factorial(state.j[k], deg));
      image.j[k] = state.j[k] - deg + term.ypow[k];
    }
    if (killed || coeff == 0) continue;
    Rat& slot = out.entries[image];
    slot += coeff;
    if (slot == 0) out.entries.erase(image);
  }
  return out;
}

MonomialCombo apply(const PolyOperator& op, const MonomialCombo& combo) {
  MonomialCombo out;
  for (const auto& [state, weight] : combo.entries) {
    const MonomialCombo part = apply(op, state);
    for (const auto& [image, coeff] : part.entries) {
      Rat& slot = out.entries[image];
      slot += weight * coeff;
      if (slot == 0) out.entries.erase(image);
    }
  }
  return out;
}

CommutatorReport commutator_check(const PolyOperator& lhs, const PolyOperator& rhs,
                                  const std::vector<MonomialState>& probes) {
  CommutatorReport report;
  for (const MonomialState& probe : probes) {
    MonomialCombo forward = apply(lhs, apply(rhs, probe));
    const MonomialCombo backward = apply(rhs, apply(lhs, probe));
    for (const auto& [state, coeff] : backward.entries) {
      Rat& slot = forward.entries[state];
      slot -= coeff;
      if (slot == 0) forward.entries.erase(state);
    }
    if (!forward.is_zero()) {
      report.commute = false;
      report.witness = probe;
      report.residual = forward;
      return report;
    }
  }
  return report;
}

namespace {

// Backtracking scan state: integer quantum-number matching with the energy
// carried as an exact integer accumulator (frequencies times their lcm).
struct ScanContext {
  const Model* model;
  long max_photons = 0;
  std::vector<Int> weight_i, weight_j;  // nu_l * L, mu_k * L
  Int target_energy;
  std::vector<long> target_alpha, target_beta;
};

ScanContext make_context(const Model& model, const MonomialState& seed, long max_photons) {
  ScanContext ctx;
  ctx.model = &model;
  ctx.max_photons = max_photons;

  Int lcm = 1;
  for (const Rat& f : model.nu) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.get_den().get_mpz_t());
  for (const Rat& f : model.mu) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.get_den().get_mpz_t());
  for (const Rat& f : model.nu) ctx.weight_i.push_back(Int(f.get_num() * (lcm / f.get_den())));
  for (const Rat& f : model.mu) ctx.weight_j.push_back(Int(f.get_num() * (lcm / f.get_den())));

  ctx.target_energy = 0;
  for (std::size_t l = 0; l < seed.i.size(); ++l)
    ctx.target_energy += ctx.weight_i[l] * seed.i[l];
  for (std::size_t k = 0; k < seed.j.size(); ++k)
    ctx.target_energy += ctx.weight_j[k] * seed.j[k];

  const QuantumNumbers qn = quantum_numbers(model, seed);
  ctx.target_alpha = qn.alpha;
  ctx.target_beta = qn.beta;
  return ctx;
}

bool charges_match(const ScanContext& ctx, const MonomialState& state) {
  const Model& model = *ctx.model;
  for (std::size_t l = 0; l + 1 < state.i.size(); ++l)
    if (model.n[l + 1] * state.i[l] - model.n[l] * state.i[l + 1] != ctx.target_alpha[l])
      return false;
  for (std::size_t k = 0; k + 1 < state.j.size(); ++k)
    if (model.m[k + 1] * state.j[k] - model.m[k] * state.j[k + 1] != ctx.target_beta[k])
      return false;
  return true;
}

void scan_matches(const ScanContext& ctx, MonomialState& state, std::size_t pos, long budget,
                  Int& energy, std::vector<MonomialState>& matches) {
  const std::size_t na = state.i.size();
  const std::size_t total = na + state.j.size();
  if (pos == total) {
    if (energy == ctx.target_energy && charges_match(ctx, state)) matches.push_back(state);
    return;
  }
  long& slot = pos < na ? state.i[pos] : state.j[pos - na];
  const Int& weight = pos < na ? ctx.weight_i[pos] : ctx.weight_j[pos - na];
  for (long v = 0; v <= budget; ++v) {
    slot = v;
    scan_matches(ctx, state, pos + 1, budget - v, energy, matches);
    energy += weight;  // move to exponent v+1
  }
  // rewind the accumulator for this position
  energy -= weight * (budget + 1);
  slot = 0;
}

Int norm_square(const MonomialState& state) {
  Int norm = 1;
  for (long v : state.i) norm *= factorial(v);
  for (long v : state.j) norm *= factorial(v);
  return norm;
}

}  // namespace

BruteForceSector brute_force_sector(const Model& model, const MonomialState& seed,
                                    long max_photons) {
  if (static_cast<long>(seed.i.size()) != model.modes_a() ||
      static_cast<long>(seed.j.size()) != model.modes_b())
    fail(errc::dimension_mismatch, "seed exponent counts do not match the model");
  if (seed.total_degree() > max_photons)
    fail(errc::seed_too_large, "seed degree " + std::to_string(seed.total_degree()) +
                                   " exceeds the scan bound " + std::to_string(max_photons));

  const ScanContext ctx = make_context(model, seed, max_photons);

  // parallel over the leading exponent; per-lead results stay ordered
  std::vector<std::vector<MonomialState>> partial(max_photons + 1);
#pragma omp parallel for schedule(dynamic)
  for (long lead = 0; lead <= max_photons; ++lead) {
    MonomialState state;
    state.i.assign(model.modes_a(), 0);
    state.j.assign(model.modes_b(), 0);
    state.i[0] = lead;
    Int energy = ctx.weight_i[0] * lead;
    scan_matches(ctx, state, 1, max_photons - lead, energy, partial[lead]);
  }

  BruteForceSector sector;
  for (auto& part : partial)
    sector.states.insert(sector.states.end(), part.begin(), part.end());
  std::sort(sector.states.begin(), sector.states.end(),
            [](const MonomialState& a, const MonomialState& b) {
              long da = 0, db = 0;
              for (long v : a.i) da += v;
              for (long v : b.i) db += v;
              if (da != db) return da < db;
              return a < b;
            });

  const OperatorSet ops = build_operators(model);
  const long dim = sector.dim();
  std::vector<Int> norms(dim);
  for (long col = 0; col < dim; ++col) norms[col] = norm_square(sector.states[col]);

  sector.elements.assign(dim * dim, SignedSq{});
  for (long col = 0; col < dim; ++col) {
    const MonomialCombo image = apply(ops.h1, sector.states[col]);
    for (long row = 0; row < dim; ++row) {
      const auto found = image.entries.find(sector.states[row]);
      if (found == image.entries.end()) continue;
      const Rat& coeff = found->second;
      SignedSq& element = sector.elements[row * dim + col];
      element.sign = sgn(coeff);
      element.square = coeff * coeff * Rat(norms[row]) / Rat(norms[col]);
    }
  }
  return sector;
}

std::vector<MonomialState> random_probes(const Model& model, int count, int max_exponent,
                                         std::uint64_t seed) {
  if (count < 0 || max_exponent < 0) fail(errc::bad_input, "negative probe parameters");
  std::mt19937_64 rng(seed);
  std::vector<MonomialState> probes(count);
  for (MonomialState& probe : probes) {
    probe.i.resize(model.modes_a());
    probe.j.resize(model.modes_b());
    // plain modulo keeps the stream identical across standard libraries
    for (long& v : probe.i) v = static_cast<long>(rng() % (max_exponent + 1));
    for (long& v : probe.j) v = static_cast<long>(rng() % (max_exponent + 1));
  }
  return probes;
}

std::string format_combo(const MonomialCombo& combo) {
  if (combo.entries.empty()) return "0";
  std::string out;
  for (const auto& [state, coeff] : combo.entries) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff) + "*[";
    for (std::size_t l = 0; l < state.i.size(); ++l)
      out += (l ? "," : "i=") + std::to_string(state.i[l]);
    out += ";";
    for (std::size_t k = 0; k < state.j.size(); ++k)
      out += (k ? "," : "j=") + std::to_string(state.j[k]);
    out += "]";
  }
  return out;
}

}  // namespace qes
