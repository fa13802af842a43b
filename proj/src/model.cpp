#include "qes/model.hpp"

#include "qes/errors.hpp"

namespace qes {

Rat pump_energy(const Model& model) {
  Rat sum = 0;
  for (std::size_t l = 0; l < model.n.size(); ++l) sum += Rat(model.n[l]) * model.nu[l];
  return sum;
}

Rat converted_energy(const Model& model) {
  Rat sum = 0;
  for (std::size_t k = 0; k < model.m.size(); ++k) sum += Rat(model.m[k]) * model.mu[k];
  return sum;
}

Model validate(const Model& raw) {
  if (raw.n.empty() || raw.m.empty())
    fail(errc::empty_mode_list, "a model needs at least one pump and one converted mode");
  if (raw.nu.size() != raw.n.size())
    fail(errc::dimension_mismatch, "nu and n must have the same length");
  if (raw.mu.size() != raw.m.size())
    fail(errc::dimension_mismatch, "mu and m must have the same length");
  for (long e : raw.n)
    if (e < 1) fail(errc::non_positive_exponent, "pump exponents must be >= 1");
  for (long e : raw.m)
    if (e < 1) fail(errc::non_positive_exponent, "converted exponents must be >= 1");

  Model model = raw;
  for (Rat& f : model.nu) {
    mpq_canonicalize(f.get_mpq_t());
    if (f <= 0) fail(errc::non_positive_frequency, "pump frequency " + to_string(f));
  }
  for (Rat& f : model.mu) {
    mpq_canonicalize(f.get_mpq_t());
    if (f <= 0) fail(errc::non_positive_frequency, "converted frequency " + to_string(f));
  }

  const Rat pump = pump_energy(model);
  const Rat converted = converted_energy(model);
  if (pump != converted) {
    fail(errc::constraint_violated, "energy conservation requires sum(n*nu) == sum(m*mu); got " +
                                        to_string(pump) + " vs " + to_string(converted));
  }
  return model;
}

ModelClass model_kind(const Model& model) {
  if (model.modes_a() == 1 && model.modes_b() == 1 && model.m[0] == 1)
    return {ModelKind::harmonic_generation, model.n[0]};
  bool cascade = model.modes_b() == 1 && model.m[0] == 1;
  for (long e : model.n) cascade = cascade && e == 1;
  if (cascade) return {ModelKind::photon_cascade, 0};
  return {ModelKind::general, 0};
}

}  // namespace qes
