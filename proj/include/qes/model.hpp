#pragma once

#include <vector>

#include "qes/rational.hpp"

namespace qes {

// Photon-conversion model: N pump modes with frequencies nu and conversion
// exponents n, M converted modes with frequencies mu and exponents m, coupled
// with strength g. Frequencies are exact rationals so the energy-conservation
// identity sum(n_l nu_l) == sum(m_k mu_k) is decidable, not approximate.
struct Model {
  std::vector<Rat> nu;  // pump frequencies, all > 0
  std::vector<Rat> mu;  // converted frequencies, all > 0
  std::vector<long> n;  // pump exponents, all >= 1
  std::vector<long> m;  // converted exponents, all >= 1
  double g = 1.0;       // coupling; scales the conversion term only

  long modes_a() const { return static_cast<long>(n.size()); }
  long modes_b() const { return static_cast<long>(m.size()); }
};

enum class ModelKind { harmonic_generation, photon_cascade, general };

struct ModelClass {
  ModelKind kind = ModelKind::general;
  long harmonic = 0;  // n for harmonic_generation, 0 otherwise
};

// Checks shapes, positivity, and the exact conservation identity; returns the
// model with canonicalized frequencies.
Model validate(const Model& raw);

ModelClass model_kind(const Model& model);

Rat pump_energy(const Model& model);       // sum n_l nu_l
Rat converted_energy(const Model& model);  // sum m_k mu_k

}  // namespace qes
