#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qes/model.hpp"

namespace qes {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  long max_r = 10;             // sector size cap for the matrix-route checks
  long max_photons = 12;       // degree bound for enumeration and scans
  int probes = 50;             // random states per commutator pair
  int max_exponent = 30;       // exponent cap for random probes
  std::uint64_t seed = 0;
  double tol = 1e-12;
};

// Cross-checks every route the toolkit computes: commutation of the full
// operator family (plus a deliberately broken model as a counterexample),
// sector completeness against exhaustive scans, the oracle matrix against
// the closed-form builder, the generator expansion against the direct
// reduced operator, the norm conjugation, and spectral invariants.
std::vector<CheckResult> run_verification(const Model& model, const VerifyOptions& options);

}  // namespace qes
