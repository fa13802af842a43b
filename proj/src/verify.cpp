#include "qes/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qes/io.hpp"
#include "qes/matrix.hpp"
#include "qes/oracle.hpp"
#include "qes/sectors.hpp"
#include "qes/sl2.hpp"
#include "qes/spectral.hpp"

namespace qes {

namespace {

struct NamedOp {
  std::string name;
  const PolyOperator* op;
};

std::vector<NamedOp> named_family(const OperatorSet& ops) {
  std::vector<NamedOp> family{{"H0", &ops.h0}, {"H1", &ops.h1}};
  for (std::size_t l = 0; l < ops.a.size(); ++l)
    family.push_back({"A" + std::to_string(l + 1), &ops.a[l]});
  for (std::size_t k = 0; k < ops.b.size(); ++k)
    family.push_back({"B" + std::to_string(k + 1), &ops.b[k]});
  return family;
}

CheckResult check_commutation(const Model& model, const VerifyOptions& opt) {
  const OperatorSet ops = build_operators(model);
  const std::vector<NamedOp> family = named_family(ops);
  const std::vector<MonomialState> probes =
      random_probes(model, opt.probes, opt.max_exponent, opt.seed);

  long pairs = 0;
  for (std::size_t x = 0; x < family.size(); ++x)
    for (std::size_t y = x + 1; y < family.size(); ++y) {
      ++pairs;
      const CommutatorReport report = commutator_check(*family[x].op, *family[y].op, probes);
      if (!report.commute) {
        return {"commutation", false,
                "[" + family[x].name + "," + family[y].name + "] != 0 on " +
                    format_monomial(*report.witness) + "; residual " +
                    format_combo(report.residual)};
      }
    }
  return {"commutation", true,
          std::to_string(pairs) + " pairs x " + std::to_string(probes.size()) + " probes"};
}

CheckResult check_broken_constraint(const Model& model, const VerifyOptions& opt) {
  Model broken = model;
  broken.nu[0] += 1;  // detunes the conservation identity by construction

  std::vector<MonomialState> probes =
      random_probes(broken, opt.probes, opt.max_exponent, opt.seed + 1);
  MonomialState direct;  // x^n reaches the conversion term with one step
  direct.i = broken.n;
  direct.j.assign(broken.modes_b(), 0);
  probes.insert(probes.begin(), direct);

  const OperatorSet ops = build_operators(broken);
  const CommutatorReport report = commutator_check(ops.h0, ops.h1, probes);
  if (report.commute)
    return {"broken-constraint-witness", false,
            "detuned model still commutes on every probe; the check lost its teeth"};
  return {"broken-constraint-witness", true,
          "[H0,H1] != 0 on " + format_monomial(*report.witness) + " after detuning nu_1"};
}

long min_member_degree(const std::vector<MonomialState>& basis) {
  long best = basis[0].total_degree();
  for (const MonomialState& state : basis) best = std::min(best, state.total_degree());
  return best;
}

CheckResult check_completeness(const Model& model, const VerifyOptions& opt,
                               const std::vector<SectorLabel>& sectors) {
  for (const SectorLabel& sector : sectors) {
    const std::vector<MonomialState> basis = sector_basis(model, sector);
    std::vector<MonomialState> expected;
    const MonomialState* seed = nullptr;
    for (const MonomialState& state : basis)
      if (state.total_degree() <= opt.max_photons) {
        expected.push_back(state);
        if (!seed) seed = &state;
      }
    const BruteForceSector brute = brute_force_sector(model, *seed, opt.max_photons);
    std::vector<MonomialState> scanned = brute.states;
    std::sort(expected.begin(), expected.end());
    std::sort(scanned.begin(), scanned.end());
    if (scanned != expected)
      return {"sector-completeness", false,
              format_sector(sector) + ": scan found " + std::to_string(scanned.size()) +
                  " states, ladder predicts " + std::to_string(expected.size())};
  }
  return {"sector-completeness", true,
          std::to_string(sectors.size()) + " sectors vs exhaustive scans, degree <= " +
              std::to_string(opt.max_photons)};
}

// Scan bound that sees every member of the sector.
long sector_span_degree(const Model& model, const SectorLabel& sector) {
  long sum_n = 0, sum_m = 0;
  for (long e : model.n) sum_n += e;
  for (long e : model.m) sum_m += e;
  long deg0 = 0;
  for (long v : sector.nvec) deg0 += v;
  for (long v : sector.mvec) deg0 += v;
  return deg0 + std::max<long>(0, sector.r * (sum_n - sum_m));
}

CheckResult check_oracle_matrix(const Model& model, const std::vector<SectorLabel>& sectors) {
  for (const SectorLabel& sector : sectors) {
    const std::vector<MonomialState> basis = sector_basis(model, sector);
    const BruteForceSector brute =
        brute_force_sector(model, basis[0], sector_span_degree(model, sector));
    if (brute.states != basis)
      return {"oracle-matrix", false,
              format_sector(sector) + ": scan reconstructed " + std::to_string(brute.dim()) +
                  " states, ladder has " + std::to_string(basis.size())};
    const TridiagonalH1 t = build_tridiagonal(model, sector);
    for (long row = 0; row < brute.dim(); ++row)
      for (long col = 0; col < brute.dim(); ++col) {
        const SignedSq& element = brute.at(row, col);
        const bool coupled = std::labs(row - col) == 1;
        if (!coupled) {
          if (element.sign != 0)
            return {"oracle-matrix", false,
                    format_sector(sector) + ": unexpected coupling at (" + std::to_string(row) +
                        "," + std::to_string(col) + ")"};
          continue;
        }
        const Int& expected = t.offdiag_sq[std::min(row, col)];
        if (element.sign != 1 || element.square != Rat(expected))
          return {"oracle-matrix", false,
                  format_sector(sector) + ": entry (" + std::to_string(row) + "," +
                      std::to_string(col) + ") disagrees with the closed form"};
      }
  }
  return {"oracle-matrix", true,
          std::to_string(sectors.size()) + " sectors rebuilt from exhaustive scans"};
}

CheckResult check_sl2(const Model& model, const std::vector<SectorLabel>& sectors) {
  for (const SectorLabel& sector : sectors) {
    const ReducedOperator direct = reduced_direct(model, sector);
    const ReducedOperator via_sl2 = sl2_matrix(sl2_expansion(model, sector), sector.r);
    if (!direct.same_entries(via_sl2))
      return {"sl2-reduction", false,
              format_sector(sector) + ": generator expansion disagrees with the direct form"};
  }
  return {"sl2-reduction", true, std::to_string(sectors.size()) + " sectors, exact equality"};
}

CheckResult check_conjugation(const Model& model, const std::vector<SectorLabel>& sectors) {
  for (const SectorLabel& sector : sectors) {
    const TridiagonalH1 direct = build_tridiagonal(model, sector);
    const TridiagonalH1 conjugated =
        symmetrize_reduced(reduced_direct(model, sector), norm_constants(model, sector));
    if (direct.offdiag_sq != conjugated.offdiag_sq || direct.scale_log2 != conjugated.scale_log2)
      return {"norm-conjugation", false,
              format_sector(sector) + ": conjugated squares disagree with the direct build"};
  }
  return {"norm-conjugation", true, std::to_string(sectors.size()) + " sectors, exact equality"};
}

CheckResult check_spectral(const Model& model, const VerifyOptions& opt,
                           std::vector<SectorLabel> sectors) {
  std::sort(sectors.begin(), sectors.end(),
            [](const SectorLabel& a, const SectorLabel& b) { return a.r > b.r; });
  if (sectors.size() > 5) sectors.resize(5);

  for (const SectorLabel& sector : sectors) {
    const TridiagonalH1 t = build_tridiagonal(model, sector);
    const Spectrum sp = eigenvalues(t, opt.tol);  // dense cross-check runs inside
    const long dim = t.dim;

    for (long k = 0; k + 1 < dim; ++k)
      if (!(sp.eigenvalues[k] < sp.eigenvalues[k + 1]))
        return {"spectral-certificates", false,
                format_sector(sector) + ": eigenvalues not strictly increasing at " +
                    std::to_string(k)};

    const double slack = 2.0 * sp.certified_width + 1e-300;
    for (long k = 0; k < dim; ++k)
      if (!(std::fabs(sp.eigenvalues[k] + sp.eigenvalues[dim - 1 - k]) <= slack))
        return {"spectral-certificates", false,
                format_sector(sector) + ": spectrum is not symmetric around zero"};

    const double edge = t.inf_norm() + std::ldexp(t.inf_norm(), -40) + 1.0;
    if (sturm_count(t, edge) != dim || sturm_count(t, -edge) != 0)
      return {"spectral-certificates", false,
              format_sector(sector) + ": Sturm totals do not bracket the spectrum"};

    // parity of the minor sequence under probe negation, bitwise
    for (int probe = 1; probe <= 5; ++probe) {
      const double e = edge * probe / 6.0;
      const std::vector<double> plus = char_poly_sequence(t, e);
      const std::vector<double> minus = char_poly_sequence(t, -e);
      for (std::size_t s = 0; s < plus.size(); ++s) {
        const double mirrored = s % 2 == 0 ? minus[s] : -minus[s];
        if (mirrored != plus[s])
          return {"spectral-certificates", false,
                  format_sector(sector) + ": minor parity broken at index " + std::to_string(s)};
      }
    }
  }
  return {"spectral-certificates", true,
          std::to_string(sectors.size()) + " sectors certified to tol " + format_double(opt.tol)};
}

}  // namespace

std::vector<CheckResult> run_verification(const Model& model, const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  results.push_back(check_commutation(model, opt));
  results.push_back(check_broken_constraint(model, opt));

  const std::vector<SectorLabel> all = enumerate_sectors(model, opt.max_photons);
  results.push_back(check_completeness(model, opt, all));

  std::vector<SectorLabel> bounded;
  for (const SectorLabel& sector : all)
    if (sector.r <= opt.max_r) bounded.push_back(sector);

  results.push_back(check_oracle_matrix(model, bounded));
  results.push_back(check_sl2(model, bounded));
  results.push_back(check_conjugation(model, bounded));
  results.push_back(check_spectral(model, opt, bounded));
  return results;
}

}  // namespace qes
