#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "qes/errors.hpp"
#include "qes/io.hpp"
#include "qes/matrix.hpp"
#include "qes/oracle.hpp"
#include "qes/reference.hpp"
#include "qes/sectors.hpp"
#include "qes/sl2.hpp"
#include "qes/spectral.hpp"
#include "qes/threads.hpp"
#include "qes/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct RunConfig {
  std::string model_path;
  std::string sector_text;
  std::string monomial_text;
  double tol = 1e-12;
  long max_photons = 8;
  long max_r = 10;
  std::string format = "json";
  std::uint64_t seed = 0;
};

qes::SectorLabel resolve_sector(const qes::Model& model, const RunConfig& cfg) {
  if (cfg.sector_text.empty() == cfg.monomial_text.empty())
    qes::fail(qes::errc::bad_input, "pass exactly one of --sector or --monomial");
  if (!cfg.sector_text.empty()) return qes::parse_sector(cfg.sector_text, model);
  return qes::canonicalize(model, qes::parse_monomial(cfg.monomial_text, model));
}

std::string kind_name(qes::ModelKind kind) {
  switch (kind) {
    case qes::ModelKind::harmonic_generation: return "harmonic-generation";
    case qes::ModelKind::photon_cascade: return "photon-cascade";
    case qes::ModelKind::general: return "general";
  }
  return "general";
}

int cmd_validate(const RunConfig& cfg) {
  const qes::Model model = qes::load_model(cfg.model_path);
  const qes::ModelClass cls = qes::model_kind(model);
  nlohmann::ordered_json out;
  out["model"] = qes::model_to_json(model);
  out["kind"] = kind_name(cls.kind);
  if (cls.kind == qes::ModelKind::harmonic_generation) out["harmonic"] = cls.harmonic;
  out["constraint"] = {{"pump", qes::to_string(qes::pump_energy(model))},
                       {"converted", qes::to_string(qes::converted_energy(model))},
                       {"status", "ok"}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_sector(const RunConfig& cfg) {
  const qes::Model model = qes::load_model(cfg.model_path);
  const qes::SectorLabel sector = resolve_sector(model, cfg);
  const std::vector<qes::MonomialState> basis = qes::sector_basis(model, sector);
  const qes::QuantumNumbers qn = qes::quantum_numbers(model, basis[0]);
  const qes::NormConstants norms = qes::norm_constants(model, sector);

  if (cfg.format == "csv") {
    for (std::size_t s = 0; s < basis.size(); ++s)
      std::cout << s << ",\"" << qes::format_monomial(basis[s]) << "\"\n";
    return kExitOk;
  }

  nlohmann::ordered_json out;
  out["sector"] = qes::format_sector(sector);
  out["N"] = sector.nvec;
  out["M"] = sector.mvec;
  out["r"] = sector.r;
  out["dim"] = sector.dim();
  out["e0"] = qes::to_string(qn.e0);
  out["alpha"] = qn.alpha;
  out["beta"] = qn.beta;
  out["basis"] = nlohmann::ordered_json::array();
  for (const qes::MonomialState& state : basis)
    out["basis"].push_back(qes::format_monomial(state));
  out["norm_constants"] = nlohmann::ordered_json::array();
  for (const qes::Int& c : norms.c) out["norm_constants"].push_back(qes::to_string(c));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  const qes::Model model = qes::load_model(cfg.model_path);
  const qes::SectorLabel sector = resolve_sector(model, cfg);
  const std::vector<qes::MonomialState> basis = qes::sector_basis(model, sector);
  const qes::Rat e0 = qes::quantum_numbers(model, basis[0]).e0;
  const qes::TridiagonalH1 matrix = qes::build_tridiagonal(model, sector);
  const qes::Spectrum sp = qes::eigenvalues(matrix, cfg.tol);

  // eigenvalues are stored-scale; report unscaled when that stays finite
  std::vector<double> unscaled(sp.eigenvalues.size());
  bool representable = true;
  for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
    unscaled[k] = std::ldexp(sp.eigenvalues[k], sp.scale_log2);
    representable = representable && std::isfinite(unscaled[k]);
  }

  if (cfg.format == "csv") {
    for (double lambda : unscaled)
      std::cout << qes::format_double(lambda) << ","
                << qes::format_double(e0.get_d() + model.g * lambda) << "\n";
    return kExitOk;
  }

  nlohmann::ordered_json out;
  out["sector"] = qes::format_sector(sector);
  out["e0"] = qes::to_string(e0);
  out["g"] = model.g;
  if (representable) {
    out["eigenvalues"] = unscaled;
    out["scale_log2"] = 0;
    out["total"] = nlohmann::ordered_json::array();
    for (double lambda : unscaled) out["total"].push_back(e0.get_d() + model.g * lambda);
  } else {
    // mantissa/exponent pairs; totals would overflow, so none are reported
    out["eigenvalues"] = sp.eigenvalues;
    out["scale_log2"] = sp.scale_log2;
  }
  out["certified_width"] = sp.certified_width;
  out["method"] = "sturm-bisection";
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg) {
  const qes::Model model = qes::load_model(cfg.model_path);
  const qes::SectorLabel sector = resolve_sector(model, cfg);
  const std::vector<qes::Sl2Term> terms = qes::sl2_expansion(model, sector);
  const qes::ReducedOperator via_sl2 = qes::sl2_matrix(terms, sector.r);
  const qes::ReducedOperator direct = qes::reduced_direct(model, sector);
  const bool equal = direct.same_entries(via_sl2);

  nlohmann::ordered_json out;
  out["sector"] = qes::format_sector(sector);
  out["terms"] = qes::format_terms(terms);
  out["sl2_matrix"] = qes::reduced_to_json(via_sl2);
  out["direct_matrix"] = qes::reduced_to_json(direct);
  out["equal"] = equal;
  std::cout << out.dump(2) << "\n";
  return equal ? kExitOk : kExitVerification;
}

int cmd_enumerate(const RunConfig& cfg) {
  const qes::Model model = qes::load_model(cfg.model_path);
  const std::vector<qes::SectorLabel> sectors = qes::enumerate_sectors(model, cfg.max_photons);

  if (cfg.format == "csv") {
    for (const qes::SectorLabel& sector : sectors)
      std::cout << "\"" << qes::format_sector(sector) << "\"," << sector.r << ","
                << sector.dim() << "\n";
    return kExitOk;
  }

  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const qes::SectorLabel& sector : sectors) {
    nlohmann::ordered_json row;
    row["sector"] = qes::format_sector(sector);
    row["r"] = sector.r;
    row["dim"] = sector.dim();
    out.push_back(row);
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const qes::Model model = qes::load_model(cfg.model_path);
  qes::VerifyOptions options;
  options.max_r = cfg.max_r;
  options.max_photons = cfg.max_photons;
  options.seed = cfg.seed;
  options.tol = cfg.tol;
  const std::vector<qes::CheckResult> results = qes::run_verification(model, options);

  long failed = 0;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const qes::CheckResult& result : results) {
    if (!result.pass) ++failed;
    nlohmann::ordered_json row;
    row["name"] = result.name;
    row["status"] = result.pass ? "pass" : "fail";
    row["detail"] = result.detail;
    checks.push_back(row);
  }
  nlohmann::ordered_json out;
  out["checks"] = checks;
  out["passed"] = static_cast<long>(results.size()) - failed;
  out["failed"] = failed;
  std::cout << out.dump(2) << "\n";
  return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  qes::init_threads_from_env();

  CLI::App app{"Exact sector spectra for photon-conversion models"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_model_arg = [&cfg](CLI::App* cmd) {
    cmd->add_option("model", cfg.model_path, "model JSON file")->required();
  };
  auto add_sector_flags = [&cfg](CLI::App* cmd) {
    cmd->add_option("--sector", cfg.sector_text, "sector label, e.g. \"N=0,0;M=1\"");
    cmd->add_option("--monomial", cfg.monomial_text, "monomial state, e.g. \"i=4;j=0\"");
  };
  auto add_format_flag = [&cfg](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check a model file");
  add_model_arg(validate);

  CLI::App* sector = app.add_subcommand("sector", "basis and quantum numbers of one sector");
  add_model_arg(sector);
  add_sector_flags(sector);
  add_format_flag(sector);

  CLI::App* spectrum = app.add_subcommand("spectrum", "certified eigenvalues of one sector");
  add_model_arg(spectrum);
  add_sector_flags(spectrum);
  add_format_flag(spectrum);
  spectrum->add_option("--tol", cfg.tol, "bracket width relative to max(1, |H|)");

  CLI::App* reduce = app.add_subcommand("reduce", "generator expansion of one sector");
  add_model_arg(reduce);
  add_sector_flags(reduce);
  add_format_flag(reduce);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all sectors within a photon budget");
  add_model_arg(enumerate);
  enumerate->add_option("--max-photons", cfg.max_photons, "total degree bound")->required();
  add_format_flag(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "cross-check every route on this model");
  add_model_arg(verify);
  verify->add_option("--max-photons", cfg.max_photons, "degree bound for scans");
  verify->add_option("--max-r", cfg.max_r, "sector size cap for matrix checks");
  verify->add_option("--seed", cfg.seed, "probe seed");
  verify->add_option("--tol", cfg.tol, "spectral tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg);
    if (sector->parsed()) return cmd_sector(cfg);
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (reduce->parsed()) return cmd_reduce(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const qes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == qes::errc::io_error ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
