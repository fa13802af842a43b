#include "qes/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qes/errors.hpp"

namespace qes {

namespace {

Rat rational_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_number_float())
    fail(errc::bad_input, std::string(what) +
                              ": floating-point values are not accepted; write an exact "
                              "rational string like \"1/2\"");
  fail(errc::bad_input, std::string(what) + ": expected a rational string or an integer");
}

std::vector<Rat> rational_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(errc::bad_input, std::string(what) + ": expected an array");
  std::vector<Rat> out;
  for (const auto& item : j) out.push_back(rational_from_json(item, what));
  return out;
}

std::vector<long> integer_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(errc::bad_input, std::string(what) + ": expected an array");
  std::vector<long> out;
  for (const auto& item : j) {
    if (!item.is_number_integer())
      fail(errc::bad_input, std::string(what) + ": expected integer entries");
    out.push_back(static_cast<long>(item.get<long long>()));
  }
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) fail(errc::bad_input, std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<long> parse_long_csv(const std::string& text, const char* what) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(pos, comma - pos);
    if (piece.empty()) fail(errc::bad_input, std::string(what) + ": empty entry");
    try {
      std::size_t used = 0;
      const long value = std::stol(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      fail(errc::bad_input, std::string(what) + ": cannot parse integer '" + piece + "'");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::string join_longs(const std::vector<long>& values) {
  std::string out;
  for (std::size_t pos = 0; pos < values.size(); ++pos) {
    if (pos) out += ",";
    out += std::to_string(values[pos]);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json model_to_json(const Model& model) {
  nlohmann::ordered_json j;
  j["nu"] = nlohmann::ordered_json::array();
  for (const Rat& f : model.nu) j["nu"].push_back(to_string(f));
  j["mu"] = nlohmann::ordered_json::array();
  for (const Rat& f : model.mu) j["mu"].push_back(to_string(f));
  j["n"] = model.n;
  j["m"] = model.m;
  j["g"] = model.g;
  return j;
}

Model model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::bad_input, "model: expected a JSON object");
  Model raw;
  raw.nu = rational_list(field(j, "nu"), "nu");
  raw.mu = rational_list(field(j, "mu"), "mu");
  raw.n = integer_list(field(j, "n"), "n");
  raw.m = integer_list(field(j, "m"), "m");
  if (const auto it = j.find("g"); it != j.end()) {
    if (!it->is_number()) fail(errc::bad_input, "g: expected a number");
    raw.g = it->get<double>();
  }
  return validate(raw);
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::io_error, "cannot parse '" + path + "': " + e.what());
  }
  return model_from_json(j);
}

nlohmann::ordered_json tridiagonal_to_json(const TridiagonalH1& matrix) {
  nlohmann::ordered_json j;
  j["dim"] = matrix.dim;
  j["offdiag_sq"] = nlohmann::ordered_json::array();
  for (const Int& sq : matrix.offdiag_sq) j["offdiag_sq"].push_back(to_string(sq));
  j["scale_log2"] = matrix.scale_log2;
  return j;
}

TridiagonalH1 tridiagonal_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::bad_input, "matrix: expected a JSON object");
  const auto& squares = field(j, "offdiag_sq");
  if (!squares.is_array()) fail(errc::bad_input, "offdiag_sq: expected an array");
  std::vector<Int> values;
  for (const auto& item : squares) {
    if (!item.is_string()) fail(errc::bad_input, "offdiag_sq: entries must be strings");
    const Rat parsed = parse_rational(item.get<std::string>());
    if (parsed.get_den() != 1) fail(errc::bad_input, "offdiag_sq: entries must be integers");
    values.push_back(parsed.get_num());
  }
  TridiagonalH1 matrix = tridiagonal_from_squares(std::move(values));
  const auto& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() != matrix.dim)
    fail(errc::bad_input, "dim does not match the off-diagonal length");
  return matrix;
}

nlohmann::ordered_json spectrum_to_json(const Spectrum& spectrum) {
  nlohmann::ordered_json j;
  j["eigenvalues"] = spectrum.eigenvalues;
  j["certified_width"] = spectrum.certified_width;
  j["scale_log2"] = spectrum.scale_log2;
  j["method"] = spectrum.method == Spectrum::Method::sturm_bisection ? "sturm-bisection"
                                                                     : "dense-crosscheck";
  return j;
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::bad_input, "spectrum: expected a JSON object");
  Spectrum sp;
  const auto& values = field(j, "eigenvalues");
  if (!values.is_array()) fail(errc::bad_input, "eigenvalues: expected an array");
  for (const auto& item : values) {
    if (!item.is_number()) fail(errc::bad_input, "eigenvalues: expected numbers");
    sp.eigenvalues.push_back(item.get<double>());
  }
  sp.certified_width = field(j, "certified_width").get<double>();
  sp.scale_log2 = field(j, "scale_log2").get<long>();
  const std::string method = field(j, "method").get<std::string>();
  if (method == "sturm-bisection")
    sp.method = Spectrum::Method::sturm_bisection;
  else if (method == "dense-crosscheck")
    sp.method = Spectrum::Method::dense_crosscheck;
  else
    fail(errc::bad_input, "unknown spectrum method '" + method + "'");
  return sp;
}

nlohmann::ordered_json reduced_to_json(const ReducedOperator& op) {
  nlohmann::ordered_json j;
  j["dim"] = op.dim;
  j["built_from"] = op.built_from == ReducedOperator::Source::direct ? "direct" : "sl2";
  auto rows = nlohmann::ordered_json::array();
  for (long row = 0; row < op.dim; ++row) {
    auto line = nlohmann::ordered_json::array();
    for (long col = 0; col < op.dim; ++col) line.push_back(to_string(op.at(row, col)));
    rows.push_back(line);
  }
  j["matrix"] = rows;
  return j;
}

std::string format_sector(const SectorLabel& sector) {
  return "N=" + join_longs(sector.nvec) + ";M=" + join_longs(sector.mvec);
}

SectorLabel parse_sector(const std::string& text, const Model& model) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos || text.rfind("N=", 0) != 0 ||
      text.compare(semi + 1, 2, "M=") != 0)
    fail(errc::bad_input, "sector text must look like \"N=0,0;M=1\"");
  SectorLabel sector;
  sector.nvec = parse_long_csv(text.substr(2, semi - 2), "sector N");
  sector.mvec = parse_long_csv(text.substr(semi + 3), "sector M");
  if (static_cast<long>(sector.nvec.size()) != model.modes_a() ||
      static_cast<long>(sector.mvec.size()) != model.modes_b())
    fail(errc::invalid_sector, "sector exponent counts do not match the model");
  for (long v : sector.mvec)
    if (v < 0) fail(errc::invalid_sector, "negative converted exponent in sector label");
  // r is derived, never trusted from input
  sector.r = sector.mvec[0] / model.m[0];
  for (std::size_t k = 1; k < sector.mvec.size(); ++k)
    sector.r = std::min(sector.r, sector.mvec[k] / model.m[k]);
  check_sector(model, sector);
  return sector;
}

std::string format_monomial(const MonomialState& state) {
  return "i=" + join_longs(state.i) + ";j=" + join_longs(state.j);
}

MonomialState parse_monomial(const std::string& text, const Model& model) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos || text.rfind("i=", 0) != 0 ||
      text.compare(semi + 1, 2, "j=") != 0)
    fail(errc::bad_input, "monomial text must look like \"i=4;j=0\"");
  MonomialState state;
  state.i = parse_long_csv(text.substr(2, semi - 2), "monomial i");
  state.j = parse_long_csv(text.substr(semi + 3), "monomial j");
  if (static_cast<long>(state.i.size()) != model.modes_a() ||
      static_cast<long>(state.j.size()) != model.modes_b())
    fail(errc::bad_input, "monomial exponent counts do not match the model");
  for (long v : state.i)
    if (v < 0) fail(errc::bad_input, "negative pump exponent");
  for (long v : state.j)
    if (v < 0) fail(errc::bad_input, "negative converted exponent");
  return state;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace qes
