#pragma once

#include <json.hpp>

#include <string>

#include "qes/matrix.hpp"
#include "qes/sectors.hpp"
#include "qes/sl2.hpp"
#include "qes/spectral.hpp"

namespace qes {

// Deterministic: field order is fixed, big integers travel as strings,
// rationals as "p/q". Every emitted object parses back into its type.
nlohmann::ordered_json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);
Model load_model(const std::string& path);  // file problems raise IoError

nlohmann::ordered_json tridiagonal_to_json(const TridiagonalH1& matrix);
TridiagonalH1 tridiagonal_from_json(const nlohmann::json& j);

nlohmann::ordered_json spectrum_to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::ordered_json reduced_to_json(const ReducedOperator& op);

// "N=0,0;M=1"
std::string format_sector(const SectorLabel& sector);
SectorLabel parse_sector(const std::string& text, const Model& model);

// "i=4;j=0"
std::string format_monomial(const MonomialState& state);
MonomialState parse_monomial(const std::string& text, const Model& model);

// Shortest-of-17-significant-digits decimal, '.' separator, for CSV rows.
std::string format_double(double value);

}  // namespace qes
