#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "qes/errors.hpp"
#include "qes/io.hpp"
#include "support.hpp"

using namespace qes;

namespace {

errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a library error");
  return errc::bad_input;
}

std::filesystem::path temp_file(const char* name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("models survive a JSON round trip") {
  for (const Model& model : testing::suite()) {
    const Model back = model_from_json(model_to_json(model));
    CHECK(back.nu == model.nu);
    CHECK(back.mu == model.mu);
    CHECK(back.n == model.n);
    CHECK(back.m == model.m);
    CHECK(back.g == model.g);
  }

  Model coupled = testing::second_harmonic();
  coupled.g = -0.375;
  CHECK(model_from_json(model_to_json(coupled)).g == -0.375);
}

TEST_CASE("model parsing accepts integers and rejects floats") {
  nlohmann::json j = {{"nu", {"1/2"}}, {"mu", {1}}, {"n", {2}}, {"m", {1}}};
  const Model model = model_from_json(j);
  CHECK(model.mu[0] == 1);
  CHECK(model.g == 1.0);

  j["nu"][0] = 0.5;
  CHECK(code_of([&] { model_from_json(j); }) == errc::bad_input);
  try {
    model_from_json(j);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }

  j["nu"][0] = "0.5";
  CHECK(code_of([&] { model_from_json(j); }) == errc::bad_input);

  j["nu"][0] = "1/0";
  CHECK(code_of([&] { model_from_json(j); }) == errc::bad_input);

  j["nu"][0] = "1/2";
  j["g"] = "strong";
  CHECK(code_of([&] { model_from_json(j); }) == errc::bad_input);

  j.erase("g");
  j.erase("mu");
  CHECK(code_of([&] { model_from_json(j); }) == errc::bad_input);
}

TEST_CASE("matrices survive a JSON round trip") {
  const TridiagonalH1 t = build_tridiagonal(testing::second_harmonic(), {{0}, {2}, 2});
  const TridiagonalH1 back = tridiagonal_from_json(tridiagonal_to_json(t));
  CHECK(back.dim == t.dim);
  CHECK(back.offdiag_sq == t.offdiag_sq);
  CHECK(back.offdiag == t.offdiag);
  CHECK(back.scale_log2 == t.scale_log2);

  Model tall;
  tall.nu = {make_rat(1, 300)};
  tall.mu = {Rat(1)};
  tall.n = {300};
  tall.m = {1};
  tall = validate(tall);
  const TridiagonalH1 huge = build_tridiagonal(tall, {{0}, {2}, 2});
  const TridiagonalH1 huge_back = tridiagonal_from_json(tridiagonal_to_json(huge));
  CHECK(huge_back.offdiag_sq == huge.offdiag_sq);
  CHECK(huge_back.offdiag == huge.offdiag);
  CHECK(huge_back.scale_log2 == huge.scale_log2);

  nlohmann::json j = tridiagonal_to_json(t);
  j["dim"] = 7;
  CHECK(code_of([&] { tridiagonal_from_json(j); }) == errc::bad_input);
  j["dim"] = 3;
  j["offdiag_sq"][0] = "-4";
  CHECK(code_of([&] { tridiagonal_from_json(j); }) == errc::invalid_sector);
  j["offdiag_sq"][0] = "1/3";
  CHECK(code_of([&] { tridiagonal_from_json(j); }) == errc::bad_input);
  j["offdiag_sq"][0] = 4;
  CHECK(code_of([&] { tridiagonal_from_json(j); }) == errc::bad_input);
}

TEST_CASE("spectra survive a JSON round trip") {
  const Spectrum s =
      eigenvalues(build_tridiagonal(testing::second_harmonic(), {{0}, {2}, 2}), 1e-12);
  const Spectrum back = spectrum_from_json(spectrum_to_json(s));
  CHECK(back.eigenvalues == s.eigenvalues);
  CHECK(back.certified_width == s.certified_width);
  CHECK(back.scale_log2 == s.scale_log2);
  CHECK(back.method == s.method);

  nlohmann::json j = spectrum_to_json(s);
  j["method"] = "guesswork";
  CHECK(code_of([&] { spectrum_from_json(j); }) == errc::bad_input);
}

TEST_CASE("reduced operators serialize with exact entries") {
  const nlohmann::ordered_json j =
      reduced_to_json(reduced_direct(testing::second_harmonic(), {{0}, {2}, 2}));
  CHECK(j["dim"] == 3);
  CHECK(j["built_from"] == "direct");
  CHECK(j["matrix"][0] == nlohmann::ordered_json::array({"0", "2", "0"}));
  CHECK(j["matrix"][1] == nlohmann::ordered_json::array({"2", "0", "12"}));
  CHECK(j["matrix"][2] == nlohmann::ordered_json::array({"0", "1", "0"}));
}

TEST_CASE("sector text round trips") {
  for (const Model& model : testing::suite())
    for (const SectorLabel& sector : enumerate_sectors(model, 6)) {
      const SectorLabel back = parse_sector(format_sector(sector), model);
      CHECK(back == sector);
    }

  const Model shg = testing::second_harmonic();
  const SectorLabel tower = parse_sector("N=1;M=2", shg);
  CHECK(tower.r == 2);
  CHECK(tower.dim() == 3);

  CHECK(code_of([&] { parse_sector("N=1,0;M=2", shg); }) == errc::invalid_sector);
  CHECK(code_of([&] { parse_sector("N=0;M=-1", shg); }) == errc::invalid_sector);
  CHECK(code_of([&] { parse_sector("N=2;M=0", shg); }) == errc::invalid_sector);
  CHECK(code_of([&] { parse_sector("N=0,M=2", shg); }) == errc::bad_input);
  CHECK(code_of([&] { parse_sector("N=zero;M=2", shg); }) == errc::bad_input);
  CHECK(code_of([&] { parse_sector("", shg); }) == errc::bad_input);
}

TEST_CASE("monomial text round trips") {
  const Model cascade = testing::cascade2();
  const MonomialState state{{2, 1}, {3}};
  CHECK(format_monomial(state) == "i=2,1;j=3");
  CHECK(parse_monomial("i=2,1;j=3", cascade) == state);

  const Model shg = testing::second_harmonic();
  CHECK(parse_monomial("i=4;j=0", shg) == MonomialState{{4}, {0}});
  CHECK(code_of([&] { parse_monomial("i=4,1;j=0", shg); }) == errc::bad_input);
  CHECK(code_of([&] { parse_monomial("i=-4;j=0", shg); }) == errc::bad_input);
  CHECK(code_of([&] { parse_monomial("i=4;k=0", shg); }) == errc::bad_input);
}

TEST_CASE("decimal formatting is stable") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(-4.0) == "-4");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("model files load with IO errors on failure") {
  const auto good = temp_file("qes_io_good_model.json",
                              R"({"nu": ["1/2"], "mu": ["1"], "n": [2], "m": [1], "g": 1.0})");
  const Model model = load_model(good.string());
  CHECK(model_kind(model).kind == ModelKind::harmonic_generation);
  std::filesystem::remove(good);

  CHECK(code_of([] { load_model("/nonexistent/path/model.json"); }) == errc::io_error);

  const auto bad = temp_file("qes_io_bad_model.json", "this is not json");
  CHECK(code_of([&] { load_model(bad.string()); }) == errc::io_error);
  std::filesystem::remove(bad);
}
