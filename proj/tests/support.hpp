#pragma once

#include <string>
#include <vector>

#include "qes/model.hpp"

namespace qes::testing {

// Canonical models exercised across the suite. All satisfy the conservation
// identity with frequency choices whose quantum numbers separate sectors.
inline Model second_harmonic() {
  Model model;
  model.nu = {make_rat(1, 2)};
  model.mu = {Rat(1)};
  model.n = {2};
  model.m = {1};
  return validate(model);
}

inline Model third_harmonic() {
  Model model;
  model.nu = {make_rat(1, 3)};
  model.mu = {Rat(1)};
  model.n = {3};
  model.m = {1};
  return validate(model);
}

inline Model fifth_harmonic() {
  Model model;
  model.nu = {make_rat(1, 5)};
  model.mu = {Rat(1)};
  model.n = {5};
  model.m = {1};
  return validate(model);
}

inline Model cascade2() {
  Model model;
  model.nu = {Rat(1), Rat(2)};
  model.mu = {Rat(3)};
  model.n = {1, 1};
  model.m = {1};
  return validate(model);
}

inline Model cascade3() {
  Model model;
  model.nu = {Rat(1), Rat(2), Rat(4)};
  model.mu = {Rat(7)};
  model.n = {1, 1, 1};
  model.m = {1};
  return validate(model);
}

inline Model mixed_exponents() {
  Model model;
  model.nu = {Rat(1), Rat(1)};
  model.mu = {Rat(1)};
  model.n = {2, 1};
  model.m = {3};
  return validate(model);
}

inline std::vector<Model> suite() {
  return {second_harmonic(), third_harmonic(), fifth_harmonic(),
          cascade2(),        cascade3(),       mixed_exponents()};
}

inline std::vector<std::string> suite_names() {
  return {"second-harmonic", "third-harmonic", "fifth-harmonic",
          "cascade-2",       "cascade-3",      "mixed-exponents"};
}

}  // namespace qes::testing
