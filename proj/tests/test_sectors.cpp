#include <doctest.h>

#include <algorithm>
#include <map>

#include "qes/errors.hpp"
#include "qes/oracle.hpp"
#include "qes/reference.hpp"
#include "qes/sectors.hpp"
#include "support.hpp"

using namespace qes;

TEST_CASE("quantum numbers of frozen states") {
  const Model cascade = testing::cascade2();
  const MonomialState state{{2, 1}, {3}};
  const QuantumNumbers qn = quantum_numbers(cascade, state);
  CHECK(qn.e0 == Rat(13));  // 2*1 + 1*2 + 3*3
  CHECK(qn.alpha == std::vector<long>{1});
  CHECK(qn.beta.empty());

  const Model shg = testing::second_harmonic();
  CHECK(quantum_numbers(shg, {{4}, {0}}).e0 == Rat(2));
  CHECK(quantum_numbers(shg, {{0}, {2}}).e0 == Rat(2));
  CHECK(quantum_numbers(shg, {{0}, {0}}).e0 == Rat(0));
}

TEST_CASE("quantum numbers reject shape mismatches") {
  CHECK_THROWS_AS(quantum_numbers(testing::cascade2(), MonomialState{{1}, {0}}), Error);
  CHECK_THROWS_AS(quantum_numbers(testing::second_harmonic(), MonomialState{{-1}, {0}}), Error);
}

TEST_CASE("canonicalization slides to the lowest rung") {
  const Model shg = testing::second_harmonic();
  const SectorLabel from_top = canonicalize(shg, {{4}, {0}});
  CHECK(from_top == SectorLabel{{0}, {2}, 2});
  CHECK(canonicalize(shg, {{0}, {2}}) == SectorLabel{{0}, {2}, 2});
  CHECK(canonicalize(shg, {{1}, {1}}) == SectorLabel{{1}, {1}, 1});
  CHECK(canonicalize(shg, {{5}, {0}}) == SectorLabel{{1}, {2}, 2});

  const Model cascade = testing::cascade2();
  CHECK(canonicalize(cascade, {{0, 0}, {1}}) == SectorLabel{{0, 0}, {1}, 1});
  CHECK(canonicalize(cascade, {{1, 1}, {0}}) == SectorLabel{{0, 0}, {1}, 1});
}

TEST_CASE("sector basis walks the ladder") {
  const Model shg = testing::second_harmonic();
  const auto basis = sector_basis(shg, {{0}, {2}, 2});
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == MonomialState{{0}, {2}});
  CHECK(basis[1] == MonomialState{{2}, {1}});
  CHECK(basis[2] == MonomialState{{4}, {0}});

  const auto single = sector_basis(shg, {{1}, {0}, 0});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == MonomialState{{1}, {0}});
}

TEST_CASE("invalid sector labels are rejected") {
  const Model shg = testing::second_harmonic();
  // not the lowest rung: the pump can still absorb a step
  CHECK_THROWS_AS(check_sector(shg, SectorLabel{{2}, {1}, 1}), Error);
  // r does not match the label
  CHECK_THROWS_AS(check_sector(shg, SectorLabel{{0}, {2}, 1}), Error);
  CHECK_THROWS_AS(check_sector(shg, SectorLabel{{-1}, {2}, 2}), Error);
  CHECK_THROWS_AS(check_sector(shg, SectorLabel{{0, 0}, {2}, 2}), Error);
}

TEST_CASE("enumerate_sectors on the second-harmonic model") {
  const Model shg = testing::second_harmonic();
  const auto sectors = enumerate_sectors(shg, 2);
  const std::vector<SectorLabel> expected = {
      {{0}, {0}, 0}, {{0}, {1}, 1}, {{0}, {2}, 2}, {{1}, {0}, 0}, {{1}, {1}, 1}};
  CHECK(sectors == expected);

  CHECK(enumerate_sectors(shg, 0) == std::vector<SectorLabel>{{{0}, {0}, 0}});
  CHECK(enumerate_sectors(shg, -1).empty());
}

TEST_CASE("enumeration matches the serial reference") {
  const std::vector<long> bounds = {0, 1, 5, 9};
  for (const Model& model : testing::suite())
    for (long bound : bounds)
      CHECK(enumerate_sectors(model, bound) ==
            reference::enumerate_sectors_serial(model, bound));
}

TEST_CASE("every bounded monomial lands in exactly one enumerated sector") {
  const long bound = 7;
  for (const Model& model : testing::suite()) {
    const auto sectors = enumerate_sectors(model, bound);

    std::map<MonomialState, SectorLabel> owner;
    for (const SectorLabel& sector : sectors)
      for (const MonomialState& state : sector_basis(model, sector))
        if (state.total_degree() <= bound) {
          CHECK(owner.find(state) == owner.end());
          owner.emplace(state, sector);
        }

    for (const MonomialState& probe : random_probes(model, 200, bound, 11)) {
      if (probe.total_degree() > bound) continue;
      const auto found = owner.find(probe);
      REQUIRE(found != owner.end());
      CHECK(found->second == canonicalize(model, probe));
    }
  }
}

TEST_CASE("sector members share every quantum number") {
  for (const Model& model : testing::suite()) {
    for (const SectorLabel& sector : enumerate_sectors(model, 6)) {
      const auto basis = sector_basis(model, sector);
      const QuantumNumbers expected = quantum_numbers(model, basis[0]);
      for (const MonomialState& state : basis) {
        CHECK(quantum_numbers(model, state) == expected);
        CHECK(canonicalize(model, state) == sector);
      }
    }
  }
}

TEST_CASE("canonical labels satisfy the structural invariants") {
  for (const Model& model : testing::suite()) {
    for (const MonomialState& probe : random_probes(model, 150, 40, 23)) {
      const SectorLabel sector = canonicalize(model, probe);
      check_sector(model, sector);  // restric + r formula + nonnegativity
      long r = sector.mvec[0] / model.m[0];
      for (std::size_t k = 1; k < sector.mvec.size(); ++k)
        r = std::min(r, sector.mvec[k] / model.m[k]);
      CHECK(r == sector.r);
    }
  }
}
