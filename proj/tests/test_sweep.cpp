// Copyright 2026 The fuzzred authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuzzred/sweep.hpp"

#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "fuzzred/io.hpp"
#include "fuzzred/oracle.hpp"

namespace fuzzred {
namespace {

namespace fx = fuzzred::fixtures;

TEST_SUITE("sweep") {

TEST_CASE("empty axes are rejected") {
  SweepSpec spec;
  spec.input = fx::fig1();
  spec.epsilons = {0.1};
  spec.ks = {kInfinity};
  CHECK_THROWS_AS((void)run_sweep(spec), std::invalid_argument);
}

TEST_CASE("a singleton grid equals a direct run") {
  SweepSpec spec;
  spec.input = fx::in2();
  spec.structures = {Lattice{Structure::kProduct}};
  spec.epsilons = {0.1};
  spec.ks = {kInfinity};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].error.empty());
  CHECK(rows[0].remaining_states == 4);
  CHECK(rows[0].closure_steps == 180);
  CHECK(rows[0].loop_iterations == 5);
}

TEST_CASE("the appendix grid on the reference automaton") {
  SweepSpec spec;
  spec.input = fx::fig1();
  spec.structures = {Lattice{Structure::kProduct},
                     Lattice{Structure::kHamacher, 0.0},
                     Lattice{Structure::kGodel},
                     Lattice{Structure::kLukasiewicz},
                     Lattice{Structure::kNilpotent}};
  spec.epsilons = {0.0, 0.1, 0.2};
  spec.ks = {2, 3, kInfinity};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 45);
  // Expected remaining states per (structure, eps) row at k = 2, 3, inf.
  const std::size_t want[5][3][3] = {
      {{4, 5, 7}, {4, 5, 5}, {4, 4, 4}},  // product
      {{4, 5, 7}, {4, 5, 7}, {4, 5, 7}},  // Hamacher
      {{3, 4, 4}, {3, 4, 4}, {3, 4, 4}},  // Godel
      {{3, 3, 3}, {3, 3, 3}, {3, 3, 3}},  // Lukasiewicz
      {{4, 4, 4}, {4, 4, 4}, {4, 4, 4}},  // nilpotent
  };
  std::size_t idx = 0;
  for (std::size_t s = 0; s < 5; ++s)
    for (std::size_t e = 0; e < 3; ++e)
      for (std::size_t k = 0; k < 3; ++k, ++idx) {
        INFO("row ", idx, " structure ",
             structure_letter(rows[idx].lattice.structure), " eps ",
             rows[idx].eps, " k ", format_k(rows[idx].k));
        REQUIRE(rows[idx].error.empty());
        CHECK(rows[idx].remaining_states == want[s][e][k]);
      }
}

TEST_CASE("per-cell failures land in the error column") {
  SweepSpec spec;
  spec.input = fx::fig1();
  spec.structures = {Lattice{Structure::kProduct}};
  spec.epsilons = {0.1};
  spec.ks = {kInfinity};
  spec.max_closure = 1;
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].error.empty());
  const std::string csv = sweep_csv(rows);
  CHECK(csv.find("structure,epsilon,k,remaining_states,closure_steps,"
                 "loop_iterations,error") == 0);
  CHECK(csv.find("P,0.1,infinity,,,,") != std::string::npos);
}

TEST_CASE("csv rendering of a successful row") {
  SweepSpec spec;
  spec.input = fx::in2();
  spec.structures = {Lattice{Structure::kProduct}};
  spec.epsilons = {0.1};
  spec.ks = {3};
  const std::string csv = sweep_csv(run_sweep(spec));
  CHECK(csv.find("P,0.1,3,") != std::string::npos);
}

TEST_CASE("random generation is reproducible and respects constraints") {
  RandomSpec spec;
  spec.n = 6;
  spec.s = 2;
  spec.density = 0.4;
  const Ffa a = generate_random(spec, 99);
  const Ffa b = generate_random(spec, 99);
  CHECK(a.initial == b.initial);
  CHECK(a.accepting == b.accepting);
  CHECK(a.delta == b.delta);
  const Ffa c = generate_random(spec, 100);
  CHECK((a.initial != c.initial || a.delta != c.delta ||
         a.accepting != c.accepting));

  for (const FuzzyMat& m : a.delta)
    for (std::size_t i = 0; i < spec.n; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < spec.n; ++j) any = any || m(i, j) > 0.0;
      CHECK(any);
    }
  bool any_initial = false, any_final = false;
  for (Value v : a.initial) any_initial = any_initial || v > 0.0;
  for (Value v : a.accepting) any_final = any_final || v > 0.0;
  CHECK(any_initial);
  CHECK(any_final);
}

TEST_CASE("density 1 with a positive grid fills every entry") {
  RandomSpec spec;
  spec.n = 3;
  spec.s = 1;
  spec.density = 1.0;
  spec.grid = {0.5, 1.0};
  const Ffa a = generate_random(spec, 7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a.delta[0](i, j) > 0.0);
}

TEST_CASE("random spec validation") {
  RandomSpec bad;
  bad.n = 0;
  CHECK_THROWS_AS((void)generate_random(bad, 1), std::invalid_argument);
  RandomSpec bad2;
  bad2.n = 2;
  bad2.density = 0.0;
  CHECK_THROWS_AS((void)generate_random(bad2, 1), std::invalid_argument);
  RandomSpec bad3;
  bad3.n = 2;
  bad3.lo = 0.5;
  bad3.hi = 0.2;
  CHECK_THROWS_AS((void)generate_random(bad3, 1), std::invalid_argument);
  RandomSpec bad4;
  bad4.n = 2;
  bad4.grid = {0.0};
  CHECK_THROWS_AS((void)generate_random(bad4, 1), std::invalid_argument);
}

TEST_CASE("sweep cells stay eps-equivalent to the input") {
  RandomSpec gen;
  gen.n = 5;
  gen.s = 2;
  gen.density = 0.5;
  gen.grid = {0.25, 0.5, 0.75, 1.0};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SweepSpec spec;
    spec.input = generate_random(gen, seed);
    spec.structures = {Lattice{Structure::kProduct}};
    spec.epsilons = {0.1, 0.2};
    spec.ks = {3, kInfinity};
    for (const SweepRow& row : run_sweep(spec)) {
      REQUIRE(row.error.empty());
      ReductionConfig cfg;
      cfg.eps = row.eps;
      cfg.k = row.k;
      const ReductionReport report = soft_state_reduction(spec.input, cfg);
      const EquivalenceVerdict verdict = check_eps_equivalent(
          spec.input, report.result, row.eps,
          std::min<std::uint64_t>(row.k, 8), cfg.lattice);
      CHECK(verdict.equivalent);
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace fuzzred
