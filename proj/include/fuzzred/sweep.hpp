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

#ifndef FUZZRED_SWEEP_HPP_
#define FUZZRED_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzred/reduction.hpp"

namespace fuzzred {

// A parameter grid (structure x epsilon x k) to run over one automaton.
struct SweepSpec {
  std::vector<Lattice> structures;
  std::vector<Value> epsilons;
  std::vector<std::uint64_t> ks;  // kInfinity allowed
  Ffa input;
  double precision = 1e-12;
  std::uint64_t max_closure = 10'000'000;
};

struct SweepRow {
  Lattice lattice;
  Value eps = 0.0;
  std::uint64_t k = kInfinity;
  std::size_t remaining_states = 0;
  std::uint64_t closure_steps = 0;
  std::uint64_t loop_iterations = 0;
  std::string error;  // empty on success
};

// One row per grid cell, sorted by structure, then eps, then k. Per-cell
// failures land in the error column and never abort the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// CSV with a header row; values rendered like the CLI renders them.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct RandomSpec {
  std::size_t n = 0;
  std::size_t s = 1;
  double density = 0.5;     // probability of a nonzero entry, in (0,1]
  double lo = 0.0;          // interval sampling when grid is empty
  double hi = 1.0;
  std::vector<Value> grid;  // nonempty: sample values from this set instead
};

// Reproducible random automaton: every transition row has at least one
// nonzero entry per symbol, and I and F are each nonzero somewhere.
Ffa generate_random(const RandomSpec& spec, std::uint64_t seed);

}  // namespace fuzzred

#endif  // FUZZRED_SWEEP_HPP_
