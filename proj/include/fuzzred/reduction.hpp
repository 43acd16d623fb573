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

#ifndef FUZZRED_REDUCTION_HPP_
#define FUZZRED_REDUCTION_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fuzzred/automaton.hpp"

namespace fuzzred {

// Sentinel for an unbounded word-length parameter k.
inline constexpr std::uint64_t kInfinity =
    std::numeric_limits<std::uint64_t>::max();

struct ReductionConfig {
  Value eps = 0.0;
  std::uint64_t k = kInfinity;
  Lattice lattice{};
  double precision = 1e-12;         // quantization grid for vector equality
  std::uint64_t max_closure = 10'000'000;  // cap on closure insertions
  bool trim = true;                 // test hook; always on in the CLI
};

void validate(const ReductionConfig& cfg);

// Raised when the closure would insert more than cfg.max_closure vectors —
// the symptom of a non-terminating run (eps = 0 with k unbounded on a
// structure that is not locally finite).
struct ClosureCapError : std::runtime_error {
  explicit ClosureCapError(std::uint64_t cap)
      : std::runtime_error("closure exceeded the insertion cap of " +
                           std::to_string(cap)) {}
};

// The closed family of eps-truncated backward vectors {(F_w)_eps : |w| <= k}.
struct ClosureSet {
  std::vector<FuzzyVec> vectors;       // insertion order, quantized-distinct
  std::vector<std::size_t> frontier;   // indices of the last round's inserts
  std::uint64_t step_executions = 0;   // one per processed (vector, symbol)
  std::uint64_t rounds = 0;            // rounds that processed a frontier
  bool halted_by_empty_frontier = false;
};

ClosureSet closure(const Ffa& a, const ReductionConfig& cfg);

// Z = meet_eps over the closure of f /eps f; the greatest right
// (eps,k)-invariance, and the greatest right eps-invariance whenever the
// closure halted by an empty frontier.
FuzzyMat greatest_right_invariance(const ClosureSet& closure,
                                   const ReductionConfig& cfg);

struct AftersetResult {
  Ffa automaton;
  // Smallest original state index of each afterset class, ascending; class i
  // of the quotient is labeled by representatives[i].
  std::vector<std::size_t> representatives;
};

// The (Z,eps)-afterset quotient automaton. Z must be an eps-FPO.
AftersetResult afterset_automaton(const Ffa& a, const FuzzyMat& z,
                                  const ReductionConfig& cfg);

struct ReduceStats {
  std::uint64_t closure_steps = 0;
  std::size_t closure_size = 0;
  std::vector<std::size_t> representatives;
};

std::pair<Ffa, ReduceStats> reduce_by_right_invariance(
    const Ffa& a, const ReductionConfig& cfg);

struct Ssr0Stats {
  std::uint64_t while_iterations = 0;
  std::uint64_t closure_steps = 0;
  std::vector<std::vector<std::size_t>> representatives;  // per quotient
};

// Alternates right reduction with reverse-wrapped right reduction while the
// state count strictly decreases.
std::pair<Ffa, Ssr0Stats> soft_state_reduction_0(const Ffa& a,
                                                 const ReductionConfig& cfg);

struct ReductionReport {
  Ffa result;
  std::uint64_t while_loop_iterations = 0;
  std::uint64_t closure_step_executions = 0;
  std::vector<std::pair<std::string, std::size_t>> phase_state_counts;
  std::vector<std::vector<std::size_t>> representatives;  // per quotient
  bool reversed_branch = false;  // true when the reverse-side result won
};

// Full pipeline: trim, reduce both the automaton and its reverse, keep the
// strictly smaller direct result, otherwise the reversed one.
ReductionReport soft_state_reduction(const Ffa& a,
                                     const ReductionConfig& cfg);

}  // namespace fuzzred

#endif  // FUZZRED_REDUCTION_HPP_
