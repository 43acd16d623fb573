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

#ifndef FUZZRED_AUTOMATON_HPP_
#define FUZZRED_AUTOMATON_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "fuzzred/fuzzy.hpp"
#include "fuzzred/lattice.hpp"

namespace fuzzred {

// A word over the alphabet, as symbol indices. The empty vector is the
// empty word.
using Word = std::vector<std::size_t>;

// Fuzzy finite automaton <Q, Sigma, I, delta, F>. States are 0..n-1; one
// transition matrix per symbol. Immutable by convention after construction.
struct Ffa {
  std::vector<std::string> alphabet;  // symbol names, size >= 1
  FuzzyVec initial;                   // I, length n
  std::vector<FuzzyMat> delta;        // one n-by-n matrix per symbol
  FuzzyVec accepting;                 // F, length n

  Ffa() = default;
  // Validating constructor: dimension consistency and all values in [0,1].
  Ffa(std::vector<std::string> alphabet, FuzzyVec initial,
      std::vector<FuzzyMat> delta, FuzzyVec accepting);

  std::size_t num_states() const { return initial.size(); }
  std::size_t num_symbols() const { return alphabet.size(); }
};

// Names "0", "1", ... for the given symbol count.
std::vector<std::string> default_alphabet(std::size_t s);

// delta_w as the fold of compose_mm; delta_epsilon is the identity.
FuzzyMat delta_word(const Ffa& a, const Word& w, const Lattice& lat);

// I_w = I o delta_w and F_w = delta_w o F, computed incrementally without
// materializing delta_w.
FuzzyVec forward(const Ffa& a, const Word& w, const Lattice& lat);
FuzzyVec backward(const Ffa& a, const Word& w, const Lattice& lat);

// L(A)(w) = I o delta_w o F.
Value language_degree(const Ffa& a, const Word& w, const Lattice& lat);

// Transpose every transition matrix and swap I with F.
Ffa reverse(const Ffa& a);

struct TrimResult {
  Ffa automaton;
  std::vector<std::size_t> kept;  // original indices of surviving states
};

// Keeps exactly the states that are both reachable from support(I) and
// co-reachable to support(F) in the Boolean support graph of delta. The
// result may have 0 states (its language is constantly 0).
TrimResult trim(const Ffa& a);

}  // namespace fuzzred

#endif  // FUZZRED_AUTOMATON_HPP_
