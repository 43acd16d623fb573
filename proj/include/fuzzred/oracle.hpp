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

#ifndef FUZZRED_ORACLE_HPP_
#define FUZZRED_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>

#include "fuzzred/automaton.hpp"

namespace fuzzred {

// Brute-force verification tools, deliberately independent of the residual
// machinery in the reduction module.

// Hard cap on brute-force word enumeration.
inline constexpr std::uint64_t kOracleWordBudget = 1'000'000;

struct EnumerationBudgetError : std::runtime_error {
  EnumerationBudgetError()
      : std::runtime_error("oracle: word-enumeration budget exceeded") {}
};

struct LanguageTable {
  std::uint64_t max_len = 0;
  std::map<Word, Value> degrees;  // every word of length <= max_len
};

// Exhaustive degrees of all words of length <= k.
LanguageTable language_table(const Ffa& a, std::uint64_t k,
                             const Lattice& lat);

struct EquivalenceVerdict {
  bool equivalent = true;
  Word counterexample;   // first failure in length-then-lex order
  Value lhs = 0.0;       // degree in the first automaton
  Value rhs = 0.0;       // degree in the second automaton
};

// Checks L(a)(w) =_eps L(b)(w) for every word of length <= k.
EquivalenceVerdict check_eps_equivalent(const Ffa& a, const Ffa& b, Value eps,
                                        std::uint64_t k, const Lattice& lat);

// Checks that z is reflexive and z o F_w =_eps F_w for every |w| <= k,
// by direct (exact) composition.
bool verify_right_invariance(const Ffa& a, const FuzzyMat& z, Value eps,
                             std::uint64_t k, const Lattice& lat);

// Exhaustively confirms on tiny instances that no entrywise-larger right
// (eps,k)-invariance exists; candidate entry values are drawn from the
// residuals of the truncated backward vectors plus 1.
bool verify_greatest(const Ffa& a, const FuzzyMat& z, Value eps,
                     std::uint64_t k, const Lattice& lat);

}  // namespace fuzzred

#endif  // FUZZRED_ORACLE_HPP_
