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

#ifndef FUZZRED_TESTS_FIXTURES_HPP_
#define FUZZRED_TESTS_FIXTURES_HPP_

#include <vector>

#include "fuzzred/automaton.hpp"

namespace fuzzred::fixtures {

// Reference automata and reference results used across the test suites.

FuzzyMat mat(std::size_t n, std::initializer_list<double> entries);

// 7-state single-symbol automaton (product semantics in most tests).
Ffa fig1();

// Expected backward vectors F_sigma^1..4 of fig1.
std::vector<FuzzyVec> fig1_backward();

// Greatest right invariances on fig1: eps = 0.1 / (0,3) / (0,4) / eps = 0.2.
FuzzyMat fig1_z01();
FuzzyMat fig1_z03();
FuzzyMat fig1_z04();
FuzzyMat fig1_z02();

// The (Z_{0.1}, 0.1)-afterset automaton of fig1 (5 states).
Ffa fig1_quotient01();

// fig1 with 0.9 self-loops on states 0 and 4.
Ffa in2();

// Intermediate/final automata of the eps = 0.1 product run on in2, and the
// final automaton of the eps = 0, k = 3 run.
Ffa in2_a1();
Ffa in2_a2();
Ffa in2_k3_result();

// 28-state two-symbol chain of four 7-state blocks.
Ffa in3();

// 8 states in four disconnected 2-state components; states 2..5 are
// neither reachable nor productive.
Ffa in7();

}  // namespace fuzzred::fixtures

#endif  // FUZZRED_TESTS_FIXTURES_HPP_
