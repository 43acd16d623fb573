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

#include "fixtures.hpp"

#include <cassert>

namespace fuzzred::fixtures {

FuzzyMat mat(std::size_t n, std::initializer_list<double> entries) {
  assert(entries.size() == n * n);
  FuzzyMat m(n);
  std::size_t idx = 0;
  for (double v : entries) {
    m(idx / n, idx % n) = v;
    ++idx;
  }
  return m;
}

Ffa fig1() {
  return Ffa(default_alphabet(1), {1, 0, 0, 1, 0, 0, 0},
             {mat(7,
                  {0, 0.6, 0,   0, 0,   0,   0,    //
                   0, 0,   0.8, 0, 0,   0,   0,    //
                   0.4, 0, 0,   0, 0,   0,   0,    //
                   0, 0,   0,   0, 1,   0,   0,    //
                   0, 0.5, 0,   0, 0,   0.4, 0,    //
                   0, 0,   0.7, 0, 0,   0,   0.8,  //
                   0, 0,   0,   0, 0.4, 0,   0})},
             {0, 0, 0.5, 0, 0, 0, 0.5});
}

std::vector<FuzzyVec> fig1_backward() {
  return {{0, 0.4, 0, 0, 0, 0.4, 0},
          {0.24, 0, 0, 0, 0.2, 0, 0},
          {0, 0, 0.096, 0.2, 0, 0, 0.08},
          {0, 0.0768, 0, 0, 0, 0.0672, 0}};
}

FuzzyMat fig1_z01() {
  const double a = 5.0 / 12.0;
  const double b = 5.0 / 6.0;
  return mat(7, {1, 0.25, 0.2, 0.5, 1,   0.25, 0.2,  //
                 a, 1,    0.2, 0.5, 0.5, 1,    0.2,  //
                 a, 0.25, 1,   0.5, 0.5, 0.25, 1,    //
                 a, 0.25, 0.2, 1,   0.5, 0.25, 0.2,  //
                 b, 0.25, 0.2, 0.5, 1,   0.25, 0.2,  //
                 a, 1,    0.2, 0.5, 0.5, 1,    0.2,  //
                 a, 0.25, 1,   0.5, 0.5, 0.25, 1});
}

FuzzyMat fig1_z03() {
  const double b = 5.0 / 6.0;
  return mat(7, {1, 0, 0, 0,    1, 0, 0,  //
                 0, 1, 0, 0,    0, 1, 0,  //
                 0, 0, 1, 0.48, 0, 0, 1,  //
                 0, 0, 0, 1,    0, 0, 0,  //
                 b, 0, 0, 0,    1, 0, 0,  //
                 0, 1, 0, 0,    0, 1, 0,  //
                 0, 0, b, 0.4,  0, 0, 1});
}

FuzzyMat fig1_z04() {
  FuzzyMat z = fig1_z03();
  z(5, 1) = 0.875;
  return z;
}

FuzzyMat fig1_z02() {
  const double b = 5.0 / 6.0;
  return mat(7, {1, 0.5, 0.4, 1, 1, 0.5, 0.4,  //
                 b, 1,   0.4, 1, 1, 1,   0.4,  //
                 b, 0.5, 1,   1, 1, 0.5, 1,    //
                 b, 0.5, 0.4, 1, 1, 0.5, 0.4,  //
                 b, 0.5, 0.4, 1, 1, 0.5, 0.4,  //
                 b, 1,   0.4, 1, 1, 1,   0.4,  //
                 b, 0.5, 1,   1, 1, 0.5, 1});
}

Ffa fig1_quotient01() {
  const double a = 5.0 / 12.0;
  const double b = 5.0 / 6.0;
  return Ffa(default_alphabet(1), {1, 0.25, 0.2, 1, 1},
             {mat(5,
                  {a, 0.6,  0.2, 0.3,  0.5,  //
                   a, 0.25, 0.8, 0.4,  0.5,  //
                   a, 0.25, 0.2, 0.25, 0.5,  //
                   b, 0.25, 0.2, 0.5,  1,    //
                   a, 0.5,  0.2, 0.25, 0.5})},
             {0.1, 0.1, 0.5, 0.1, 0.1});
}

Ffa in2() {
  Ffa a = fig1();
  a.delta[0](0, 0) = 0.9;
  a.delta[0](4, 4) = 0.9;
  return a;
}

Ffa in2_a1() {
  const double a = 5.0 / 12.0;
  const double b = 5.0 / 6.0;
  return Ffa(default_alphabet(1), {1, 0.25, 0.2, 1, 1},
             {mat(5,
                  {0.9,  0.6,  0.2, 0.9,  1,    //
                   a,    0.25, 0.8, 0.45, 0.5,  //
                   a,    0.25, 0.2, 0.45, 0.5,  //
                   b,    0.25, 0.2, 0.9,  1,    //
                   0.75, 0.5,  0.2, 0.81, 0.9})},
             {0.1, 0.1, 0.5, 0.1, 0.1});
}

Ffa in2_a2() {
  return Ffa(default_alphabet(1), {1, 0.25, 0.2, 1},
             {mat(4,
                  {0.9,  0.6,  0.2, 1,  //
                   0.9,  0.8,  0.8, 1,  //
                   0.9,  0.8,  0.8, 1,  //
                   0.81, 0.54, 0.2, 0.9})},
             {0.1, 1.0 / 6.0, 0.5, 0.1});
}

Ffa in2_k3_result() {
  return Ffa(default_alphabet(1), {1, 0, 0, 1},
             {mat(4,
                  {0.9,  0.6,  0,   1,  //
                   0.9,  0.8,  0.8, 1,  //
                   0.9,  0.8,  0.8, 1,  //
                   0.81, 0.54, 0,   0.9})},
             {0, 0, 0.5, 0});
}

Ffa in3() {
  const std::size_t n = 28;
  FuzzyVec initial(n, 0.0), accepting(n, 0.0);
  std::vector<FuzzyMat> delta(2, FuzzyMat(n));

  // Four copies of the 7-state block; blocks 0 and 2 step on symbol 0,
  // blocks 1 and 3 on symbol 1.
  const struct {
    std::size_t from, to;
    double v;
  } block[] = {{0, 1, 0.6}, {1, 2, 0.8}, {2, 0, 0.4},
               {4, 1, 0.5}, {4, 5, 0.4}, {5, 2, 0.7},
               {5, 6, 0.8}, {6, 4, 0.4}, {3, 4, 1.0}};
  for (std::size_t blk = 0; blk < 4; ++blk) {
    const std::size_t base = 7 * blk;
    const std::size_t sym = blk % 2;
    for (const auto& e : block)
      delta[sym](base + e.from, base + e.to) = e.v;
  }
  // Chain the blocks: exits of block i feed block i+1, on block i's symbol.
  for (std::size_t blk = 0; blk < 3; ++blk) {
    const std::size_t base = 7 * blk;
    const std::size_t sym = blk % 2;
    delta[sym](base + 2, base + 7 + 0) = 0.5;
    delta[sym](base + 6, base + 7 + 3) = 0.5;
  }
  initial[0] = 1.0;
  initial[3] = 1.0;
  accepting[21 + 2] = 0.5;
  accepting[21 + 6] = 0.5;
  return Ffa(default_alphabet(2), std::move(initial), std::move(delta),
             std::move(accepting));
}

Ffa in7() {
  const std::size_t n = 8;
  FuzzyVec initial(n, 0.0), accepting(n, 0.0);
  std::vector<FuzzyMat> delta(2, FuzzyMat(n));
  for (std::size_t i = 0; i < n; ++i) {
    delta[0](i, i) = 0.5;
    delta[1](i, n - 1 - i) = 0.5;
  }
  initial[0] = initial[1] = 0.5;
  accepting[6] = accepting[7] = 0.5;
  return Ffa(default_alphabet(2), std::move(initial), std::move(delta),
             std::move(accepting));
}

}  // namespace fuzzred::fixtures
