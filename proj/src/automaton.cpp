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

#include "fuzzred/automaton.hpp"

#include <stdexcept>

namespace fuzzred {

Ffa::Ffa(std::vector<std::string> alphabet_in, FuzzyVec initial_in,
         std::vector<FuzzyMat> delta_in, FuzzyVec accepting_in)
    : alphabet(std::move(alphabet_in)),
      initial(std::move(initial_in)),
      delta(std::move(delta_in)),
      accepting(std::move(accepting_in)) {
  if (alphabet.empty()) throw std::invalid_argument("Ffa: empty alphabet");
  const std::size_t n = initial.size();
  if (accepting.size() != n)
    throw std::invalid_argument("Ffa: |I| != |F|");
  if (delta.size() != alphabet.size())
    throw std::invalid_argument("Ffa: one transition matrix per symbol");
  for (const FuzzyMat& m : delta)
    if (m.dim() != n)
      throw std::invalid_argument("Ffa: transition matrix dimension");
  for (Value v : initial) require_value(v, "Ffa initial");
  for (Value v : accepting) require_value(v, "Ffa final");
  for (const FuzzyMat& m : delta)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        require_value(m(i, j), "Ffa transition");
}

std::vector<std::string> default_alphabet(std::size_t s) {
  std::vector<std::string> names;
  names.reserve(s);
  for (std::size_t j = 0; j < s; ++j) names.push_back(std::to_string(j));
  return names;
}

namespace {

void require_word(const Ffa& a, const Word& w) {
  for (std::size_t j : w)
    if (j >= a.num_symbols())
      throw std::invalid_argument("word: symbol index out of range");
}

}  // namespace

FuzzyMat delta_word(const Ffa& a, const Word& w, const Lattice& lat) {
  require_word(a, w);
  FuzzyMat m = FuzzyMat::identity(a.num_states());
  for (std::size_t j : w) m = compose_mm(m, a.delta[j], lat);
  return m;
}

FuzzyVec forward(const Ffa& a, const Word& w, const Lattice& lat) {
  require_word(a, w);
  FuzzyVec f = a.initial;
  for (std::size_t j : w) f = compose_vm(f, a.delta[j], lat);
  return f;
}

FuzzyVec backward(const Ffa& a, const Word& w, const Lattice& lat) {
  require_word(a, w);
  // F_{sigma u} = delta_sigma o F_u: consume the word right to left.
  FuzzyVec f = a.accepting;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    f = compose_mv(a.delta[*it], f, lat);
  return f;
}

Value language_degree(const Ffa& a, const Word& w, const Lattice& lat) {
  return compose_vv(forward(a, w, lat), a.accepting, lat);
}

Ffa reverse(const Ffa& a) {
  std::vector<FuzzyMat> delta;
  delta.reserve(a.delta.size());
  for (const FuzzyMat& m : a.delta) delta.push_back(m.transpose());
  return Ffa(a.alphabet, a.accepting, std::move(delta), a.initial);
}

namespace {

// Boolean reachability from support(start) along positive transitions.
std::vector<bool> support_reachable(const Ffa& a, const FuzzyVec& start,
                                    bool follow_transposed) {
  const std::size_t n = a.num_states();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t q = 0; q < n; ++q)
    if (start[q] > 0.0) {
      seen[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    const std::size_t q = stack.back();
    stack.pop_back();
    for (const FuzzyMat& m : a.delta)
      for (std::size_t p = 0; p < n; ++p) {
        const Value v = follow_transposed ? m(p, q) : m(q, p);
        if (v > 0.0 && !seen[p]) {
          seen[p] = true;
          stack.push_back(p);
        }
      }
  }
  return seen;
}

}  // namespace

TrimResult trim(const Ffa& a) {
  const std::size_t n = a.num_states();
  const std::vector<bool> reachable = support_reachable(a, a.initial, false);
  const std::vector<bool> productive =
      support_reachable(a, a.accepting, true);

  std::vector<std::size_t> kept;
  for (std::size_t q = 0; q < n; ++q)
    if (reachable[q] && productive[q]) kept.push_back(q);

  const std::size_t m = kept.size();
  FuzzyVec initial(m), accepting(m);
  std::vector<FuzzyMat> delta(a.num_symbols(), FuzzyMat(m));
  for (std::size_t i = 0; i < m; ++i) {
    initial[i] = a.initial[kept[i]];
    accepting[i] = a.accepting[kept[i]];
    for (std::size_t s = 0; s < a.num_symbols(); ++s)
      for (std::size_t j = 0; j < m; ++j)
        delta[s](i, j) = a.delta[s](kept[i], kept[j]);
  }
  return TrimResult{Ffa(a.alphabet, std::move(initial), std::move(delta),
                        std::move(accepting)),
                    std::move(kept)};
}

}  // namespace fuzzred
