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

#include "fuzzred/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fuzzred {

namespace {

// Number of words of length <= k over s symbols, guarded against the budget.
std::uint64_t word_count_or_throw(std::size_t s, std::uint64_t k) {
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::uint64_t len = 0;; ++len) {
    total += layer;
    if (total > kOracleWordBudget) throw EnumerationBudgetError();
    if (len == k) return total;
    if (layer > kOracleWordBudget / s) throw EnumerationBudgetError();
    layer *= s;
  }
}

}  // namespace

LanguageTable language_table(const Ffa& a, std::uint64_t k,
                             const Lattice& lat) {
  word_count_or_throw(a.num_symbols(), k);
  LanguageTable table;
  table.max_len = k;

  // Depth-first over the word tree with one forward vector per prefix.
  struct Frame {
    Word word;
    FuzzyVec fwd;
  };
  std::vector<Frame> stack;
  stack.push_back({Word{}, a.initial});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    table.degrees.emplace(frame.word,
                          compose_vv(frame.fwd, a.accepting, lat));
    if (frame.word.size() < k) {
      for (std::size_t s = a.num_symbols(); s-- > 0;) {
        Word w = frame.word;
        w.push_back(s);
        stack.push_back({std::move(w), compose_vm(frame.fwd, a.delta[s], lat)});
      }
    }
  }
  return table;
}

EquivalenceVerdict check_eps_equivalent(const Ffa& a, const Ffa& b, Value eps,
                                        std::uint64_t k, const Lattice& lat) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("check_eps_equivalent: alphabet mismatch");
  word_count_or_throw(a.num_symbols(), k);

  // Breadth-first with ascending symbols yields length-then-lex order, so
  // the first failure found is the canonical counterexample.
  struct Item {
    Word word;
    FuzzyVec fa, fb;
  };
  std::deque<Item> queue;
  queue.push_back({Word{}, a.initial, b.initial});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    const Value da = compose_vv(item.fa, a.accepting, lat);
    const Value db = compose_vv(item.fb, b.accepting, lat);
    if (!eq_eps(da, db, eps))
      return EquivalenceVerdict{false, item.word, da, db};
    if (item.word.size() < k) {
      for (std::size_t s = 0; s < a.num_symbols(); ++s) {
        Word w = item.word;
        w.push_back(s);
        queue.push_back({std::move(w), compose_vm(item.fa, a.delta[s], lat),
                         compose_vm(item.fb, b.delta[s], lat)});
      }
    }
  }
  return EquivalenceVerdict{};
}

namespace {

bool invariant_on_all_backward(const Ffa& a, const FuzzyMat& z, Value eps,
                               std::uint64_t depth_left, const FuzzyVec& f,
                               const Lattice& lat) {
  if (!eq_eps_vec(compose_mv(z, f, lat), f, eps)) return false;
  if (depth_left == 0) return true;
  for (std::size_t s = 0; s < a.num_symbols(); ++s) {
    if (!invariant_on_all_backward(a, z, eps, depth_left - 1,
                                   compose_mv(a.delta[s], f, lat), lat))
      return false;
  }
  return true;
}

void collect_residual_values(const Ffa& a, Value eps, std::uint64_t depth_left,
                             const FuzzyVec& f, const Lattice& lat,
                             std::set<Value>& grid) {
  const FuzzyVec t = truncate_vec(f, eps);
  for (Value x : t)
    for (Value y : t) grid.insert(lat.residuum_eps(x, y, eps));
  if (depth_left == 0) return;
  for (std::size_t s = 0; s < a.num_symbols(); ++s)
    collect_residual_values(a, eps, depth_left - 1,
                            compose_mv(a.delta[s], f, lat), lat, grid);
}

}  // namespace

bool verify_right_invariance(const Ffa& a, const FuzzyMat& z, Value eps,
                             std::uint64_t k, const Lattice& lat) {
  if (z.dim() != a.num_states())
    throw std::invalid_argument("verify_right_invariance: dimension mismatch");
  word_count_or_throw(a.num_symbols(), k);
  if (!z.reflexive()) return false;
  return invariant_on_all_backward(a, z, eps, k, a.accepting, lat);
}

bool verify_greatest(const Ffa& a, const FuzzyMat& z, Value eps,
                     std::uint64_t k, const Lattice& lat) {
  if (!verify_right_invariance(a, z, eps, k, lat)) return false;

  // Raising a single entry of z to any feasible larger value is a complete
  // test: the greatest invariance takes entry values from the residual grid,
  // and whenever some invariance exceeds z at (p,q) so does z with just that
  // entry raised.
  std::set<Value> grid;
  collect_residual_values(a, eps, k, a.accepting, lat, grid);
  grid.insert(1.0);

  const std::size_t n = z.dim();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      for (Value v : grid) {
        if (v <= z(p, q)) continue;
        FuzzyMat raised = z;
        raised(p, q) = v;
        if (verify_right_invariance(a, raised, eps, k, lat)) return false;
      }
    }
  return true;
}

}  // namespace fuzzred
