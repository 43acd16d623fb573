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

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fuzzred/io.hpp"

namespace fuzzred {

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.structures.empty() || spec.epsilons.empty() || spec.ks.empty())
    throw std::invalid_argument("run_sweep: empty parameter axis");

  std::vector<SweepRow> rows;
  for (const Lattice& lat : spec.structures)
    for (Value eps : spec.epsilons)
      for (std::uint64_t k : spec.ks) {
        SweepRow row;
        row.lattice = lat;
        row.eps = eps;
        row.k = k;
        try {
          ReductionConfig cfg;
          cfg.eps = eps;
          cfg.k = k;
          cfg.lattice = lat;
          cfg.precision = spec.precision;
          cfg.max_closure = spec.max_closure;
          const ReductionReport report =
              soft_state_reduction(spec.input, cfg);
          row.remaining_states = report.result.num_states();
          row.closure_steps = report.closure_step_executions;
          row.loop_iterations = report.while_loop_iterations;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.lattice.structure != b.lattice.structure)
      return a.lattice.structure < b.lattice.structure;
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.k < b.k;
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "structure,epsilon,k,remaining_states,closure_steps,"
         "loop_iterations,error\n";
  for (const SweepRow& row : rows) {
    out << structure_letter(row.lattice.structure) << ','
        << format_value(row.eps) << ',' << format_k(row.k) << ',';
    if (row.error.empty()) {
      out << row.remaining_states << ',' << row.closure_steps << ','
          << row.loop_iterations << ',';
    } else {
      out << ",,," << row.error;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

Value draw_value(std::mt19937_64& rng, const RandomSpec& spec) {
  if (!spec.grid.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, spec.grid.size() - 1);
    return spec.grid[pick(rng)];
  }
  std::uniform_real_distribution<double> dist(spec.lo, spec.hi);
  return dist(rng);
}

// A guaranteed-positive degree, for the at-least-one-nonzero constraints.
Value draw_nonzero(std::mt19937_64& rng, const RandomSpec& spec) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Value v = draw_value(rng, spec);
    if (v > 0.0) return v;
  }
  throw std::invalid_argument("generate_random: value set has no nonzero");
}

}  // namespace

Ffa generate_random(const RandomSpec& spec, std::uint64_t seed) {
  if (spec.n == 0)
    throw std::invalid_argument("generate_random: need at least one state");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw std::invalid_argument("generate_random: density must be in (0,1]");
  if (spec.grid.empty() && !(0.0 <= spec.lo && spec.lo <= spec.hi &&
                             spec.hi <= 1.0))
    throw std::invalid_argument("generate_random: bad value interval");
  for (Value v : spec.grid) require_value(v, "generate_random grid");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(spec.density);
  std::uniform_int_distribution<std::size_t> pick_state(0, spec.n - 1);

  auto fill_vec = [&](FuzzyVec& v) {
    bool any = false;
    for (std::size_t i = 0; i < spec.n; ++i)
      if (present(rng)) {
        v[i] = draw_value(rng, spec);
        any = any || v[i] > 0.0;
      }
    if (!any) v[pick_state(rng)] = draw_nonzero(rng, spec);
  };

  FuzzyVec initial(spec.n, 0.0), accepting(spec.n, 0.0);
  std::vector<FuzzyMat> delta(spec.s, FuzzyMat(spec.n));
  fill_vec(initial);
  fill_vec(accepting);
  for (std::size_t sym = 0; sym < spec.s; ++sym)
    for (std::size_t i = 0; i < spec.n; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < spec.n; ++j)
        if (present(rng)) {
          delta[sym](i, j) = draw_value(rng, spec);
          any = any || delta[sym](i, j) > 0.0;
        }
      if (!any) delta[sym](i, pick_state(rng)) = draw_nonzero(rng, spec);
    }
  return Ffa(default_alphabet(spec.s), std::move(initial), std::move(delta),
             std::move(accepting));
}

}  // namespace fuzzred
