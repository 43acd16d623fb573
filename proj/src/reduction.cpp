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

#include "fuzzred/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fuzzred {

void validate(const ReductionConfig& cfg) {
  require_value(cfg.eps, "ReductionConfig eps");
  if (!(cfg.precision > 0.0))
    throw std::invalid_argument("ReductionConfig: precision must be > 0");
  if (cfg.lattice.structure == Structure::kHamacher &&
      !(cfg.lattice.hamacher_lambda >= 0.0))
    throw std::invalid_argument("ReductionConfig: Hamacher lambda must be >= 0");
}

namespace {

// Key for vector equality: every entry rounded to the nearest multiple of
// the configured precision.
std::vector<long long> quantize(const FuzzyVec& f, double precision) {
  std::vector<long long> key(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    key[i] = std::llround(f[i] / precision);
  return key;
}

// Like is_eps_fpo, but tolerates eps-transitivity violations up to
// cfg.precision: relations computed by greatest_right_invariance satisfy
// Z o Z <=eps Z in exact arithmetic, yet rounding may push single entries a
// few ulps above the bound.
bool is_eps_fpo_within_precision(const FuzzyMat& z, const ReductionConfig& cfg) {
  if (!z.reflexive()) return false;
  if (truncate_mat(z, cfg.eps) != z) return false;
  const FuzzyMat zz = compose_eps_mm(z, z, cfg.eps, cfg.lattice);
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j)
      if (!leq_eps(zz(i, j), z(i, j), cfg.eps) &&
          zz(i, j) - z(i, j) > cfg.precision)
        return false;
  return true;
}

}  // namespace

ClosureSet closure(const Ffa& a, const ReductionConfig& cfg) {
  validate(cfg);
  if (a.num_states() == 0)
    throw std::invalid_argument("closure: automaton must have >= 1 state");

  ClosureSet cs;
  std::map<std::vector<long long>, std::size_t> seen;

  const FuzzyVec seed = truncate_vec(a.accepting, cfg.eps);
  seen.emplace(quantize(seed, cfg.precision), 0);
  cs.vectors.push_back(seed);
  cs.frontier.push_back(0);

  while (!cs.frontier.empty() && cs.rounds < cfg.k) {
    std::vector<std::size_t> next;
    for (std::size_t idx : cs.frontier) {
      for (std::size_t s = 0; s < a.num_symbols(); ++s) {
        ++cs.step_executions;
        // Composing with an eps-truncated vector already yields the
        // eps-truncation of the next backward vector.
        FuzzyVec g =
            compose_eps_mv(a.delta[s], cs.vectors[idx], cfg.eps, cfg.lattice);
        auto key = quantize(g, cfg.precision);
        auto [it, inserted] = seen.emplace(std::move(key), cs.vectors.size());
        if (inserted) {
          if (cs.vectors.size() + 1 > cfg.max_closure)
            throw ClosureCapError(cfg.max_closure);
          next.push_back(cs.vectors.size());
          cs.vectors.push_back(std::move(g));
        }
      }
    }
    cs.frontier = std::move(next);
    ++cs.rounds;
  }
  cs.halted_by_empty_frontier = cs.frontier.empty();
  return cs;
}

FuzzyMat greatest_right_invariance(const ClosureSet& closure,
                                   const ReductionConfig& cfg) {
  if (closure.vectors.empty())
    throw std::invalid_argument("greatest_right_invariance: empty closure");
  const std::size_t n = closure.vectors.front().size();
  FuzzyMat z(n, 1.0);
  for (const FuzzyVec& f : closure.vectors) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        z(p, q) = std::min(
            z(p, q), cfg.lattice.residuum_eps(f[q], f[p], cfg.eps));
  }
  return truncate_mat(z, cfg.eps);
}

AftersetResult afterset_automaton(const Ffa& a, const FuzzyMat& z,
                                  const ReductionConfig& cfg) {
  validate(cfg);
  const std::size_t n = a.num_states();
  if (z.dim() != n)
    throw std::invalid_argument("afterset_automaton: dimension mismatch");
  if (!is_eps_fpo_within_precision(z, cfg))
    throw std::invalid_argument(
        "afterset_automaton: relation is not an eps-FPO");

  // Group states by afterset (quantized); each class keeps its smallest
  // member as representative, classes ordered by representative.
  std::map<std::vector<long long>, std::size_t> classes;
  std::vector<std::size_t> reps;
  for (std::size_t q = 0; q < n; ++q) {
    auto key = quantize(afterset(z, q), cfg.precision);
    if (classes.emplace(std::move(key), reps.size()).second)
      reps.push_back(q);
  }

  const std::size_t d = reps.size();
  // When no states merge the quotient is only an eps-blurred copy of the
  // input; return the input itself so that a non-reducing pass is a no-op.
  if (d == n) return AftersetResult{a, std::move(reps)};
  FuzzyVec initial(d), accepting(d);
  std::vector<FuzzyMat> delta(a.num_symbols(), FuzzyMat(d));

  std::vector<FuzzyVec> rows(d), cols(d);
  for (std::size_t i = 0; i < d; ++i) {
    rows[i] = afterset(z, reps[i]);
    cols[i] = foreset(z, reps[i]);
  }
  for (std::size_t i = 0; i < d; ++i) {
    initial[i] = compose_eps_vv(a.initial, cols[i], cfg.eps, cfg.lattice);
    accepting[i] = compose_eps_vv(rows[i], a.accepting, cfg.eps, cfg.lattice);
  }
  for (std::size_t s = 0; s < a.num_symbols(); ++s) {
    for (std::size_t i = 0; i < d; ++i) {
      const FuzzyVec row =
          compose_eps_vm(rows[i], a.delta[s], cfg.eps, cfg.lattice);
      for (std::size_t j = 0; j < d; ++j)
        delta[s](i, j) = compose_eps_vv(row, cols[j], cfg.eps, cfg.lattice);
    }
  }
  return AftersetResult{Ffa(a.alphabet, std::move(initial), std::move(delta),
                            std::move(accepting)),
                        std::move(reps)};
}

std::pair<Ffa, ReduceStats> reduce_by_right_invariance(
    const Ffa& a, const ReductionConfig& cfg) {
  const ClosureSet cs = closure(a, cfg);
  const FuzzyMat z = greatest_right_invariance(cs, cfg);
  AftersetResult quotient = afterset_automaton(a, z, cfg);
  ReduceStats stats;
  stats.closure_steps = cs.step_executions;
  stats.closure_size = cs.vectors.size();
  stats.representatives = std::move(quotient.representatives);
  return {std::move(quotient.automaton), std::move(stats)};
}

std::pair<Ffa, Ssr0Stats> soft_state_reduction_0(const Ffa& a,
                                                 const ReductionConfig& cfg) {
  Ssr0Stats stats;
  Ffa current = a;
  if (current.num_states() == 0) return {std::move(current), stats};
  for (;;) {
    ++stats.while_iterations;
    auto [a2, s2] = reduce_by_right_invariance(current, cfg);
    stats.closure_steps += s2.closure_steps;
    stats.representatives.push_back(std::move(s2.representatives));

    auto [rev_reduced, s3] = reduce_by_right_invariance(reverse(a2), cfg);
    stats.closure_steps += s3.closure_steps;
    stats.representatives.push_back(std::move(s3.representatives));
    Ffa a3 = reverse(rev_reduced);

    if (a3.num_states() < current.num_states()) {
      current = std::move(a3);
    } else {
      return {std::move(current), stats};
    }
  }
}

ReductionReport soft_state_reduction(const Ffa& a,
                                     const ReductionConfig& cfg) {
  validate(cfg);
  ReductionReport report;
  report.phase_state_counts.emplace_back("input", a.num_states());

  Ffa trimmed = cfg.trim ? trim(a).automaton : a;
  report.phase_state_counts.emplace_back("trimmed", trimmed.num_states());
  if (trimmed.num_states() == 0) {
    report.result = std::move(trimmed);
    report.phase_state_counts.emplace_back("result", 0);
    return report;
  }

  auto [direct, direct_stats] = soft_state_reduction_0(trimmed, cfg);
  auto [rev_reduced, rev_stats] =
      soft_state_reduction_0(reverse(trimmed), cfg);
  Ffa reversed = reverse(rev_reduced);

  report.while_loop_iterations =
      direct_stats.while_iterations + rev_stats.while_iterations;
  report.closure_step_executions =
      direct_stats.closure_steps + rev_stats.closure_steps;
  report.phase_state_counts.emplace_back("direct", direct.num_states());
  report.phase_state_counts.emplace_back("reversed", reversed.num_states());

  // The direct result wins only with strictly fewer states.
  if (direct.num_states() < reversed.num_states()) {
    report.result = std::move(direct);
    report.representatives = std::move(direct_stats.representatives);
    report.reversed_branch = false;
  } else {
    report.result = std::move(reversed);
    report.representatives = std::move(rev_stats.representatives);
    report.reversed_branch = true;
  }
  report.phase_state_counts.emplace_back("result",
                                         report.result.num_states());
  return report;
}

}  // namespace fuzzred
