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

#ifndef FUZZRED_IO_HPP_
#define FUZZRED_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fuzzred/automaton.hpp"
#include "fuzzred/reduction.hpp"

namespace fuzzred {

enum class Format { kDense, kSparse };

// Value rendering used everywhere text is emitted: up to 12 significant
// digits, trailing zeros trimmed.
std::string format_value(double v);

// Parses "infinity" or a natural number.
std::uint64_t parse_k(const std::string& text);
std::string format_k(std::uint64_t k);

// Dense format:
//   line 1: `n s`; line 2: n values of I; then s blocks of n lines with n
//   values each (delta per symbol); final line: n values of F.
// Sparse format:
//   `states n`, `symbols s`, then lines `initial q v`, `final q v`,
//   `trans q j p v` (symbol index j); unmentioned entries are 0; duplicates
//   are errors.
// Comment lines start with `#`; blank lines are ignored.
Ffa parse_automaton(std::istream& in, Format format);
Ffa parse_automaton(const std::string& text, Format format);

std::string serialize_dense(const Ffa& a);
std::string serialize_sparse(const Ffa& a);

struct RunOptions {
  double epsilon = 0.0;
  std::uint64_t k = kInfinity;
  char structure = 'P';
  double hamacher_lambda = 0.0;
  Format format = Format::kDense;
  bool verbose = false;
  double precision = 1e-12;
  std::uint64_t max_closure = 10'000'000;
  std::uint64_t check = 0;  // bounded oracle length; 0 = skip the check
};

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // parse / config errors
inline constexpr int kExitClosureCap = 2;  // closure insertion cap hit
inline constexpr int kExitCheckFailed = 3; // oracle found a counterexample

// Reads an automaton from `in`, reduces it, and writes the result (dense) to
// `out`; diagnostics go to `err`. Returns one of the exit codes above.
int run(const RunOptions& options, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fuzzred

#endif  // FUZZRED_IO_HPP_
