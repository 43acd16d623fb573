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

#include "fuzzred/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fuzzred/oracle.hpp"

namespace fuzzred {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::uint64_t parse_k(const std::string& text) {
  if (text == "infinity") return kInfinity;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("k must be a natural number or 'infinity'");
  }
  if (pos != text.size() || text[0] == '-')
    throw std::invalid_argument("k must be a natural number or 'infinity'");
  return v;
}

std::string format_k(std::uint64_t k) {
  return k == kInfinity ? "infinity" : std::to_string(k);
}

namespace {

// Non-blank, non-comment lines split into whitespace tokens.
std::vector<std::vector<std::string>> tokenize(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    lines.push_back(std::move(tokens));
  }
  return lines;
}

double parse_value(const std::string& tok) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + tok);
  }
  if (pos != tok.size()) throw std::invalid_argument("not a number: " + tok);
  require_value(v, "input value");
  return v;
}

std::size_t parse_index(const std::string& tok, std::size_t bound,
                        const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  }
  if (pos != tok.size() || tok[0] == '-')
    throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  if (v >= bound)
    throw std::invalid_argument(std::string(what) + " out of range: " + tok);
  return static_cast<std::size_t>(v);
}

FuzzyVec parse_vector_line(const std::vector<std::string>& tokens,
                           std::size_t n, const char* what) {
  if (tokens.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(n) + " values, got " +
                                std::to_string(tokens.size()));
  FuzzyVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = parse_value(tokens[i]);
  return out;
}

Ffa parse_dense(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) throw std::invalid_argument("dense: empty input");
  if (lines[0].size() != 2)
    throw std::invalid_argument("dense: first line must be `n s`");
  const auto n = static_cast<std::size_t>(
      parse_index(lines[0][0], SIZE_MAX, "state count"));
  const auto s = static_cast<std::size_t>(
      parse_index(lines[0][1], SIZE_MAX, "symbol count"));
  if (s == 0) throw std::invalid_argument("dense: symbol count must be >= 1");

  const std::size_t expected = n == 0 ? 1 : 2 + s * n + 1;
  if (lines.size() != expected)
    throw std::invalid_argument("dense: expected " + std::to_string(expected) +
                                " lines, got " + std::to_string(lines.size()));
  if (n == 0)
    return Ffa(default_alphabet(s), FuzzyVec{},
               std::vector<FuzzyMat>(s, FuzzyMat(0)), FuzzyVec{});

  std::size_t row = 1;
  FuzzyVec initial = parse_vector_line(lines[row++], n, "dense I line");
  std::vector<FuzzyMat> delta(s, FuzzyMat(n));
  for (std::size_t sym = 0; sym < s; ++sym)
    for (std::size_t i = 0; i < n; ++i) {
      const FuzzyVec r = parse_vector_line(lines[row++], n, "dense matrix row");
      for (std::size_t j = 0; j < n; ++j) delta[sym](i, j) = r[j];
    }
  FuzzyVec accepting = parse_vector_line(lines[row++], n, "dense F line");
  return Ffa(default_alphabet(s), std::move(initial), std::move(delta),
             std::move(accepting));
}

Ffa parse_sparse(const std::vector<std::vector<std::string>>& lines) {
  std::size_t n = 0, s = 0;
  bool have_n = false, have_s = false;
  FuzzyVec initial, accepting;
  std::vector<FuzzyMat> delta;
  std::set<std::size_t> seen_initial, seen_final;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_trans;

  for (const auto& tokens : lines) {
    const std::string& tag = tokens[0];
    if (tag == "states") {
      if (have_n) throw std::invalid_argument("sparse: duplicate `states`");
      if (tokens.size() != 2)
        throw std::invalid_argument("sparse: `states n`");
      n = parse_index(tokens[1], SIZE_MAX, "state count");
      have_n = true;
      continue;
    }
    if (tag == "symbols") {
      if (have_s) throw std::invalid_argument("sparse: duplicate `symbols`");
      if (tokens.size() != 2)
        throw std::invalid_argument("sparse: `symbols s`");
      s = parse_index(tokens[1], SIZE_MAX, "symbol count");
      if (s == 0)
        throw std::invalid_argument("sparse: symbol count must be >= 1");
      have_s = true;
      continue;
    }
    if (!have_n || !have_s)
      throw std::invalid_argument(
          "sparse: `states` and `symbols` must come before entries");
    if (initial.empty() && n > 0) {
      initial.assign(n, 0.0);
      accepting.assign(n, 0.0);
      delta.assign(s, FuzzyMat(n));
    }
    if (tag == "initial" || tag == "final") {
      if (tokens.size() != 3)
        throw std::invalid_argument("sparse: `" + tag + " q v`");
      const std::size_t q = parse_index(tokens[1], n, "state index");
      const double v = parse_value(tokens[2]);
      auto& seen = tag == "initial" ? seen_initial : seen_final;
      if (!seen.insert(q).second)
        throw std::invalid_argument("sparse: duplicate `" + tag + "` entry");
      (tag == "initial" ? initial : accepting)[q] = v;
    } else if (tag == "trans") {
      if (tokens.size() != 5)
        throw std::invalid_argument("sparse: `trans q j p v`");
      const std::size_t q = parse_index(tokens[1], n, "state index");
      const std::size_t j = parse_index(tokens[2], s, "symbol index");
      const std::size_t p = parse_index(tokens[3], n, "state index");
      const double v = parse_value(tokens[4]);
      if (!seen_trans.insert({q, j, p}).second)
        throw std::invalid_argument("sparse: duplicate `trans` entry");
      delta[j](q, p) = v;
    } else {
      throw std::invalid_argument("sparse: unknown line tag `" + tag + "`");
    }
  }
  if (!have_n || !have_s)
    throw std::invalid_argument("sparse: missing `states` or `symbols`");
  if (n > 0 && initial.empty()) {
    initial.assign(n, 0.0);
    accepting.assign(n, 0.0);
    delta.assign(s, FuzzyMat(n));
  }
  if (n == 0) delta.assign(s, FuzzyMat(0));
  return Ffa(default_alphabet(s), std::move(initial), std::move(delta),
             std::move(accepting));
}

}  // namespace

Ffa parse_automaton(std::istream& in, Format format) {
  const auto lines = tokenize(in);
  return format == Format::kDense ? parse_dense(lines) : parse_sparse(lines);
}

Ffa parse_automaton(const std::string& text, Format format) {
  std::istringstream in(text);
  return parse_automaton(in, format);
}

std::string serialize_dense(const Ffa& a) {
  std::ostringstream out;
  const std::size_t n = a.num_states();
  out << n << ' ' << a.num_symbols() << '\n';
  if (n == 0) return out.str();
  auto emit_vec = [&out](const FuzzyVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (i ? " " : "") << format_value(v[i]);
    out << '\n';
  };
  emit_vec(a.initial);
  for (const FuzzyMat& m : a.delta)
    for (std::size_t i = 0; i < n; ++i) emit_vec(afterset(m, i));
  emit_vec(a.accepting);
  return out.str();
}

std::string serialize_sparse(const Ffa& a) {
  std::ostringstream out;
  const std::size_t n = a.num_states();
  out << "states " << n << '\n';
  out << "symbols " << a.num_symbols() << '\n';
  for (std::size_t q = 0; q < n; ++q)
    if (a.initial[q] != 0.0)
      out << "initial " << q << ' ' << format_value(a.initial[q]) << '\n';
  for (std::size_t q = 0; q < n; ++q)
    if (a.accepting[q] != 0.0)
      out << "final " << q << ' ' << format_value(a.accepting[q]) << '\n';
  for (std::size_t j = 0; j < a.num_symbols(); ++j)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < n; ++p)
        if (a.delta[j](q, p) != 0.0)
          out << "trans " << q << ' ' << j << ' ' << p << ' '
              << format_value(a.delta[j](q, p)) << '\n';
  return out.str();
}

namespace {

std::string format_word(const Ffa& a, const Word& w) {
  if (w.empty()) return "epsilon";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += a.alphabet[w[i]];
  }
  return out;
}

}  // namespace

int run(const RunOptions& options, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Ffa input;
  ReductionConfig cfg;
  try {
    cfg.eps = options.epsilon;
    cfg.k = options.k;
    cfg.lattice = Lattice{structure_from_letter(options.structure),
                          options.hamacher_lambda};
    cfg.precision = options.precision;
    cfg.max_closure = options.max_closure;
    validate(cfg);
    input = parse_automaton(in, options.format);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  ReductionReport report;
  try {
    report = soft_state_reduction(input, cfg);
  } catch (const ClosureCapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitClosureCap;
  }

  if (options.verbose) {
    for (const auto& [phase, count] : report.phase_state_counts)
      out << "# phase " << phase << " states=" << count << '\n';
    out << "# branch " << (report.reversed_branch ? "reversed" : "direct")
        << '\n';
    out << "# while_loop_iterations " << report.while_loop_iterations << '\n';
    out << "# closure_step_executions " << report.closure_step_executions
        << '\n';
  }
  out << serialize_dense(report.result);

  if (options.check > 0) {
    const std::uint64_t length = std::min(options.check, cfg.k);
    EquivalenceVerdict verdict;
    try {
      verdict = check_eps_equivalent(input, report.result, cfg.eps, length,
                                     cfg.lattice);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    if (!verdict.equivalent) {
      out << "COUNTEREXAMPLE word=" << format_word(input, verdict.counterexample)
          << " lhs=" << format_value(verdict.lhs)
          << " rhs=" << format_value(verdict.rhs) << '\n';
      err << "error: reduced automaton failed the equivalence check" << '\n';
      return kExitCheckFailed;
    }
    out << "EQUIVALENT(eps=" << format_value(cfg.eps)
        << ", k=" << format_k(length) << ")\n";
  }
  return kExitOk;
}

}  // namespace fuzzred
