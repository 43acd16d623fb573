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

// fuzzsweep: run the reduction over a (structure x epsilon x k) grid and
// emit a CSV table. The input automaton comes from stdin, or from the
// random generator with --random plus a --seeds range (one sweep per seed,
// with a leading seed column).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzred/io.hpp"
#include "fuzzred/sweep.hpp"

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter sweeps for soft state reduction"};

  std::string structures_text = "P,H,G,L,N";
  std::string eps_text = "0";
  std::string k_text = "infinity";
  double hamacher_lambda = 0.0;
  bool sparse = false;
  double precision = 1e-12;
  std::uint64_t max_closure = 10'000'000;
  std::string out_path;
  std::string random_text;
  std::string seeds_text = "0..0";

  app.add_option("--structures", structures_text,
                 "comma-separated lattice letters (P,H,G,L,N)")
      ->capture_default_str();
  app.add_option("--eps", eps_text, "comma-separated epsilon values")
      ->capture_default_str();
  app.add_option("--k", k_text,
                 "comma-separated k values (naturals or 'infinity')")
      ->capture_default_str();
  app.add_option("--hamacher-lambda", hamacher_lambda,
                 "Hamacher family parameter (>= 0)");
  app.add_flag("--sparse", sparse, "read the sparse input format");
  app.add_option("--precision", precision, "quantization precision")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-closure", max_closure, "cap on closure insertions");
  app.add_option("--out", out_path, "write CSV to this file, not stdout");
  app.add_option("--random", random_text,
                 "generate inputs: n=<states>,s=<symbols>,density=<d>,"
                 "lo=<v>,hi=<v> (instead of stdin)");
  app.add_option("--seeds", seeds_text,
                 "seed range a..b for --random campaigns")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  fuzzred::SweepSpec spec;
  spec.precision = precision;
  spec.max_closure = max_closure;
  try {
    for (const std::string& s : split(structures_text, ',')) {
      if (s.size() != 1) throw std::invalid_argument("bad structure: " + s);
      spec.structures.push_back(
          {fuzzred::structure_from_letter(s[0]), hamacher_lambda});
    }
    for (const std::string& e : split(eps_text, ','))
      spec.epsilons.push_back(std::stod(e));
    for (const std::string& k : split(k_text, ','))
      spec.ks.push_back(fuzzred::parse_k(k));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open output file: " << out_path << '\n';
      return 1;
    }
    out = &file;
  }

  try {
    if (random_text.empty()) {
      spec.input = fuzzred::parse_automaton(
          std::cin,
          sparse ? fuzzred::Format::kSparse : fuzzred::Format::kDense);
      *out << fuzzred::sweep_csv(fuzzred::run_sweep(spec));
      return 0;
    }

    fuzzred::RandomSpec random;
    for (const std::string& kv : split(random_text, ',')) {
      const auto pos = kv.find('=');
      if (pos == std::string::npos)
        throw std::invalid_argument("bad --random item: " + kv);
      const std::string key = kv.substr(0, pos);
      const std::string value = kv.substr(pos + 1);
      if (key == "n") random.n = std::stoul(value);
      else if (key == "s") random.s = std::stoul(value);
      else if (key == "density") random.density = std::stod(value);
      else if (key == "lo") random.lo = std::stod(value);
      else if (key == "hi") random.hi = std::stod(value);
      else throw std::invalid_argument("bad --random key: " + key);
    }

    const auto sep = seeds_text.find("..");
    if (sep == std::string::npos)
      throw std::invalid_argument("--seeds must be a range a..b");
    const std::uint64_t first = std::stoull(seeds_text.substr(0, sep));
    const std::uint64_t last = std::stoull(seeds_text.substr(sep + 2));
    if (last < first) throw std::invalid_argument("--seeds: empty range");

    *out << "seed,structure,epsilon,k,remaining_states,closure_steps,"
            "loop_iterations,error\n";
    for (std::uint64_t seed = first; seed <= last; ++seed) {
      spec.input = fuzzred::generate_random(random, seed);
      const std::string csv = fuzzred::sweep_csv(fuzzred::run_sweep(spec));
      // Prepend the seed to every data row of the per-seed table.
      std::istringstream rows(csv);
      std::string row;
      std::getline(rows, row);  // drop the inner header
      while (std::getline(rows, row)) *out << seed << ',' << row << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
