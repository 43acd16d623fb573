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

// fuzzred: soft state reduction of fuzzy finite automata.
//
//   fuzzred epsilon [options] < input > output

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fuzzred/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Soft state reduction of fuzzy finite automata"};

  fuzzred::RunOptions options;
  std::string k_text = "infinity";
  std::string structure = "P";
  bool sparse = false;
  std::string out_path;

  app.add_option("epsilon", options.epsilon,
                 "approximation threshold in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--k", k_text, "word length bound (natural or 'infinity')")
      ->capture_default_str();
  app.add_option("--structure", structure,
                 "residuated lattice: P, H, G, L or N")
      ->check(CLI::IsMember({"P", "H", "G", "L", "N"}))
      ->capture_default_str();
  app.add_option("--hamacher-lambda", options.hamacher_lambda,
                 "Hamacher family parameter (>= 0)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--sparse", sparse, "read the sparse input format");
  app.add_flag("--verbose", options.verbose,
               "print per-phase state counts and counters");
  app.add_option("--precision", options.precision,
                 "quantization precision for vector equality")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-closure", options.max_closure,
                 "cap on closure insertions")
      ->capture_default_str();
  app.add_option("--check", options.check,
                 "verify the result on all words up to this length (0 = off)");
  app.add_option("--out", out_path, "write output to this file, not stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    options.k = fuzzred::parse_k(k_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fuzzred::kExitUsage;
  }
  options.structure = structure[0];
  options.format = sparse ? fuzzred::Format::kSparse : fuzzred::Format::kDense;

  if (out_path.empty())
    return fuzzred::run(options, std::cin, std::cout, std::cerr);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << '\n';
    return fuzzred::kExitUsage;
  }
  return fuzzred::run(options, std::cin, out, std::cerr);
}
