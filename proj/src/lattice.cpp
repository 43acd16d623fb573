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

#include "fuzzred/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fuzzred {

bool is_value(Value x) { return x >= 0.0 && x <= 1.0; }

void require_value(Value x, const char* what) {
  if (!is_value(x)) {
    throw std::invalid_argument(std::string(what) +
                                ": value outside [0,1]: " + std::to_string(x));
  }
}

Structure structure_from_letter(char letter) {
  switch (letter) {
    case 'P': return Structure::kProduct;
    case 'H': return Structure::kHamacher;
    case 'G': return Structure::kGodel;
    case 'L': return Structure::kLukasiewicz;
    case 'N': return Structure::kNilpotent;
    default:
      throw std::invalid_argument(std::string("unknown structure letter: ") +
                                  letter);
  }
}

char structure_letter(Structure s) {
  switch (s) {
    case Structure::kProduct: return 'P';
    case Structure::kHamacher: return 'H';
    case Structure::kGodel: return 'G';
    case Structure::kLukasiewicz: return 'L';
    case Structure::kNilpotent: return 'N';
  }
  return '?';
}

std::string structure_name(Structure s) {
  switch (s) {
    case Structure::kProduct: return "product";
    case Structure::kHamacher: return "hamacher";
    case Structure::kGodel: return "godel";
    case Structure::kLukasiewicz: return "lukasiewicz";
    case Structure::kNilpotent: return "nilpotent";
  }
  return "?";
}

Value Lattice::tnorm(Value x, Value y) const {
  // Unit and zero laws hold exactly in every structure; short-circuiting
  // them keeps the division-based formulas free of rounding noise at the
  // boundary values that dominate invariance matrices.
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  if (x == 0.0 || y == 0.0) return 0.0;
  switch (structure) {
    case Structure::kProduct:
      return x * y;
    case Structure::kHamacher: {
      const double lambda = hamacher_lambda;
      if (x == 0.0 && y == 0.0 && lambda == 0.0) return 0.0;
      const double denom = lambda + (1.0 - lambda) * (x + y - x * y);
      assert(denom > 0.0);
      return x * y / denom;
    }
    case Structure::kGodel:
      return std::min(x, y);
    case Structure::kLukasiewicz:
      return std::max(0.0, x + y - 1.0);
    case Structure::kNilpotent:
      return x + y > 1.0 ? std::min(x, y) : 0.0;
  }
  return 0.0;
}

Value Lattice::residuum(Value x, Value y) const {
  if (x <= y) return 1.0;
  // Below, x > y, hence x > 0.
  switch (structure) {
    case Structure::kProduct:
      return y / x;
    case Structure::kHamacher: {
      // Largest z with x (tnorm) z <= y; for lambda = 0 this is the
      // textbook xy / (x - y + xy).
      const double lambda = hamacher_lambda;
      const double denom = x - y * (1.0 - lambda) * (1.0 - x);
      assert(denom > 0.0);
      return std::min(1.0, y * (lambda + (1.0 - lambda) * x) / denom);
    }
    case Structure::kGodel:
      return y;
    case Structure::kLukasiewicz:
      return std::min(1.0, 1.0 - x + y);
    case Structure::kNilpotent:
      return std::max(1.0 - x, y);
  }
  return 0.0;
}

Value Lattice::tnorm_eps(Value x, Value y, Value eps) const {
  const Value t = tnorm(x, y);
  return t > eps ? t : eps;
}

Value Lattice::residuum_eps(Value x, Value y, Value eps) const {
  return residuum(std::max(x, eps), std::max(y, eps));
}

Value meet_eps(std::span<const Value> values, Value eps) {
  Value m = 1.0;
  for (Value v : values) m = std::min(m, v);
  return m > eps ? m : eps;
}

Value join_eps(std::span<const Value> values, Value eps) {
  Value m = eps;
  for (Value v : values) m = std::max(m, v);
  return m;
}

}  // namespace fuzzred
