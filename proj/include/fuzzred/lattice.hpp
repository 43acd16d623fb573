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

#ifndef FUZZRED_LATTICE_HPP_
#define FUZZRED_LATTICE_HPP_

#include <span>
#include <string>

namespace fuzzred {

// Truth degrees live in the real unit interval [0,1].
using Value = double;

bool is_value(Value x);

// Throws std::invalid_argument when x is outside [0,1] (or NaN).
void require_value(Value x, const char* what);

enum class Structure { kProduct, kHamacher, kGodel, kLukasiewicz, kNilpotent };

Structure structure_from_letter(char letter);  // P/H/G/L/N
char structure_letter(Structure s);
std::string structure_name(Structure s);

// A linear complete residuated lattice on the carrier [0,1]: the t-norm and
// its adjoint residuum, picked by `structure`. The Hamacher family takes a
// parameter lambda >= 0; lambda = 0 is the classical Hamacher structure.
struct Lattice {
  Structure structure = Structure::kProduct;
  double hamacher_lambda = 0.0;

  Value tnorm(Value x, Value y) const;
  Value residuum(Value x, Value y) const;

  // eps-approximations: tnorm clamped up to eps, residuum on (x|eps, y|eps).
  Value tnorm_eps(Value x, Value y, Value eps) const;
  Value residuum_eps(Value x, Value y, Value eps) const;
};

// x <=_eps y: x <= y or x <= eps.
inline bool leq_eps(Value x, Value y, Value eps) { return x <= y || x <= eps; }

// x =_eps y: equal, or both at most eps.
inline bool eq_eps(Value x, Value y, Value eps) {
  return x == y || (x <= eps && y <= eps);
}

// eps-truncation: values at most eps collapse to eps.
inline Value truncate(Value x, Value eps) { return x > eps ? x : eps; }

// Infimum/supremum of a finite multiset, eps-approximated. The empty meet is
// 1 (then clamped), the empty join is eps.
Value meet_eps(std::span<const Value> values, Value eps);
Value join_eps(std::span<const Value> values, Value eps);

}  // namespace fuzzred

#endif  // FUZZRED_LATTICE_HPP_
