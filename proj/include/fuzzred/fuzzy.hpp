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

#ifndef FUZZRED_FUZZY_HPP_
#define FUZZRED_FUZZY_HPP_

#include <cstddef>
#include <vector>

#include "fuzzred/lattice.hpp"

namespace fuzzred {

// A fuzzy subset of a finite state set {0, ..., n-1}.
using FuzzyVec = std::vector<Value>;

// A fuzzy relation on a finite state set: dense square row-major matrix.
class FuzzyMat {
 public:
  FuzzyMat() = default;
  explicit FuzzyMat(std::size_t n, Value fill = 0.0)
      : n_(n), a_(n * n, fill) {}

  static FuzzyMat identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Value& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  Value operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  FuzzyMat transpose() const;
  bool reflexive() const;  // all diagonal entries exactly 1

  friend bool operator==(const FuzzyMat&, const FuzzyMat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Value> a_;
};

// sup-tnorm compositions, eps-approximated. eps = 0 recovers the exact
// composition operator (the empty join is then 0 and the t-norm is unclamped).
Value compose_eps_vv(const FuzzyVec& f, const FuzzyVec& g, Value eps,
                     const Lattice& lat);
FuzzyVec compose_eps_vm(const FuzzyVec& f, const FuzzyMat& r, Value eps,
                        const Lattice& lat);
FuzzyVec compose_eps_mv(const FuzzyMat& r, const FuzzyVec& f, Value eps,
                        const Lattice& lat);
FuzzyMat compose_eps_mm(const FuzzyMat& r, const FuzzyMat& s, Value eps,
                        const Lattice& lat);

// Exact composition shorthands.
inline Value compose_vv(const FuzzyVec& f, const FuzzyVec& g,
                        const Lattice& lat) {
  return compose_eps_vv(f, g, 0.0, lat);
}
inline FuzzyVec compose_vm(const FuzzyVec& f, const FuzzyMat& r,
                           const Lattice& lat) {
  return compose_eps_vm(f, r, 0.0, lat);
}
inline FuzzyVec compose_mv(const FuzzyMat& r, const FuzzyVec& f,
                           const Lattice& lat) {
  return compose_eps_mv(r, f, 0.0, lat);
}
inline FuzzyMat compose_mm(const FuzzyMat& r, const FuzzyMat& s,
                           const Lattice& lat) {
  return compose_eps_mm(r, s, 0.0, lat);
}

// Residuals of one fuzzy set by another:
//   right_residual_eps(f, g)(a, b) = residuum_eps(g(b), f(a))   (f /eps g)
//   left_residual_eps(f, g)(a, b)  = residuum_eps(f(a), g(b))   (f \eps g)
FuzzyMat right_residual_eps(const FuzzyVec& f, const FuzzyVec& g, Value eps,
                            const Lattice& lat);
FuzzyMat left_residual_eps(const FuzzyVec& f, const FuzzyVec& g, Value eps,
                           const Lattice& lat);

FuzzyVec truncate_vec(const FuzzyVec& f, Value eps);
FuzzyMat truncate_mat(const FuzzyMat& r, Value eps);

bool leq_eps_vec(const FuzzyVec& f, const FuzzyVec& g, Value eps);
bool eq_eps_vec(const FuzzyVec& f, const FuzzyVec& g, Value eps);
bool leq_eps_mat(const FuzzyMat& r, const FuzzyMat& s, Value eps);
bool eq_eps_mat(const FuzzyMat& r, const FuzzyMat& s, Value eps);

// A fuzzy eps-pre-order: reflexive, eps-transitive, fixed under
// eps-truncation.
bool is_eps_fpo(const FuzzyMat& z, Value eps, const Lattice& lat);

FuzzyVec afterset(const FuzzyMat& z, std::size_t q);  // row q
FuzzyVec foreset(const FuzzyMat& z, std::size_t q);   // column q

}  // namespace fuzzred

#endif  // FUZZRED_FUZZY_HPP_
