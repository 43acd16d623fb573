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

#include "fuzzred/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzred {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

FuzzyMat FuzzyMat::identity(std::size_t n) {
  FuzzyMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

FuzzyMat FuzzyMat::transpose() const {
  FuzzyMat t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool FuzzyMat::reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if ((*this)(i, i) != 1.0) return false;
  return true;
}

Value compose_eps_vv(const FuzzyVec& f, const FuzzyVec& g, Value eps,
                     const Lattice& lat) {
  require_same_dim(f.size(), g.size(), "compose_eps_vv");
  Value out = eps;
  for (std::size_t i = 0; i < f.size(); ++i)
    out = std::max(out, lat.tnorm_eps(f[i], g[i], eps));
  return out;
}

FuzzyVec compose_eps_vm(const FuzzyVec& f, const FuzzyMat& r, Value eps,
                        const Lattice& lat) {
  require_same_dim(f.size(), r.dim(), "compose_eps_vm");
  const std::size_t n = r.dim();
  FuzzyVec out(n, eps);
  for (std::size_t j = 0; j < n; ++j) {
    Value m = eps;
    for (std::size_t i = 0; i < n; ++i)
      m = std::max(m, lat.tnorm_eps(f[i], r(i, j), eps));
    out[j] = m;
  }
  return out;
}

FuzzyVec compose_eps_mv(const FuzzyMat& r, const FuzzyVec& f, Value eps,
                        const Lattice& lat) {
  require_same_dim(r.dim(), f.size(), "compose_eps_mv");
  const std::size_t n = r.dim();
  FuzzyVec out(n, eps);
  for (std::size_t i = 0; i < n; ++i) {
    Value m = eps;
    for (std::size_t j = 0; j < n; ++j)
      m = std::max(m, lat.tnorm_eps(r(i, j), f[j], eps));
    out[i] = m;
  }
  return out;
}

FuzzyMat compose_eps_mm(const FuzzyMat& r, const FuzzyMat& s, Value eps,
                        const Lattice& lat) {
  require_same_dim(r.dim(), s.dim(), "compose_eps_mm");
  const std::size_t n = r.dim();
  FuzzyMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Value m = eps;
      for (std::size_t c = 0; c < n; ++c)
        m = std::max(m, lat.tnorm_eps(r(i, c), s(c, j), eps));
      out(i, j) = m;
    }
  return out;
}

FuzzyMat right_residual_eps(const FuzzyVec& f, const FuzzyVec& g, Value eps,
                            const Lattice& lat) {
  require_same_dim(f.size(), g.size(), "right_residual_eps");
  const std::size_t n = f.size();
  FuzzyMat out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out(a, b) = lat.residuum_eps(g[b], f[a], eps);
  return out;
}

FuzzyMat left_residual_eps(const FuzzyVec& f, const FuzzyVec& g, Value eps,
                           const Lattice& lat) {
  require_same_dim(f.size(), g.size(), "left_residual_eps");
  const std::size_t n = f.size();
  FuzzyMat out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out(a, b) = lat.residuum_eps(f[a], g[b], eps);
  return out;
}

FuzzyVec truncate_vec(const FuzzyVec& f, Value eps) {
  FuzzyVec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = truncate(f[i], eps);
  return out;
}

FuzzyMat truncate_mat(const FuzzyMat& r, Value eps) {
  const std::size_t n = r.dim();
  FuzzyMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = truncate(r(i, j), eps);
  return out;
}

bool leq_eps_vec(const FuzzyVec& f, const FuzzyVec& g, Value eps) {
  require_same_dim(f.size(), g.size(), "leq_eps_vec");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!leq_eps(f[i], g[i], eps)) return false;
  return true;
}

bool eq_eps_vec(const FuzzyVec& f, const FuzzyVec& g, Value eps) {
  require_same_dim(f.size(), g.size(), "eq_eps_vec");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!eq_eps(f[i], g[i], eps)) return false;
  return true;
}

bool leq_eps_mat(const FuzzyMat& r, const FuzzyMat& s, Value eps) {
  require_same_dim(r.dim(), s.dim(), "leq_eps_mat");
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (!leq_eps(r(i, j), s(i, j), eps)) return false;
  return true;
}

bool eq_eps_mat(const FuzzyMat& r, const FuzzyMat& s, Value eps) {
  require_same_dim(r.dim(), s.dim(), "eq_eps_mat");
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (!eq_eps(r(i, j), s(i, j), eps)) return false;
  return true;
}

bool is_eps_fpo(const FuzzyMat& z, Value eps, const Lattice& lat) {
  if (!z.reflexive()) return false;
  if (truncate_mat(z, eps) != z) return false;
  return leq_eps_mat(compose_eps_mm(z, z, eps, lat), z, eps);
}

FuzzyVec afterset(const FuzzyMat& z, std::size_t q) {
  FuzzyVec out(z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) out[j] = z(q, j);
  return out;
}

FuzzyVec foreset(const FuzzyMat& z, std::size_t q) {
  FuzzyVec out(z.dim());
  for (std::size_t i = 0; i < z.dim(); ++i) out[i] = z(i, q);
  return out;
}

}  // namespace fuzzred
