// Copyright 2026 The eqlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQLEARN_EIGENSOLVER_HPP
#define EQLEARN_EIGENSOLVER_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eqlearn/errors.hpp"
#include "eqlearn/operators.hpp"

namespace eqlearn {

struct LanczosOptions {
  double tol = 1e-10;
  int max_iter = 400;
  std::uint64_t seed = 0;
  double degeneracy_threshold = 1e-8;
};

struct GroundStateSolution {
  double energy = 0.0;
  StateVector state;
  double gap_estimate = 0.0;
  bool converged = false;
  bool degenerate = false;  // gap_estimate below the degeneracy threshold
  double residual = 0.0;
  int iterations = 0;
};

namespace detail {

inline StateVector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(dist(rng), dist(rng));
  v.normalize();
  return v;
}

// Classical Gram-Schmidt, applied twice.
inline void orthogonalize(StateVector& w, const std::vector<StateVector>& basis,
                          const StateVector* extra) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& v : basis) w -= v.dot(w) * v;
    if (extra != nullptr) w -= extra->dot(w) * *extra;
  }
}

struct LanczosResult {
  double value = 0.0;
  StateVector vector;
  double residual = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Lowest eigenpair of H restricted to the orthogonal complement of `deflate`
// (or of the full space when deflate is null), by Lanczos with full
// reorthogonalization.
inline LanczosResult lanczos_lowest(const SparseOperator& H, const LanczosOptions& opts,
                                    std::mt19937_64& rng, const StateVector* deflate) {
  const Eigen::Index dim = H.dim;
  const int subspace_dim = static_cast<int>(std::min<Eigen::Index>(dim, opts.max_iter));
  std::vector<StateVector> basis;
  basis.reserve(static_cast<std::size_t>(subspace_dim));
  std::vector<double> diag, subdiag;

  StateVector v = random_state(dim, rng);
  if (deflate != nullptr) {
    orthogonalize(v, basis, deflate);
    v.normalize();
  }
  basis.push_back(v);

  Eigen::VectorXd ritz_vec;
  double theta = 0.0;
  bool estimate_ok = false;

  for (int j = 0; j < subspace_dim; ++j) {
    StateVector w = H.apply(basis.back());
    const double alpha = basis.back().dot(w).real();
    diag.push_back(alpha);
    orthogonalize(w, basis, deflate);
    double beta = w.norm();

    // Ritz pair of the tridiagonal projection and its residual estimate
    // |beta * (last component of the Ritz vector)|.
    Eigen::Map<const Eigen::VectorXd> d(diag.data(), static_cast<Eigen::Index>(diag.size()));
    Eigen::VectorXd sd(static_cast<Eigen::Index>(subdiag.size()));
    for (std::size_t i = 0; i < subdiag.size(); ++i) sd[static_cast<Eigen::Index>(i)] = subdiag[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, sd);
    theta = es.eigenvalues()[0];
    ritz_vec = es.eigenvectors().col(0);
    estimate_ok = true;
    const double residual_estimate = beta * std::abs(ritz_vec[ritz_vec.size() - 1]);
    if (residual_estimate <= opts.tol * std::max(1.0, std::abs(theta))) break;

    if (static_cast<int>(basis.size()) == subspace_dim) break;
    if (beta <= 1e-13 * std::max(1.0, std::abs(alpha))) {
      // Invariant subspace: continue from a fresh direction if any remains.
      w = random_state(dim, rng);
      orthogonalize(w, basis, deflate);
      const double norm = w.norm();
      if (norm < 1e-8) break;
      w /= norm;
      beta = 0.0;
      subdiag.push_back(beta);
      basis.push_back(w);
    } else {
      subdiag.push_back(beta);
      basis.push_back(w / beta);
    }
  }

  LanczosResult out;
  out.iterations = static_cast<int>(diag.size());
  if (!estimate_ok) return out;
  out.value = theta;
  out.vector = StateVector::Zero(dim);
  for (Eigen::Index i = 0; i < ritz_vec.size(); ++i) {
    out.vector += ritz_vec[i] * basis[static_cast<std::size_t>(i)];
  }
  out.vector.normalize();
  out.residual = (H.apply(out.vector) - out.value * out.vector).norm();
  out.converged = out.residual <= opts.tol * std::max(1.0, std::abs(out.value)) * 10.0;
  return out;
}

}  // namespace detail

/// Lowest eigenpair of a Hermitian operator. Throws ConvergenceError (with
/// the best residual reached) when max_iter is exhausted. The gap estimate
/// comes from a deflated second pass, so exact ground-state degeneracies are
/// detected and flagged rather than silently averaged over.
inline GroundStateSolution ground_state(const SparseOperator& H, const LanczosOptions& opts = {}) {
  if (!H.hermitian) throw std::invalid_argument("ground_state: operator must be Hermitian");
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);

  detail::LanczosResult lowest = detail::lanczos_lowest(H, opts, rng, nullptr);
  if (!lowest.converged) {
    throw ConvergenceError("ground_state: Lanczos did not converge within max_iter; residual = " +
                               std::to_string(lowest.residual),
                           lowest.residual);
  }

  GroundStateSolution sol;
  sol.energy = lowest.value;
  sol.state = lowest.vector;
  sol.residual = lowest.residual;
  sol.converged = true;
  sol.iterations = lowest.iterations;

  if (H.dim < 2) {
    sol.gap_estimate = 0.0;
    sol.degenerate = true;
    return sol;
  }

  LanczosOptions gap_opts = opts;
  gap_opts.tol = std::max(opts.tol, 1e-11);
  detail::LanczosResult second = detail::lanczos_lowest(H, gap_opts, rng, &sol.state);
  sol.gap_estimate = std::max(0.0, second.value - sol.energy);
  sol.degenerate = sol.gap_estimate < opts.degeneracy_threshold;
  return sol;
}

}  // namespace eqlearn

#endif  // EQLEARN_EIGENSOLVER_HPP
