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

#ifndef EQLEARN_OPERATORS_HPP
#define EQLEARN_OPERATORS_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <random>
#include <vector>

#include "eqlearn/errors.hpp"
#include "eqlearn/pauli.hpp"

namespace eqlearn {

using StateVector = Eigen::VectorXcd;

constexpr int kDefaultQubitCap = 14;

/// A 2^n x 2^n operator in compressed-row form.
struct SparseOperator {
  int n = 0;
  Eigen::Index dim = 0;
  Eigen::SparseMatrix<Complex, Eigen::RowMajor> mat;
  bool hermitian = false;

  StateVector apply(const StateVector& v) const {
    if (v.size() != dim) throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
    return mat * v;
  }

  /// Spot-check Hermiticity on randomly sampled stored entries.
  bool check_hermitian(int samples = 256, std::uint64_t seed = 0) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Eigen::Index> pick(0, dim - 1);
    for (int s = 0; s < samples; ++s) {
      Eigen::Index r = pick(rng);
      for (Eigen::SparseMatrix<Complex, Eigen::RowMajor>::InnerIterator it(mat, r); it; ++it) {
        if (std::abs(mat.coeff(it.col(), r) - std::conj(it.value())) > 1e-12) return false;
      }
    }
    return true;
  }
};

/// Assemble H(x) = sum_I h_I(x_I) as a sparse matrix. Diagonal content (Z/I
/// strings) is folded into a single diagonal pass.
inline SparseOperator build_hamiltonian(const ModelSpec& spec, const std::vector<double>& x,
                                        int qubit_cap = kDefaultQubitCap) {
  if (spec.n > qubit_cap) {
    throw ResourceLimitError("build_hamiltonian: n = " + std::to_string(spec.n) +
                             " exceeds the qubit cap " + std::to_string(qubit_cap));
  }
  if (x.size() != spec.slots.size()) {
    throw std::invalid_argument("build_hamiltonian: parameter vector does not match the layout");
  }
  SparseOperator op;
  op.n = spec.n;
  op.dim = Eigen::Index{1} << spec.n;
  op.hermitian = true;

  std::vector<double> diagonal(static_cast<std::size_t>(op.dim), 0.0);
  std::vector<Eigen::Triplet<Complex>> triplets;

  for (const auto& term : spec.terms) {
    const double coeff = spec.coefficient(term, x);
    for (const auto& [pauli, weight] : embed_components(spec.term_operator(term), spec.n)) {
      const double w = coeff * weight;
      if (pauli.is_diagonal()) {
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(op.dim); ++b) {
          std::uint64_t out;
          Complex phase;
          pauli.apply_to_basis(b, out, phase);
          diagonal[b] += w * phase.real();
        }
      } else {
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(op.dim); ++b) {
          std::uint64_t out;
          Complex phase;
          pauli.apply_to_basis(b, out, phase);
          triplets.emplace_back(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(b),
                                w * phase);
        }
      }
    }
  }
  for (Eigen::Index b = 0; b < op.dim; ++b) {
    if (diagonal[static_cast<std::size_t>(b)] != 0.0) {
      triplets.emplace_back(b, b, Complex(diagonal[static_cast<std::size_t>(b)], 0.0));
    }
  }
  op.mat.resize(op.dim, op.dim);
  op.mat.setFromTriplets(triplets.begin(), triplets.end());
  op.mat.makeCompressed();
  return op;
}

/// Operator built directly from one local observable (used in tests and for
/// operator norms of small patterns).
inline SparseOperator build_local_operator(const LocalObservable& obs, int n,
                                           int qubit_cap = kDefaultQubitCap) {
  if (n > qubit_cap) throw ResourceLimitError("build_local_operator: n exceeds the qubit cap");
  SparseOperator op;
  op.n = n;
  op.dim = Eigen::Index{1} << n;
  op.hermitian = true;
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (const auto& [pauli, weight] : embed_components(obs, n)) {
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(op.dim); ++b) {
      std::uint64_t out;
      Complex phase;
      pauli.apply_to_basis(b, out, phase);
      triplets.emplace_back(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(b),
                            weight * phase);
    }
  }
  op.mat.resize(op.dim, op.dim);
  op.mat.setFromTriplets(triplets.begin(), triplets.end());
  op.mat.makeCompressed();
  return op;
}

/// Spectral norm of a local observable, from the dense matrix on its own
/// sites. Used as the clipping bound for learned predictions.
inline double operator_norm(const LocalObservable& obs) {
  const int k = static_cast<int>(obs.sites.size());
  std::vector<int> local_sites(obs.sites.size());
  for (std::size_t i = 0; i < obs.sites.size(); ++i) local_sites[i] = static_cast<int>(i);
  LocalObservable local{local_sites, obs.components};
  const Eigen::Index dim = Eigen::Index{1} << k;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [pauli, weight] : embed_components(local, k)) {
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      std::uint64_t out;
      Complex phase;
      pauli.apply_to_basis(b, out, phase);
      m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(b)) += weight * phase;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace eqlearn

#endif  // EQLEARN_OPERATORS_HPP
