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

#ifndef EQLEARN_SHADOWS_HPP
#define EQLEARN_SHADOWS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "eqlearn/rng.hpp"
#include "eqlearn/states.hpp"

namespace eqlearn {

/// Outcomes of T randomized single-qubit Pauli measurements: per snapshot one
/// basis letter (0=X 1=Y 2=Z) and one outcome sign per qubit.
struct ShadowRecord {
  int n = 0;
  int T = 0;
  std::vector<std::uint8_t> bases;     // T * n, row-major by snapshot
  std::vector<std::int8_t> outcomes;   // T * n, entries +1 / -1

  std::uint8_t basis(int t, int q) const { return bases[static_cast<std::size_t>(t) * n + q]; }
  int outcome(int t, int q) const { return outcomes[static_cast<std::size_t>(t) * n + q]; }
};

/// Linear-inversion estimate of a reduced density matrix. Hermitian with unit
/// trace by construction, but not necessarily positive semidefinite.
struct ShadowEstimate {
  std::vector<int> sites;
  Eigen::MatrixXcd rho;
  int snapshots = 0;
};

namespace detail {

// +1 eigenvector of X, Y, Z respectively; the -1 eigenvector is obtained by
// flipping the sign of the second amplitude pattern.
inline Eigen::Vector2cd basis_eigvec(std::uint8_t basis, int outcome) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (basis) {
    case 0: return Eigen::Vector2cd(Complex(s, 0), Complex(outcome * s, 0));
    case 1: return Eigen::Vector2cd(Complex(s, 0), Complex(0, outcome * s));
    default: return outcome > 0 ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
  }
}

// Single-qubit inverse channel applied to one measured snapshot:
// M = 3 |v><v| - I.
inline Eigen::Matrix2cd inverse_channel(std::uint8_t basis, int outcome) {
  Eigen::Vector2cd v = basis_eigvec(basis, outcome);
  return 3.0 * v * v.adjoint() - Eigen::Matrix2cd::Identity();
}

}  // namespace detail

/// Measure every qubit of `state` in a uniformly random Pauli basis, T times,
/// by sequential Born-rule collapse. Each snapshot draws its own RNG stream
/// from the master seed, so the record is independent of evaluation order.
inline ShadowRecord measure_shadow(const StateVector& state, int T, std::uint64_t seed) {
  if (T < 1) throw std::invalid_argument("measure_shadow: need at least one snapshot");
  const int n = detail::qubit_count_of(state.size());
  ShadowRecord record;
  record.n = n;
  record.T = T;
  record.bases.resize(static_cast<std::size_t>(T) * n);
  record.outcomes.resize(static_cast<std::size_t>(T) * n);

  for (int t = 0; t < T; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::uniform_int_distribution<int> basis_dist(0, 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    StateVector psi = state;
    for (int q = 0; q < n; ++q) {
      const std::uint8_t basis = static_cast<std::uint8_t>(basis_dist(rng));
      const Eigen::Vector2cd vp = detail::basis_eigvec(basis, +1);
      const Eigen::Vector2cd vm = detail::basis_eigvec(basis, -1);
      const std::uint64_t mask = std::uint64_t{1} << (n - 1 - q);

      double p_plus = 0.0;
      for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(psi.size()); ++z) {
        if (z & mask) continue;
        const Complex a0 = psi[static_cast<Eigen::Index>(z)];
        const Complex a1 = psi[static_cast<Eigen::Index>(z | mask)];
        const Complex c = std::conj(vp[0]) * a0 + std::conj(vp[1]) * a1;
        p_plus += std::norm(c);
      }
      p_plus = std::clamp(p_plus, 0.0, 1.0);
      const int outcome = unit(rng) < p_plus ? +1 : -1;
      const Eigen::Vector2cd& v = outcome > 0 ? vp : vm;
      const double p = outcome > 0 ? p_plus : 1.0 - p_plus;

      for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(psi.size()); ++z) {
        if (z & mask) continue;
        const Complex a0 = psi[static_cast<Eigen::Index>(z)];
        const Complex a1 = psi[static_cast<Eigen::Index>(z | mask)];
        const Complex c = std::conj(v[0]) * a0 + std::conj(v[1]) * a1;
        psi[static_cast<Eigen::Index>(z)] = c * v[0];
        psi[static_cast<Eigen::Index>(z | mask)] = c * v[1];
      }
      psi /= std::sqrt(std::max(p, 1e-300));

      record.bases[static_cast<std::size_t>(t) * n + q] = basis;
      record.outcomes[static_cast<std::size_t>(t) * n + q] = static_cast<std::int8_t>(outcome);
    }
  }
  return record;
}

/// Snapshot average of the tensor-product inverse channel over the requested
/// sites: an unbiased estimator of the reduced density matrix.
inline ShadowEstimate estimate_rdm(const ShadowRecord& record, const std::vector<int>& sites) {
  if (record.T < 1) throw std::invalid_argument("estimate_rdm: empty shadow record");
  if (sites.empty() || sites.size() > 2) {
    throw std::invalid_argument("estimate_rdm: supports 1 or 2 sites");
  }
  for (int s : sites) {
    if (s < 0 || s >= record.n) throw std::out_of_range("estimate_rdm: site outside [0, n)");
  }
  const Eigen::Index dim = Eigen::Index{1} << sites.size();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int t = 0; t < record.T; ++t) {
    Eigen::MatrixXcd snap =
        detail::inverse_channel(record.basis(t, sites[0]), record.outcome(t, sites[0]));
    for (std::size_t q = 1; q < sites.size(); ++q) {
      const Eigen::Matrix2cd m =
          detail::inverse_channel(record.basis(t, sites[q]), record.outcome(t, sites[q]));
      Eigen::MatrixXcd bigger(snap.rows() * 2, snap.cols() * 2);
      for (Eigen::Index r = 0; r < snap.rows(); ++r) {
        for (Eigen::Index c = 0; c < snap.cols(); ++c) {
          bigger.block<2, 2>(2 * r, 2 * c) = snap(r, c) * m;
        }
      }
      snap.swap(bigger);
    }
    acc += snap;
  }
  return {sites, acc / static_cast<double>(record.T), record.T};
}

/// Closed-form snapshot average for a weight-<=2 Pauli pattern: the factor at
/// each site is 3 * outcome when the measured basis matches the letter, 0
/// otherwise (1 for identity letters).
inline double estimate_pauli(const ShadowRecord& record, const std::vector<int>& sites,
                             const std::string& letters) {
  if (record.T < 1) throw std::invalid_argument("estimate_pauli: empty shadow record");
  if (sites.size() != letters.size()) {
    throw std::invalid_argument("estimate_pauli: pattern length must match site tuple");
  }
  double acc = 0.0;
  for (int t = 0; t < record.T; ++t) {
    double prod = 1.0;
    for (std::size_t k = 0; k < sites.size() && prod != 0.0; ++k) {
      const char letter = letters[k];
      if (letter == 'I') continue;
      const int want = letter == 'X' ? 0 : letter == 'Y' ? 1 : 2;
      if (record.basis(t, sites[k]) == want) {
        prod *= 3.0 * record.outcome(t, sites[k]);
      } else {
        prod = 0.0;
      }
    }
    acc += prod;
  }
  return acc / static_cast<double>(record.T);
}

inline double estimate_local_observable(const ShadowRecord& record, const LocalObservable& obs) {
  double value = 0.0;
  for (const auto& comp : obs.components) {
    value += comp.weight * estimate_pauli(record, obs.sites, comp.letters);
  }
  return value;
}

/// Tr(rdm_estimate * C_ij) for the correlation C_ij = (XX + YY + ZZ)/3.
inline double estimate_correlation(const ShadowRecord& record, int i, int j) {
  if (i == j) throw std::invalid_argument("estimate_correlation: sites must differ");
  ShadowEstimate est = estimate_rdm(record, {i, j});
  const Eigen::Index dim = 4;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
  LocalObservable corr{{0, 1}, {{"XX", 1.0 / 3.0}, {"YY", 1.0 / 3.0}, {"ZZ", 1.0 / 3.0}}};
  for (const auto& [pauli, weight] : embed_components(corr, 2)) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      std::uint64_t out;
      Complex phase;
      pauli.apply_to_basis(b, out, phase);
      c(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(b)) += weight * phase;
    }
  }
  return (c * est.rho).trace().real();
}

/// T = ceil(C * log2(n)) snapshots.
inline int shadow_count(int n, double C) {
  if (n < 2) throw std::invalid_argument("shadow_count: need n >= 2");
  if (C <= 0.0) throw std::invalid_argument("shadow_count: constant must be positive");
  return static_cast<int>(std::ceil(C * std::log2(static_cast<double>(n))));
}

/// Nearest (Frobenius) trace-one PSD matrix: eigenvalues are projected onto
/// the probability simplex. Optional post-processing; estimators stay raw by
/// default because the learning stage consumes matrix entries linearly.
inline Eigen::MatrixXcd project_to_psd(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho + rho.adjoint()));
  Eigen::VectorXd lam = es.eigenvalues();
  std::vector<double> sorted(lam.data(), lam.data() + lam.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  int support = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (1.0 - cumulative) / static_cast<double>(k + 1);
    if (sorted[k] + candidate > 0.0) {
      support = static_cast<int>(k + 1);
      shift = candidate;
    }
  }
  (void)support;
  Eigen::VectorXd clipped = (lam.array() + shift).cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace eqlearn

#endif  // EQLEARN_SHADOWS_HPP
