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

#ifndef EQLEARN_STATES_HPP
#define EQLEARN_STATES_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "eqlearn/errors.hpp"
#include "eqlearn/operators.hpp"

namespace eqlearn {

namespace detail {

inline int qubit_count_of(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw std::invalid_argument("state dimension is not a power of two");
  }
  return n;
}

}  // namespace detail

/// <psi| P |psi> for a single Pauli string; real for any Hermitian string.
inline double expectation(const StateVector& state, const PauliString& pauli) {
  if (state.size() != (Eigen::Index{1} << pauli.n)) {
    throw std::invalid_argument("expectation: state dimension does not match the operator");
  }
  Complex acc(0.0, 0.0);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    std::uint64_t out;
    Complex phase;
    pauli.apply_to_basis(b, out, phase);
    acc += std::conj(state[static_cast<Eigen::Index>(out)]) * phase *
           state[static_cast<Eigen::Index>(b)];
  }
  return acc.real();
}

inline double expectation(const StateVector& state, const LocalObservable& obs) {
  const int n = detail::qubit_count_of(state.size());
  double value = 0.0;
  for (const auto& [pauli, weight] : embed_components(obs, n)) {
    value += weight * expectation(state, pauli);
  }
  return value;
}

/// Expectation of a full observable at parameter point x (coefficients and
/// normalization applied).
inline double expectation(const StateVector& state, const ObservableSpec& obs,
                          const ModelSpec& spec, const std::vector<double>& x) {
  double value = 0.0;
  for (const auto& [op, coeff] : instantiate(obs, spec, x)) {
    value += coeff * expectation(state, op);
  }
  return value;
}

/// Partial trace of |psi><psi| down to the given sites (at most 3). The row
/// index orders bits by the site tuple, first site most significant.
inline Eigen::MatrixXcd reduced_density_matrix(const StateVector& state,
                                               const std::vector<int>& sites) {
  if (sites.size() > 3) {
    throw ResourceLimitError("reduced_density_matrix: at most 3 sites supported");
  }
  const int n = detail::qubit_count_of(state.size());
  for (int s : sites) {
    if (s < 0 || s >= n) throw std::out_of_range("reduced_density_matrix: site outside [0, n)");
  }
  const int k = static_cast<int>(sites.size());
  const Eigen::Index dim = Eigen::Index{1} << k;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(state.size()); ++z) {
    int row = 0;
    for (int q = 0; q < k; ++q) row = (row << 1) | site_bit(z, sites[static_cast<std::size_t>(q)], n);
    for (Eigen::Index col = 0; col < dim; ++col) {
      std::uint64_t z2 = z;
      for (int q = 0; q < k; ++q) {
        int bit = static_cast<int>((static_cast<std::uint64_t>(col) >> (k - 1 - q)) & 1u);
        if (bit != site_bit(z2, sites[static_cast<std::size_t>(q)], n)) {
          z2 = flip_site(z2, sites[static_cast<std::size_t>(q)], n);
        }
      }
      rho(row, col) += state[static_cast<Eigen::Index>(z)] *
                       std::conj(state[static_cast<Eigen::Index>(z2)]);
    }
  }
  return rho;
}

/// U_g |psi>: the amplitude of bit-string b moves to the g-permuted string
/// (bit at site i goes to site g(i)).
inline StateVector apply_permutation(const GroupElement& g, const StateVector& state, int n) {
  if (state.size() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("apply_permutation: state dimension does not match n");
  }
  StateVector out(state.size());
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    std::uint64_t moved = 0;
    for (int i = 0; i < n; ++i) {
      if (site_bit(b, i, n)) moved |= std::uint64_t{1} << (n - 1 - g.apply(i, n));
    }
    out[static_cast<Eigen::Index>(moved)] = state[static_cast<Eigen::Index>(b)];
  }
  return out;
}

}  // namespace eqlearn

#endif  // EQLEARN_STATES_HPP
