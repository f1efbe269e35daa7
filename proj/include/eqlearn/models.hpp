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

#ifndef EQLEARN_MODELS_HPP
#define EQLEARN_MODELS_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eqlearn/lattice.hpp"

namespace eqlearn {

enum class ModelFamily { heisenberg, long_range_ising };

inline std::string family_name(ModelFamily f) {
  return f == ModelFamily::heisenberg ? "heisenberg" : "long_range_ising";
}

/// Kinds of tunable parameters. Bond couplings live on edges, the Ising
/// couplings J_i and fields h_i live on single sites.
enum class SlotKind : int { bond_coupling = 0, site_coupling = 1, site_field = 2 };

struct ParamSlot {
  SiteSet sites;
  SlotKind kind;
  double lo = 0.0;
  double hi = 1.0;
  std::string name;
};

/// Shape of one Hamiltonian term. The coefficient is a function of the
/// parameters attached to the term's sites:
///   heisenberg_bond: J_{ij} * (XX + YY + ZZ)
///   ising_pair:      (1 + J_i J_j) / d(i,j)^alpha * ZZ
///   ising_field:     h_i * X
enum class TermKind { heisenberg_bond, ising_pair, ising_field };

struct HamiltonianTerm {
  SiteSet sites;
  TermKind kind;
  double fixed_factor = 1.0;  // 1/d^alpha for ising_pair, 1 otherwise
};

/// A p-body observable on a fixed site tuple, as a weighted sum of Pauli
/// patterns ("XX", "ZZ", ...). Pattern letters follow the site tuple order.
struct LocalObservable {
  std::vector<int> sites;
  struct Component {
    std::string letters;
    double weight;
  };
  std::vector<Component> components;
};

inline LocalObservable bond_exchange(int i, int j) {
  return {{i, j}, {{"XX", 1.0}, {"YY", 1.0}, {"ZZ", 1.0}}};
}

inline LocalObservable pauli_zz(int i, int j) { return {{i, j}, {{"ZZ", 1.0}}}; }

inline LocalObservable pauli_x(int i) { return {{i}, {{"X", 1.0}}}; }

/// The interaction hypergraph (V, E, h): sites, interaction index sets, term
/// constructors, and the layout of tunable parameters.
struct ModelSpec {
  ModelFamily family = ModelFamily::heisenberg;
  int n = 0;
  double alpha = 0.0;  // power-law exponent, Ising only
  std::vector<ParamSlot> slots;
  std::vector<HamiltonianTerm> terms;

  std::map<std::pair<int, SiteSet>, int> slot_lookup;

  int num_params() const { return static_cast<int>(slots.size()); }

  void index_slots() {
    slot_lookup.clear();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      slot_lookup.emplace(std::make_pair(static_cast<int>(slots[i].kind), slots[i].sites),
                          static_cast<int>(i));
    }
  }

  int slot_index(SlotKind kind, const SiteSet& sites) const {
    auto it = slot_lookup.find({static_cast<int>(kind), sites});
    if (it == slot_lookup.end()) {
      throw std::invalid_argument("ModelSpec: no parameter slot on the requested sites");
    }
    return it->second;
  }

  /// Coefficient of a term, evaluated from the parameters local to its sites.
  double coefficient(const HamiltonianTerm& term, const std::vector<double>& x) const {
    switch (term.kind) {
      case TermKind::heisenberg_bond:
        return x[static_cast<std::size_t>(slot_index(SlotKind::bond_coupling, term.sites))];
      case TermKind::ising_pair: {
        double ji = x[static_cast<std::size_t>(slot_index(SlotKind::site_coupling, {term.sites[0]}))];
        double jj = x[static_cast<std::size_t>(slot_index(SlotKind::site_coupling, {term.sites[1]}))];
        return (1.0 + ji * jj) * term.fixed_factor;
      }
      case TermKind::ising_field:
        return x[static_cast<std::size_t>(slot_index(SlotKind::site_field, term.sites))];
    }
    throw std::logic_error("ModelSpec::coefficient: unknown term kind");
  }

  /// Fixed Pauli content of a term (the learned target O_I).
  LocalObservable term_operator(const HamiltonianTerm& term) const {
    switch (term.kind) {
      case TermKind::heisenberg_bond:
        return bond_exchange(term.sites[0], term.sites[1]);
      case TermKind::ising_pair:
        return pauli_zz(term.sites[0], term.sites[1]);
      case TermKind::ising_field:
        return pauli_x(term.sites[0]);
    }
    throw std::logic_error("ModelSpec::term_operator: unknown term kind");
  }
};

inline SiteSet ring_bond(int i, int n) {
  SiteSet b{mod_n(i, n), mod_n(i + 1, n)};
  std::sort(b.begin(), b.end());
  return b;
}

/// Disordered Heisenberg ring: sum_i J_{i,i+1} (XX + YY + ZZ), J in [0, 2].
inline ModelSpec heisenberg_ring(int n) {
  if (n < 3) throw std::invalid_argument("heisenberg_ring: lattice needs n >= 3 sites");
  ModelSpec spec;
  spec.family = ModelFamily::heisenberg;
  spec.n = n;
  for (int i = 0; i < n; ++i) {
    SiteSet bond = ring_bond(i, n);
    spec.slots.push_back({bond, SlotKind::bond_coupling, 0.0, 2.0,
                          "J_" + std::to_string(i) + "_" + std::to_string(mod_n(i + 1, n))});
    spec.terms.push_back({bond, TermKind::heisenberg_bond, 1.0});
  }
  spec.index_slots();
  return spec;
}

/// Long-range Ising ring: sum_{i<j} (1 + J_i J_j)/d(i,j)^alpha ZZ + sum_i h_i X,
/// with J in [0, 2] and h in [0, e].
inline ModelSpec long_range_ising_ring(int n, double alpha) {
  if (n < 3) throw std::invalid_argument("long_range_ising_ring: lattice needs n >= 3 sites");
  if (alpha <= 0.0) throw std::invalid_argument("long_range_ising_ring: decay exponent must be positive");
  ModelSpec spec;
  spec.family = ModelFamily::long_range_ising;
  spec.n = n;
  spec.alpha = alpha;
  for (int i = 0; i < n; ++i) {
    spec.slots.push_back({{i}, SlotKind::site_coupling, 0.0, 2.0, "J_" + std::to_string(i)});
  }
  const double e = std::exp(1.0);
  for (int i = 0; i < n; ++i) {
    spec.slots.push_back({{i}, SlotKind::site_field, 0.0, e, "h_" + std::to_string(i)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = ring_distance(i, j, n);
      spec.terms.push_back({{i, j}, TermKind::ising_pair, 1.0 / std::pow(d, alpha)});
    }
  }
  for (int i = 0; i < n; ++i) {
    spec.terms.push_back({{i}, TermKind::ising_field, 1.0});
  }
  spec.index_slots();
  return spec;
}

/// Independent uniform draw per slot; the product distribution is invariant
/// under every hypergraph automorphism because ranges only depend on slot kind.
inline std::vector<double> sample_params(const ModelSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(spec.slots.size());
  for (std::size_t i = 0; i < spec.slots.size(); ++i) {
    std::uniform_real_distribution<double> dist(spec.slots[i].lo, spec.slots[i].hi);
    x[i] = dist(rng);
  }
  return x;
}

/// The action (g . x)_I = x_{gI}: entry at slot I of the result is read from
/// slot gI of the input. Composes as act(g, act(h, x)) == act(h * g, x) under
/// the (g * h)(i) = g(h(i)) composition convention.
inline std::vector<double> act_on_params(const GroupElement& g, const std::vector<double>& x,
                                         const ModelSpec& spec) {
  if (x.size() != spec.slots.size()) {
    throw std::invalid_argument("act_on_params: parameter vector does not match the layout");
  }
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < spec.slots.size(); ++i) {
    SiteSet moved = act_on_sites(g, spec.slots[i].sites, spec.n);
    out[i] = x[static_cast<std::size_t>(spec.slot_index(spec.slots[i].kind, moved))];
  }
  return out;
}

/// One term of a target observable. `alpha` is a constant coefficient; when
/// `coeff_term >= 0` the x-dependent Hamiltonian coefficient of that term is
/// multiplied in at evaluation time (used by the energy observable).
struct ObservableTerm {
  LocalObservable op;
  double alpha = 1.0;
  int coeff_term = -1;
};

struct ObservableSpec {
  std::vector<ObservableTerm> terms;
  double normalization = 1.0;
};

/// Super-normalized energy observable O = H / sqrt(n). Term coefficients are
/// the Hamiltonian's own coefficient functions, evaluated per parameter point.
inline ObservableSpec energy_observable(const ModelSpec& spec) {
  ObservableSpec obs;
  obs.normalization = 1.0 / std::sqrt(static_cast<double>(spec.n));
  obs.terms.reserve(spec.terms.size());
  for (std::size_t t = 0; t < spec.terms.size(); ++t) {
    obs.terms.push_back({spec.term_operator(spec.terms[t]), 1.0, static_cast<int>(t)});
  }
  return obs;
}

/// Two-point correlation C_ij = (X_i X_j + Y_i Y_j + Z_i Z_j) / 3.
inline ObservableSpec correlation_observable(int i, int j) {
  if (i == j) throw std::invalid_argument("correlation_observable: sites must differ");
  ObservableSpec obs;
  obs.terms.push_back({{{i, j}, {{"XX", 1.0 / 3.0}, {"YY", 1.0 / 3.0}, {"ZZ", 1.0 / 3.0}}}, 1.0, -1});
  return obs;
}

/// Observable terms with all coefficients evaluated at x (including the
/// normalization), ready for expectation values or ML aggregation.
inline std::vector<std::pair<LocalObservable, double>> instantiate(
    const ObservableSpec& obs, const ModelSpec& spec, const std::vector<double>& x) {
  std::vector<std::pair<LocalObservable, double>> out;
  out.reserve(obs.terms.size());
  for (const auto& term : obs.terms) {
    double c = term.alpha;
    if (term.coeff_term >= 0) {
      c *= spec.coefficient(spec.terms[static_cast<std::size_t>(term.coeff_term)], x);
    }
    out.emplace_back(term.op, c * obs.normalization);
  }
  return out;
}

/// l1 norm of the instantiated coefficient vector, weighting each term by the
/// l1 norm of its Pauli components. Recorded for diagnostics.
inline double coefficient_l1(const ObservableSpec& obs, const ModelSpec& spec,
                             const std::vector<double>& x) {
  double total = 0.0;
  for (const auto& [op, c] : instantiate(obs, spec, x)) {
    double op_l1 = 0.0;
    for (const auto& comp : op.components) op_l1 += std::abs(comp.weight);
    total += std::abs(c) * op_l1;
  }
  return total;
}

}  // namespace eqlearn

#endif  // EQLEARN_MODELS_HPP
