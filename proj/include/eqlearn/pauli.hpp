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

#ifndef EQLEARN_PAULI_HPP
#define EQLEARN_PAULI_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlearn/models.hpp"

namespace eqlearn {

using Complex = std::complex<double>;

// Basis convention used throughout: computational basis states are indexed
// big-endian in the site label, i.e. site 0 occupies the most significant bit.
// |100> on three sites is basis index 4.
inline int site_bit(std::uint64_t basis, int site, int n) {
  return static_cast<int>((basis >> (n - 1 - site)) & 1u);
}

inline std::uint64_t flip_site(std::uint64_t basis, int site, int n) {
  return basis ^ (std::uint64_t{1} << (n - 1 - site));
}

/// An n-site Pauli string, one letter in {I, X, Y, Z} per site.
struct PauliString {
  int n = 0;
  std::vector<std::uint8_t> letters;  // 0=I 1=X 2=Y 3=Z

  static PauliString identity(int n) { return {n, std::vector<std::uint8_t>(n, 0)}; }

  /// Embed a local pattern like "XY" on the given site tuple.
  static PauliString embed(int n, const std::vector<int>& sites, const std::string& pattern) {
    if (sites.size() != pattern.size()) {
      throw std::invalid_argument("PauliString::embed: pattern length must match site tuple");
    }
    PauliString p = identity(n);
    for (std::size_t k = 0; k < sites.size(); ++k) {
      int site = sites[k];
      if (site < 0 || site >= n) throw std::out_of_range("PauliString::embed: site outside [0, n)");
      std::uint8_t letter;
      switch (pattern[k]) {
        case 'I': letter = 0; break;
        case 'X': letter = 1; break;
        case 'Y': letter = 2; break;
        case 'Z': letter = 3; break;
        default: throw std::invalid_argument("PauliString::embed: letters must be I, X, Y or Z");
      }
      if (letter != 0 && p.letters[static_cast<std::size_t>(site)] != 0) {
        throw std::invalid_argument("PauliString::embed: repeated site in tuple");
      }
      p.letters[static_cast<std::size_t>(site)] = letter;
    }
    return p;
  }

  int weight() const {
    int w = 0;
    for (auto l : letters) w += (l != 0);
    return w;
  }

  bool is_diagonal() const {
    for (auto l : letters) {
      if (l == 1 || l == 2) return false;
    }
    return true;
  }

  /// P |basis> = phase |out>. X flips, Y flips with phase +-i, Z adds a sign.
  void apply_to_basis(std::uint64_t basis, std::uint64_t& out, Complex& phase) const {
    out = basis;
    phase = Complex(1.0, 0.0);
    for (int site = 0; site < n; ++site) {
      switch (letters[static_cast<std::size_t>(site)]) {
        case 0:
          break;
        case 1:
          out = flip_site(out, site, n);
          break;
        case 2:
          // Y|0> = i|1>, Y|1> = -i|0>
          phase *= site_bit(out, site, n) ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
          out = flip_site(out, site, n);
          break;
        case 3:
          if (site_bit(out, site, n)) phase = -phase;
          break;
      }
    }
  }
};

/// Pauli strings of a local observable embedded into the full register.
inline std::vector<std::pair<PauliString, double>> embed_components(const LocalObservable& op,
                                                                    int n) {
  std::vector<std::pair<PauliString, double>> out;
  out.reserve(op.components.size());
  for (const auto& comp : op.components) {
    out.emplace_back(PauliString::embed(n, op.sites, comp.letters), comp.weight);
  }
  return out;
}

}  // namespace eqlearn

#endif  // EQLEARN_PAULI_HPP
