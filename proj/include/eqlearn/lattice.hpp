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

#ifndef EQLEARN_LATTICE_HPP
#define EQLEARN_LATTICE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace eqlearn {

/// A set of lattice sites, kept sorted and duplicate-free.
using SiteSet = std::vector<int>;

inline int mod_n(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

/// Distance on the periodic chain: d(i,j) = min{|i-j|, n-|i-j|}.
inline int ring_distance(int i, int j, int n) {
  int d = std::abs(i - j) % n;
  return std::min(d, n - d);
}

/// One automorphism of the ring: i -> (shift + i) mod n without reflection,
/// i -> (shift - i) mod n with reflection.
struct GroupElement {
  int shift = 0;
  bool reflect = false;

  int apply(int site, int n) const {
    return reflect ? mod_n(shift - site, n) : mod_n(shift + site, n);
  }

  bool operator==(const GroupElement& other) const = default;
};

/// Composition convention: (g * h)(i) = g(h(i)).
inline GroupElement compose(const GroupElement& g, const GroupElement& h, int n) {
  GroupElement out;
  out.shift = g.reflect ? mod_n(g.shift - h.shift, n) : mod_n(g.shift + h.shift, n);
  out.reflect = g.reflect != h.reflect;
  return out;
}

/// Reflections are involutions; translations invert by negating the shift.
inline GroupElement inverse(const GroupElement& g, int n) {
  if (g.reflect) return g;
  return GroupElement{mod_n(-g.shift, n), false};
}

/// The automorphism group of the ring's interaction hypergraph: all
/// translations, optionally followed by all reflections. Elements are stored
/// explicitly (at most 2n of them) in a fixed order: translations by shift,
/// then reflections by shift.
struct Group {
  int n = 0;
  bool include_reflections = false;
  std::vector<GroupElement> elements;

  std::size_t size() const { return elements.size(); }
  const GroupElement& identity() const { return elements.front(); }
};

inline Group build_group(int n, bool include_reflections) {
  if (n < 3) throw std::invalid_argument("build_group: lattice needs n >= 3 sites");
  Group g;
  g.n = n;
  g.include_reflections = include_reflections;
  g.elements.reserve(include_reflections ? 2 * n : n);
  for (int s = 0; s < n; ++s) g.elements.push_back({s, false});
  if (include_reflections) {
    for (int s = 0; s < n; ++s) g.elements.push_back({s, true});
  }
  return g;
}

/// Image of a site set under g, returned sorted.
inline SiteSet act_on_sites(const GroupElement& g, const SiteSet& sites, int n) {
  SiteSet out;
  out.reserve(sites.size());
  for (int s : sites) {
    if (s < 0 || s >= n) throw std::out_of_range("act_on_sites: site outside [0, n)");
    out.push_back(g.apply(s, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbit of a site set under G. `members` holds one entry per distinct image
/// gI, keyed by the first group element (in group order) reaching it;
/// |members| * stabilizer_size == |G|.
struct OrbitClass {
  SiteSet representative;
  std::vector<std::pair<GroupElement, SiteSet>> members;
  int stabilizer_size = 1;
};

namespace detail {

inline OrbitClass orbit_of(const SiteSet& seed, const Group& group) {
  // Representative = lexicographically minimal image.
  SiteSet rep = act_on_sites(group.identity(), seed, group.n);
  for (const auto& g : group.elements) {
    SiteSet image = act_on_sites(g, seed, group.n);
    if (image < rep) rep = image;
  }
  OrbitClass cls;
  cls.representative = rep;
  std::map<SiteSet, GroupElement> seen;
  int stabilizer = 0;
  for (const auto& g : group.elements) {
    SiteSet image = act_on_sites(g, rep, group.n);
    if (image == rep) ++stabilizer;
    seen.emplace(image, g);  // keeps the first g reaching each image
  }
  cls.stabilizer_size = stabilizer;
  for (const auto& [image, g] : seen) cls.members.emplace_back(g, image);
  if (cls.members.size() * static_cast<std::size_t>(stabilizer) != group.size()) {
    throw std::logic_error("orbit_of: orbit-stabilizer mismatch");
  }
  return cls;
}

}  // namespace detail

/// Partition a family of site sets into orbits under G. Classes are returned
/// ordered by their representatives.
inline std::vector<OrbitClass> orbits(const std::vector<SiteSet>& sets, const Group& group) {
  std::map<SiteSet, OrbitClass> by_rep;
  for (const auto& raw : sets) {
    SiteSet canon = raw;
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    for (int s : canon) {
      if (s < 0 || s >= group.n) throw std::out_of_range("orbits: site outside [0, n)");
    }
    OrbitClass cls = detail::orbit_of(canon, group);
    by_rep.try_emplace(cls.representative, std::move(cls));
  }
  std::vector<OrbitClass> out;
  out.reserve(by_rep.size());
  for (auto& [rep, cls] : by_rep) out.push_back(std::move(cls));
  return out;
}

/// Locate (class index, group element) such that g * representative == sites.
/// Returns {-1, identity-ish} when no class contains the set.
struct OrbitMembership {
  int class_index = -1;
  GroupElement element;
};

inline OrbitMembership find_member(const std::vector<OrbitClass>& classes, const SiteSet& sites) {
  SiteSet canon = sites;
  std::sort(canon.begin(), canon.end());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& [g, image] : classes[c].members) {
      if (image == canon) return {static_cast<int>(c), g};
    }
  }
  return {};
}

}  // namespace eqlearn

#endif  // EQLEARN_LATTICE_HPP
