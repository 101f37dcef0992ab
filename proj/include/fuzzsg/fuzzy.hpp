#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fuzzsg/aut.hpp"
#include "fuzzsg/core.hpp"
#include "fuzzsg/group.hpp"
#include "fuzzsg/lattice.hpp"

namespace fuzzsg {

// mu : G -> [0,1] with exact rational values, one per element index.
struct FuzzyMembership {
  GroupPtr parent;
  std::vector<Rational> values;

  Rational operator()(Elem x) const { return values[x]; }
};

namespace detail {

inline void check_membership(const FuzzyMembership& mu) {
  if (!mu.parent) throw InvalidInput("membership function has no parent group");
  if (mu.values.size() != mu.parent->order())
    throw InvalidInput("membership function needs one value per group element");
  for (const auto& v : mu.values) {
    // denominators are kept positive
    const auto num = boost::multiprecision::numerator(v);
    if (num < 0 || num > boost::multiprecision::denominator(v))
      throw InvalidInput("membership value " + v.str() + " is outside [0,1]");
  }
}

inline void check_same_parent(const FuzzyMembership& mu, const FuzzyMembership& eta) {
  if (mu.parent != eta.parent && !(mu.parent && eta.parent && *mu.parent == *eta.parent))
    throw InvalidInput("fuzzy subgroups live on different groups");
}

}  // namespace detail

/// Level sets { x : mu(x) >= alpha } for alpha in Im(mu), highest level first.
inline std::vector<ElementSet> level_sets(const FuzzyMembership& mu) {
  detail::check_membership(mu);
  // Images are small: bucket by value, then order only the distinct values.
  std::vector<Rational> image;
  std::vector<std::size_t> slot(mu.values.size());
  for (std::size_t x = 0; x < mu.values.size(); ++x) {
    auto it = std::find_if(image.begin(), image.end(), [&](const Rational& v) { return same_value(v, mu.values[x]); });
    slot[x] = static_cast<std::size_t>(it - image.begin());
    if (it == image.end()) image.push_back(mu.values[x]);
  }
  std::vector<std::size_t> rank(image.size());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
  std::sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return image[a] > image[b]; });
  std::vector<std::size_t> position(image.size());
  for (std::size_t i = 0; i < rank.size(); ++i) position[rank[i]] = i;

  std::vector<ElementSet> out(image.size(), ElementSet(mu.values.size()));
  for (std::size_t x = 0; x < mu.values.size(); ++x) out[position[slot[x]]].insert(static_cast<Elem>(x));
  for (std::size_t i = 1; i < out.size(); ++i) out[i] |= out[i - 1];
  return out;
}

namespace detail {

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(g.identity())) return false;
  const auto members = s.members();
  for (Elem a : members) {
    if (!s.contains(g.inverse(a))) return false;
    for (Elem b : members)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_fuzzy_subgroup(const FuzzyMembership& mu) {
  const auto sets = level_sets(mu);
  return std::all_of(sets.begin(), sets.end(), [&](const ElementSet& s) { return detail::is_subgroup(*mu.parent, s); });
}

/// The chain of level subgroups, bottom (highest level) first; ends at G.
inline Chain level_chain(const FuzzyMembership& mu, const SubgroupLattice& lat) {
  if (mu.parent.get() != &lat.group() && !(*mu.parent == lat.group()))
    throw InvalidInput("lattice belongs to a different group");
  Chain c;
  for (const auto& s : level_sets(mu)) {
    auto idx = lat.index_of(s);
    if (!idx) throw InvalidInput("not a fuzzy subgroup: a level set is not a subgroup");
    c.subgroups.push_back(*idx);
  }
  return c;
}

inline bool tilde_equivalent(const FuzzyMembership& mu, const FuzzyMembership& eta, const SubgroupLattice& lat) {
  detail::check_same_parent(mu, eta);
  return level_chain(mu, lat) == level_chain(eta, lat);
}

enum class ApproxMode {
  chains,       // some automorphism carries one level chain onto the other
  same_image,   // additionally Im(mu) = Im(eta)
};

/// True iff some f in `aut` has f(K_i) = H_i along the level chains of eta and mu.
inline bool approx_equivalent(const FuzzyMembership& mu, const FuzzyMembership& eta, const AutGroup& aut,
                              const SubgroupLattice& lat, ApproxMode mode = ApproxMode::chains) {
  detail::check_same_parent(mu, eta);
  const auto target = level_chain(mu, lat);
  const auto source = level_chain(eta, lat);
  if (target.length() != source.length()) return false;
  if (mode == ApproxMode::same_image) {
    auto im = [](const FuzzyMembership& m) {
      auto v = m.values;
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    if (im(mu) != im(eta)) return false;
  }
  for (std::size_t i = 0; i < source.length(); ++i)
    if (lat[source.subgroups[i]].order() != lat[target.subgroups[i]].order()) return false;
  // Orders agree, so f(K_i) = H_i reduces to f(K_i) being inside H_i.
  auto carries = [&](const Automorphism& f) {
    for (std::size_t i = 0; i < source.length(); ++i) {
      const auto& from = lat[source.subgroups[i]].members;
      const auto& to = lat[target.subgroups[i]].members;
      bool inside = true;
      from.for_each([&](Elem x) { inside = inside && to.contains(f(x)); });
      if (!inside) return false;
    }
    return true;
  };
  return std::any_of(aut.begin(), aut.end(), carries);
}

// Membership function whose level chain is `chain`: elements first entering
// at chain position i get levels[i]. Levels must be strictly decreasing.
inline FuzzyMembership lift_chain(const SubgroupLattice& lat, const Chain& chain, const std::vector<Rational>& levels) {
  require(is_valid_chain(lat, chain), "lift_chain needs a chain ending at the whole group");
  require(levels.size() == chain.length(), "one level per chain member required");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    require(levels[i] >= 0 && levels[i] <= 1, "levels must lie in [0,1]");
    require(i == 0 || levels[i] < levels[i - 1], "levels must be strictly decreasing");
  }
  FuzzyMembership mu{lat.group_ptr(), std::vector<Rational>(lat.group().order())};
  for (Elem x = 0; x < lat.group().order(); ++x) {
    std::size_t i = 0;
    while (!lat[chain.subgroups[i]].contains(x)) ++i;
    mu.values[x] = levels[i];
  }
  return mu;
}

}  // namespace fuzzsg
