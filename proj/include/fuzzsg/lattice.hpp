#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzsg/core.hpp"
#include "fuzzsg/element_set.hpp"
#include "fuzzsg/group.hpp"

namespace fuzzsg {

struct Subgroup {
  ElementSet members;

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const { return members.contains(x); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

// Chain H_1 < H_2 < ... < H_m = G stored bottom-up as lattice indices.
struct Chain {
  std::vector<std::size_t> subgroups;

  std::size_t length() const { return subgroups.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Order used by the chain stream: lexicographic on the top-down index sequence.
inline bool chain_less(const Chain& a, const Chain& b) {
  return std::lexicographical_compare(a.subgroups.rbegin(), a.subgroups.rend(), b.subgroups.rbegin(),
                                      b.subgroups.rend());
}

struct ChainHash {
  std::size_t operator()(const Chain& c) const {
    std::size_t h = c.subgroups.size();
    for (auto i : c.subgroups) h = h * 1000003u ^ i;
    return h;
  }
};

// All subgroups of a group, sorted by (order, member list), with the
// inclusion relation. Index 0 is always the trivial subgroup and the last
// index is the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice(GroupPtr group, std::vector<Subgroup> subgroups) : group_(std::move(group)), subs_(std::move(subgroups)) {
    std::sort(subs_.begin(), subs_.end(), [](const Subgroup& x, const Subgroup& y) {
      if (x.order() != y.order()) return x.order() < y.order();
      return x.members < y.members;
    });
    const auto s = subs_.size();
    below_.assign(s, ElementSet(s));
    for (std::size_t i = 0; i < s; ++i) {
      index_.emplace(subs_[i].members, i);
      // Containment needs a strictly smaller order, and those sort earlier.
      for (std::size_t j = 0; j < i; ++j)
        if (subs_[j].order() < subs_[i].order() && subs_[j].members.is_subset_of(subs_[i].members))
          below_[i].insert(static_cast<Elem>(j));
    }
  }

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return subs_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  std::size_t trivial_index() const { return 0; }
  std::size_t full_index() const { return subs_.size() - 1; }

  /// Strict inclusion: subgroup i is a proper subgroup of subgroup j.
  bool properly_contained(std::size_t i, std::size_t j) const { return below_[j].contains(static_cast<Elem>(i)); }
  bool contained(std::size_t i, std::size_t j) const { return i == j || properly_contained(i, j); }
  const ElementSet& proper_subgroups_of(std::size_t j) const { return below_[j]; }

  std::optional<std::size_t> index_of(const ElementSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Maximal proper subgroups of j (the Hasse-diagram lower covers).
  std::vector<std::size_t> lower_covers(std::size_t j) const {
    std::vector<std::size_t> out;
    below_[j].for_each([&](Elem i) {
      bool maximal = true;
      below_[j].for_each([&](Elem k) { maximal = maximal && !properly_contained(i, k); });
      if (maximal) out.push_back(i);
    });
    return out;
  }

  ElementSet all_indices() const { return ElementSet::full(size()); }

 private:
  GroupPtr group_;
  std::vector<Subgroup> subs_;
  std::vector<ElementSet> below_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

// Every subgroup is the join of the cyclic subgroups it contains, so closing
// the set of cyclic subgroups under "join with one more cyclic subgroup"
// reaches the whole lattice.
inline SubgroupLattice enumerate_subgroups(GroupPtr group, const Limits& lim = {}) {
  const FiniteGroup& g = *group;
  detail::check_cap(g.order(), lim, "group");

  struct Found {
    ElementSet members;
    std::vector<Elem> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet members, std::vector<Elem> gens) {
    if (seen.contains(members)) return;
    if (found.size() >= lim.max_subgroups)
      throw ResourceError("more than " + std::to_string(lim.max_subgroups) + " subgroups (--max-subgroups)");
    seen.emplace(members, found.size());
    found.push_back({std::move(members), std::move(gens)});
  };

  add(g.closure({}), {});
  std::vector<std::pair<Elem, ElementSet>> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    auto c = g.closure({x});
    // one generator per cyclic subgroup is enough
    if (!seen.contains(c)) cyclic.emplace_back(x, c);
    add(std::move(c), {x});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [x, c] : cyclic) {
      if (c.is_subset_of(found[i].members)) continue;
      auto gens = found[i].gens;
      gens.push_back(x);
      add(g.closure(gens), gens);
    }
  }

  std::vector<Subgroup> subs;
  subs.reserve(found.size());
  for (auto& f : found) subs.push_back({std::move(f.members)});
  return SubgroupLattice(std::move(group), std::move(subs));
}

inline SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const Limits& lim = {}) {
  return enumerate_subgroups(std::make_shared<const FiniteGroup>(g), lim);
}

/// Chains ending at G whose members all lie in `allowed`:
/// f(H) = 1 + sum over allowed K < H of f(K), answer f(G).
inline BigInt count_chains_within(const SubgroupLattice& lat, const ElementSet& allowed) {
  const auto top = lat.full_index();
  if (!allowed.contains(static_cast<Elem>(top)))
    throw InvalidInput("allowed subgroup set must contain the whole group");
  std::vector<BigInt> f(lat.size());
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!allowed.contains(static_cast<Elem>(h))) continue;
    BigInt total = 1;
    lat.proper_subgroups_of(h).for_each([&](Elem k) {
      if (allowed.contains(k)) total += f[k];
    });
    f[h] = std::move(total);
  }
  return f[top];
}

/// h(G): the number of chains of subgroups ending at G.
inline BigInt count_chains(const SubgroupLattice& lat) { return count_chains_within(lat, lat.all_indices()); }

// Streams every chain ending at G in canonical order: a chain precedes its
// own extensions, and siblings go by increasing index of the next subgroup
// down. The visitor returns false to stop early.
inline void for_each_chain(const SubgroupLattice& lat, const std::function<bool(const Chain&)>& visit) {
  std::vector<std::size_t> top_down{lat.full_index()};
  Chain chain;
  std::function<bool()> walk = [&]() -> bool {
    chain.subgroups.assign(top_down.rbegin(), top_down.rend());
    if (!visit(chain)) return false;
    bool go_on = true;
    lat.proper_subgroups_of(top_down.back()).for_each([&](Elem k) {
      if (!go_on) return;
      top_down.push_back(k);
      go_on = walk();
      top_down.pop_back();
    });
    return go_on;
  };
  walk();
}

inline std::vector<Chain> enumerate_chains(const SubgroupLattice& lat, const Limits& lim = {}) {
  const BigInt total = count_chains(lat);
  if (total > lim.max_chains)
    throw ResourceError(total.str() + " chains exceed --max-chains " + std::to_string(lim.max_chains));
  std::vector<Chain> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_chain(lat, [&](const Chain& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

inline bool is_valid_chain(const SubgroupLattice& lat, const Chain& c) {
  if (c.subgroups.empty() || c.subgroups.back() != lat.full_index()) return false;
  for (std::size_t i = 0; i < c.subgroups.size(); ++i) {
    if (c.subgroups[i] >= lat.size()) return false;
    if (i > 0 && !lat.properly_contained(c.subgroups[i - 1], c.subgroups[i])) return false;
  }
  return true;
}

/// N_G(H) = { x : x H x^-1 = H }.
inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  ElementSet n(g.order());
  const auto members = h.members.members();
  for (Elem x = 0; x < g.order(); ++x) {
    const bool normalizes =
        std::all_of(members.begin(), members.end(), [&](Elem y) { return h.contains(g.conjugate(x, y)); });
    if (normalizes) n.insert(x);
  }
  return {std::move(n)};
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) { return normalizer(g, h).order() == g.order(); }

}  // namespace fuzzsg
