#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzsg/aut.hpp"
#include "fuzzsg/core.hpp"
#include "fuzzsg/formulas.hpp"
#include "fuzzsg/group.hpp"
#include "fuzzsg/lattice.hpp"

namespace fuzzsg {

/// |Fix(f)| on chains: chains built only from f-invariant subgroups.
inline BigInt fixed_chain_count(const Automorphism& f, const SubgroupLattice& lat) {
  return count_chains_within(lat, invariant_subgroups(f, lat));
}

struct BurnsideResult {
  BigInt orbits;
  BigInt fix_sum;
  std::vector<BigInt> fix_counts;  // aligned with the AutGroup order
};

/// N = (1/|Aut|) sum_f |Fix(f)|; throws ConsistencyError when the sum does not divide.
inline BurnsideResult burnside(const SubgroupLattice& lat, const AutGroup& aut) {
  if (aut.size() == 0) throw InvalidInput("automorphism group is empty");
  BurnsideResult r;
  r.fix_counts.reserve(aut.size());
  for (const auto& f : aut) {
    r.fix_counts.push_back(fixed_chain_count(f, lat));
    r.fix_sum += r.fix_counts.back();
  }
  if (r.fix_sum % aut.size() != 0)
    throw ConsistencyError("sum of fixed-chain counts " + r.fix_sum.str() + " is not divisible by |Aut| = " +
                           std::to_string(aut.size()));
  r.orbits = r.fix_sum / aut.size();
  return r;
}

inline BigInt burnside_count(const SubgroupLattice& lat, const AutGroup& aut) { return burnside(lat, aut).orbits; }

struct Orbit {
  Chain representative;  // least chain of the orbit in stream order
  std::vector<Chain> members;
};

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so roots are stream-order minima.
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace detail

// Direct orbit enumeration: every chain is joined with its image under every
// automorphism. Orbits come back ordered by representative.
inline std::vector<Orbit> enumerate_orbits(const SubgroupLattice& lat, const AutGroup& aut, const Limits& lim = {}) {
  const auto chains = enumerate_chains(lat, lim);
  std::unordered_map<Chain, std::size_t, ChainHash> index;
  index.reserve(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) index.emplace(chains[i], i);

  // Image of each subgroup under each automorphism, computed once.
  std::vector<std::vector<std::size_t>> sub_image(aut.size(), std::vector<std::size_t>(lat.size()));
  for (std::size_t a = 0; a < aut.size(); ++a)
    for (std::size_t h = 0; h < lat.size(); ++h) {
      auto j = lat.index_of(apply_to_subgroup(aut[a], lat[h]).members);
      if (!j) throw ConsistencyError("automorphism image of a subgroup is missing from the lattice");
      sub_image[a][h] = *j;
    }

  detail::DisjointSets sets(chains.size());
  Chain image;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t a = 0; a < aut.size(); ++a) {
      image.subgroups.clear();
      for (auto h : chains[i].subgroups) image.subgroups.push_back(sub_image[a][h]);
      auto it = index.find(image);
      if (it == index.end()) throw ConsistencyError("automorphism image of a chain is not a chain");
      sets.join(i, it->second);
    }

  std::vector<Orbit> orbits;
  std::vector<std::size_t> slot(chains.size(), chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto root = sets.find(i);
    if (slot[root] == chains.size()) {
      slot[root] = orbits.size();
      orbits.push_back({chains[root], {}});
    }
    orbits[slot[root]].members.push_back(chains[i]);
  }
  return orbits;
}

// Fixed chains of the inner automorphism f_sigma via normalizers: a chain is
// fixed iff sigma lies in the normalizer of every member.
inline BigInt sn_fixed_chain_count(Elem sigma, const SubgroupLattice& lat) {
  ElementSet allowed(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (normalizer(lat.group(), lat[i]).contains(sigma)) allowed.insert(static_cast<Elem>(i));
  return count_chains_within(lat, allowed);
}

/// The family parameterization when one exists, else the generic search.
inline AutGroup automorphisms_for(const GroupSpec& spec, const FiniteGroup& g, const Limits& lim = {}) {
  switch (spec.family) {
    case Family::cyclic: return aut_cyclic(spec.a);
    case Family::elementary_abelian: return aut_elementary_abelian(spec.a, spec.b, lim);
    case Family::dihedral:
      if (spec.a >= 6) return aut_dihedral(spec.a);
      break;
    case Family::symmetric:
      if (spec.a >= 3 && spec.a != 6) return inner_automorphisms(g);
      break;
  }
  return enumerate_automorphisms(g, lim);
}

struct ClassificationReport {
  GroupSpec spec;
  std::size_t group_order = 0;
  std::size_t subgroup_count = 0;
  BigInt h;  // classes under ~
  BigInt n;  // classes under the automorphism relation
  std::size_t aut_order = 0;
  std::vector<std::string> aut_labels;
  std::vector<std::size_t> fixed_subgroups;
  std::vector<BigInt> fix_counts;
  std::optional<std::vector<Orbit>> orbits;
};

struct Classification {
  GroupPtr group;
  std::shared_ptr<const SubgroupLattice> lattice;
  AutGroup aut;
  ClassificationReport report;
};

inline Classification classify(const GroupSpec& spec, const Limits& lim = {}, bool with_orbits = false) {
  Classification c;
  c.group = std::make_shared<const FiniteGroup>(make_group(spec, lim));
  c.lattice = std::make_shared<const SubgroupLattice>(enumerate_subgroups(c.group, lim));
  c.aut = automorphisms_for(spec, *c.group, lim);
  auto& r = c.report;
  r.spec = spec;
  r.group_order = c.group->order();
  r.subgroup_count = c.lattice->size();
  r.h = count_chains(*c.lattice);
  auto b = burnside(*c.lattice, c.aut);
  r.n = b.orbits;
  r.aut_order = c.aut.size();
  r.fix_counts = std::move(b.fix_counts);
  for (const auto& f : c.aut) {
    r.aut_labels.push_back(f.label);
    r.fixed_subgroups.push_back(invariant_subgroups(f, *c.lattice).size());
  }
  if (with_orbits) r.orbits = enumerate_orbits(*c.lattice, c.aut, lim);
  return c;
}

}  // namespace fuzzsg
