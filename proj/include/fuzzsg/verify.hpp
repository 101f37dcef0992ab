#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fuzzsg/aut.hpp"
#include "fuzzsg/counting.hpp"
#include "fuzzsg/formulas.hpp"
#include "fuzzsg/group.hpp"
#include "fuzzsg/lattice.hpp"

namespace fuzzsg {

struct CheckResult {
  std::string group;
  std::string check;
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::string detail;

  bool passed() const { return status != Status::fail; }
};

inline std::vector<GroupSpec> default_corpus() {
  std::vector<GroupSpec> corpus;
  for (std::size_t n : {2, 3, 4, 6, 8, 12, 16, 30, 36, 200}) corpus.push_back(GroupSpec::cyclic(n));
  corpus.push_back(GroupSpec::elemab(2, 2));
  corpus.push_back(GroupSpec::elemab(2, 3));
  corpus.push_back(GroupSpec::elemab(3, 2));
  for (std::size_t order : {6, 8, 10, 12, 16, 20}) corpus.push_back(GroupSpec::dihedral(order));
  corpus.push_back(GroupSpec::symmetric(3));
  corpus.push_back(GroupSpec::symmetric(4));
  return corpus;
}

/// Known (h, N) pairs for the worked examples.
struct KnownCounts {
  GroupSpec spec;
  unsigned h;
  unsigned n;
};

inline const std::vector<KnownCounts>& known_counts() {
  static const std::vector<KnownCounts> table{
      {GroupSpec::elemab(2, 2), 8, 4},
      {GroupSpec::dihedral(8), 32, 16},
      {GroupSpec::symmetric(3), 10, 6},
      {GroupSpec::dihedral(6), 10, 6},
  };
  return table;
}

inline bool has_element_of_order(const FiniteGroup& g, std::size_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return true;
  return false;
}

/// Whether a family parameterization of Aut(G) applies to this instance.
inline bool has_family_automorphisms(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::cyclic:
    case Family::elementary_abelian: return true;
    case Family::dihedral: return spec.a >= 6;
    case Family::symmetric: return spec.a >= 3 && spec.a != 6;
  }
  return false;
}

namespace detail {

/// p and m with order = 2 p^m, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> dihedral_prime_power(std::size_t order) {
  const auto f = factorize(order / 2);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].prime, f[0].multiplicity);
}

}  // namespace detail

// Cross-checks for one group: axioms, closed forms against the lattice, family
// automorphisms against the generic search, Burnside against direct orbits,
// the cyclic criterion, and the normalizer route for symmetric groups.
inline std::vector<CheckResult> verify_group(const GroupSpec& spec, const Limits& lim = {}) {
  std::vector<CheckResult> out;
  const std::string name = spec.to_string();
  auto record = [&](std::string check, bool ok, std::string detail) {
    out.push_back({name, std::move(check), ok ? CheckResult::Status::pass : CheckResult::Status::fail,
                   std::move(detail)});
  };
  auto skip = [&](std::string check, std::string detail) {
    out.push_back({name, std::move(check), CheckResult::Status::skipped, std::move(detail)});
  };

  auto group = std::make_shared<const FiniteGroup>(make_group(spec, lim));
  const auto axioms = verify_group_axioms(*group);
  record("group-axioms", axioms.ok(), axioms.ok() ? "identity, inverses, associativity, generators" : axioms.failures.front());

  const auto lattice = enumerate_subgroups(group, lim);
  const BigInt h = count_chains(lattice);

  if (spec.family == Family::cyclic && spec.a >= 2) {
    const BigInt formula = h_cyclic_formula(factorize(spec.a));
    record("h-cyclic-formula", formula == h, "formula " + formula.str() + ", lattice " + h.str());
  }
  if (spec.family == Family::dihedral) {
    if (auto pm = detail::dihedral_prime_power(spec.a)) {
      const BigInt formula = h_dihedral_2pm(pm->first, pm->second);
      record("h-dihedral-formula", formula == h, "formula " + formula.str() + ", lattice " + h.str());
    }
  }

  const AutGroup generic = enumerate_automorphisms(*group, lim);
  record("aut-closed", generic.is_closed(), std::to_string(generic.size()) + " automorphisms");
  if (has_family_automorphisms(spec)) {
    const AutGroup family = automorphisms_for(spec, *group, lim);
    record("aut-family-vs-generic", family.same_maps(generic),
           "family " + std::to_string(family.size()) + ", generic " + std::to_string(generic.size()));
    const BigInt formula = aut_order_formula(spec);
    record("aut-order-formula", formula == generic.size(),
           "formula " + formula.str() + ", generic " + std::to_string(generic.size()));
  } else {
    skip("aut-family-vs-generic", "no family parameterization for " + name + "; generic search only");
  }

  BurnsideResult burn;
  try {
    burn = burnside(lattice, generic);
    record("burnside-integral", true, "sum " + burn.fix_sum.str() + " = " + burn.orbits.str() + " * " +
                                          std::to_string(generic.size()));
  } catch (const ConsistencyError& e) {
    record("burnside-integral", false, e.what());
    return out;
  }
  record("identity-fixes-all", burn.fix_counts.front() == h,
         "|Fix(id)| " + burn.fix_counts.front().str() + ", h " + h.str());

  if (h <= lim.max_chains) {
    const auto orbits = enumerate_orbits(lattice, generic, lim);
    record("burnside-vs-orbits", burn.orbits == orbits.size(),
           "Burnside " + burn.orbits.str() + ", orbits " + std::to_string(orbits.size()));
  } else {
    skip("burnside-vs-orbits", h.str() + " chains exceed --max-chains");
  }

  const bool cyclic = has_element_of_order(*group, group->order());
  record("cyclic-iff-N-equals-h", cyclic == (burn.orbits == h),
         std::string(cyclic ? "cyclic" : "noncyclic") + ", N " + burn.orbits.str() + ", h " + h.str());

  for (const auto& known : known_counts()) {
    if (!(known.spec == spec)) continue;
    record("known-values", h == known.h && burn.orbits == known.n,
           "h " + h.str() + " (expected " + std::to_string(known.h) + "), N " + burn.orbits.str() + " (expected " +
               std::to_string(known.n) + ")");
  }

  if (spec.family == Family::symmetric && spec.a >= 3 && spec.a != 6) {
    bool agree = true;
    for (Elem sigma = 0; sigma < group->order() && agree; ++sigma) {
      Automorphism f{std::vector<Elem>(group->order()), {}};
      for (Elem y = 0; y < group->order(); ++y) f.perm[y] = group->conjugate(sigma, y);
      agree = sn_fixed_chain_count(sigma, lattice) == fixed_chain_count(f, lattice);
    }
    record("normalizer-route", agree, "Fix(f_sigma) via normalizers vs invariant subgroups");
  }
  return out;
}

}  // namespace fuzzsg
