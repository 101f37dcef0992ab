#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "fuzzsg/counting.hpp"
#include "fuzzsg/verify.hpp"

using namespace fuzzsg;

namespace {

std::multiset<BigInt> multiset_of(const std::vector<BigInt>& v) { return {v.begin(), v.end()}; }

Automorphism conjugation(const FiniteGroup& g, Elem sigma) {
  Automorphism f{std::vector<Elem>(g.order()), {}};
  for (Elem y = 0; y < g.order(); ++y) f.perm[y] = g.conjugate(sigma, y);
  return f;
}

struct Frozen {
  GroupSpec spec;
  unsigned subgroups, h, n, aut;
};

// Produced by tests/oracles/brute_force.py (subset closure, explicit chain DFS,
// orbit sweep over brute-force automorphisms).
const std::vector<Frozen> kOracle{
    {GroupSpec::cyclic(2), 2, 2, 2, 1},          {GroupSpec::cyclic(3), 2, 2, 2, 2},
    {GroupSpec::cyclic(4), 3, 4, 4, 2},          {GroupSpec::cyclic(6), 4, 6, 6, 2},
    {GroupSpec::cyclic(8), 4, 8, 8, 4},          {GroupSpec::cyclic(12), 6, 16, 16, 4},
    {GroupSpec::cyclic(16), 5, 16, 16, 8},       {GroupSpec::cyclic(30), 8, 26, 26, 8},
    {GroupSpec::cyclic(36), 9, 52, 52, 12},      {GroupSpec::elemab(2, 2), 5, 8, 4, 6},
    {GroupSpec::elemab(2, 3), 16, 72, 8, 168},   {GroupSpec::elemab(3, 2), 6, 10, 4, 48},
    {GroupSpec::dihedral(4), 5, 8, 4, 6},        {GroupSpec::dihedral(6), 6, 10, 6, 6},
    {GroupSpec::dihedral(8), 10, 32, 16, 8},     {GroupSpec::dihedral(10), 8, 14, 6, 20},
    {GroupSpec::dihedral(12), 16, 68, 26, 12},   {GroupSpec::dihedral(14), 10, 18, 6, 42},
    {GroupSpec::dihedral(16), 19, 128, 40, 32},  {GroupSpec::dihedral(18), 16, 56, 16, 54},
    {GroupSpec::dihedral(20), 22, 100, 26, 40},  {GroupSpec::symmetric(3), 6, 10, 6, 6},
    {GroupSpec::symmetric(4), 30, 232, 62, 24},
};

}  // namespace

TEST(FixedChainCount, WorkedExamples) {
  const auto klein = enumerate_subgroups(make_elementary_abelian(2, 2));
  EXPECT_EQ(fixed_chain_count(Automorphism{{0, 1, 2, 3}, {}}, klein), 8);

  const auto d8 = enumerate_subgroups(make_dihedral(8));
  EXPECT_EQ(fixed_chain_count(dihedral_automorphism(8, 3, 0), d8), 24);

  const auto s3 = make_symmetric(3);
  const auto s3_lat = enumerate_subgroups(s3);
  EXPECT_EQ(fixed_chain_count(conjugation(s3, *s3.find_label("(1 2 3)")), s3_lat), 4);
}

TEST(Burnside, Klein) {
  const auto lat = enumerate_subgroups(make_elementary_abelian(2, 2));
  const auto r = burnside(lat, aut_elementary_abelian(2, 2));
  EXPECT_EQ(r.orbits, 4);
  EXPECT_EQ(multiset_of(r.fix_counts), (std::multiset<BigInt>{8, 4, 4, 4, 2, 2}));
}

TEST(Burnside, D8) {
  const auto lat = enumerate_subgroups(make_dihedral(8));
  const auto r = burnside(lat, aut_dihedral(8));
  EXPECT_EQ(r.orbits, 16);
  EXPECT_EQ(multiset_of(r.fix_counts), (std::multiset<BigInt>{32, 8, 8, 8, 8, 16, 24, 24}));
}

TEST(Burnside, S3AndD6) {
  for (const auto& g : {make_symmetric(3), make_dihedral(6)}) {
    const auto lat = enumerate_subgroups(g);
    const auto r = burnside(lat, enumerate_automorphisms(g));
    EXPECT_EQ(r.orbits, 6);
    EXPECT_EQ(count_chains(lat), 10);
    EXPECT_EQ(multiset_of(r.fix_counts), (std::multiset<BigInt>{10, 6, 6, 6, 4, 4}));
  }
}

TEST(Burnside, NonGroupSubsetIsRejected) {
  const auto lat = enumerate_subgroups(make_elementary_abelian(2, 2));
  const auto full = aut_elementary_abelian(2, 2);
  // identity, one fixing H2 (|Fix| 4) and one 3-cycle (|Fix| 2): 14 is not divisible by 3
  std::vector<Automorphism> partial{full[0]};
  for (const auto& f : full) {
    const auto c = fixed_chain_count(f, lat);
    if ((c == 4 && partial.size() == 1) || (c == 2 && partial.size() == 2)) partial.push_back(f);
  }
  ASSERT_EQ(partial.size(), 3u);
  EXPECT_THROW(burnside(lat, AutGroup(partial)), ConsistencyError);
}

TEST(EnumerateOrbits, Klein) {
  const auto lat = enumerate_subgroups(make_elementary_abelian(2, 2));
  const auto orbits = enumerate_orbits(lat, aut_elementary_abelian(2, 2));
  ASSERT_EQ(orbits.size(), 4u);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.members.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 3, 3}));
  EXPECT_EQ(orbits[2].representative, (Chain{{1, 4}}));
  EXPECT_EQ(orbits[2].members, (std::vector<Chain>{{{1, 4}}, {{2, 4}}, {{3, 4}}}));
  EXPECT_EQ(orbits[3].members, (std::vector<Chain>{{{0, 1, 4}}, {{0, 2, 4}}, {{0, 3, 4}}}));
}

TEST(EnumerateOrbits, S3) {
  const auto g = make_symmetric(3);
  const auto lat = enumerate_subgroups(g);
  const auto orbits = enumerate_orbits(lat, inner_automorphisms(g));
  ASSERT_EQ(orbits.size(), 6u);
  const auto it = std::find_if(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.representative == Chain{{1, 5}}; });
  ASSERT_NE(it, orbits.end());
  EXPECT_EQ(it->members, (std::vector<Chain>{{{1, 5}}, {{2, 5}}, {{3, 5}}}));
}

TEST(EnumerateOrbits, TrivialGroup) {
  const auto lat = enumerate_subgroups(make_cyclic(1));
  EXPECT_EQ(enumerate_orbits(lat, aut_cyclic(1)).size(), 1u);
}

TEST(SnFixedChainCount, S3) {
  const auto g = make_symmetric(3);
  const auto lat = enumerate_subgroups(g);
  EXPECT_EQ(sn_fixed_chain_count(g.identity(), lat), 10);
  for (const char* tau : {"(2 3)", "(1 3)", "(1 2)"}) EXPECT_EQ(sn_fixed_chain_count(*g.find_label(tau), lat), 6);
  EXPECT_EQ(sn_fixed_chain_count(*g.find_label("(1 2 3)"), lat), 4);
  EXPECT_EQ(sn_fixed_chain_count(*g.find_label("(1 3 2)"), lat), 4);
}

TEST(SnFixedChainCount, AgreesWithInvariantSubgroupRoute) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto g = make_symmetric(n);
    const auto lat = enumerate_subgroups(g);
    EXPECT_EQ(sn_fixed_chain_count(g.identity(), lat), count_chains(lat));
    for (Elem sigma = 0; sigma < g.order(); ++sigma)
      EXPECT_EQ(sn_fixed_chain_count(sigma, lat), fixed_chain_count(conjugation(g, sigma), lat)) << n << " " << g.label(sigma);
  }
}

TEST(Counting, FrozenOracleValues) {
  for (const auto& row : kOracle) {
    const auto c = classify(row.spec, {}, true);
    EXPECT_EQ(c.report.subgroup_count, row.subgroups) << row.spec.to_string();
    EXPECT_EQ(c.report.h, row.h) << row.spec.to_string();
    EXPECT_EQ(c.report.n, row.n) << row.spec.to_string();
    EXPECT_EQ(c.report.aut_order, row.aut) << row.spec.to_string();
    EXPECT_EQ(c.report.orbits->size(), row.n) << row.spec.to_string();
  }
}

TEST(Counting, ReportInvariants) {
  for (const auto& spec : default_corpus()) {
    const auto c = classify(spec, {}, true);
    const auto& r = c.report;
    BigInt sum = 0;
    for (const auto& v : r.fix_counts) sum += v;
    EXPECT_EQ(sum, r.n * r.aut_order);
    ASSERT_TRUE(c.aut[0].is_identity());
    EXPECT_EQ(r.fix_counts[0], r.h);
    EXPECT_LE(r.n, r.h);
    std::size_t singleton = 0;
    for (const auto& o : *r.orbits) {
      EXPECT_EQ(r.aut_order % o.members.size(), 0u);
      singleton += o.members.size() == 1;
    }
    EXPECT_EQ(r.n == r.h, singleton == r.orbits->size());
    EXPECT_EQ(r.n == r.h, spec.family == Family::cyclic) << spec.to_string();
  }
}

TEST(Counting, ConjugateAutomorphismsFixEqually) {
  for (const auto& g : {make_dihedral(16), make_symmetric(4), make_elementary_abelian(2, 3)}) {
    const auto lat = enumerate_subgroups(g);
    const auto aut = enumerate_automorphisms(g);
    std::map<std::vector<Elem>, BigInt> fix;
    for (const auto& f : aut) fix[f.perm] = fixed_chain_count(f, lat);
    for (const auto& f : aut)
      for (const auto& h : aut) EXPECT_EQ(fix[compose(compose(h, f), inverse(h)).perm], fix[f.perm]);
  }
}

TEST(Counting, AutomorphismsForPicksFullGroup) {
  for (const auto& spec : {GroupSpec::dihedral(4), GroupSpec::symmetric(2), GroupSpec::cyclic(9), GroupSpec::dihedral(10)}) {
    const auto g = make_group(spec);
    EXPECT_TRUE(automorphisms_for(spec, g).same_maps(enumerate_automorphisms(g))) << spec.to_string();
  }
}
