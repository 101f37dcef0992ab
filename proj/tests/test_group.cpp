#include <gtest/gtest.h>

#include "fuzzsg/group.hpp"

using namespace fuzzsg;

TEST(Cyclic, TrivialGroup) {
  const auto g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.generators(), std::vector<Elem>{0});
}

TEST(Cyclic, ModularAddition) {
  const auto g = make_cyclic(4);
  EXPECT_EQ(g.mul(1, 3), 0u);
  EXPECT_EQ(g.label(3), "3");
  EXPECT_EQ(g.generators(), std::vector<Elem>{1});
}

TEST(Cyclic, RejectsZero) { EXPECT_THROW(make_cyclic(0), InvalidInput); }

TEST(ElementaryAbelian, KleinGroup) {
  const auto g = make_elementary_abelian(2, 2);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.generators(), (std::vector<Elem>{1, 2}));
  EXPECT_EQ(g.label(1), "(1,0)");
  EXPECT_EQ(g.label(2), "(0,1)");
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(g.mul(x, x), g.identity());
}

TEST(ElementaryAbelian, RankOneIsCyclic) { EXPECT_EQ(make_elementary_abelian(2, 1), make_cyclic(2)); }

TEST(ElementaryAbelian, Errors) {
  EXPECT_THROW(make_elementary_abelian(4, 2), InvalidInput);
  EXPECT_THROW(make_elementary_abelian(2, 0), InvalidInput);
  EXPECT_THROW(make_elementary_abelian(2, 9), ResourceError);  // 512 > 360
  Limits big;
  big.max_order = 512;
  EXPECT_EQ(make_elementary_abelian(2, 9, big).order(), 512u);
}

TEST(Dihedral, PresentationHoldsInD8) {
  const auto g = make_dihedral(8);
  const Elem a = 1, b = 4;
  EXPECT_EQ(g.generators(), (std::vector<Elem>{a, b}));
  EXPECT_EQ(g.element_order(a), 4u);
  EXPECT_EQ(g.element_order(b), 2u);
  EXPECT_EQ(g.mul(g.mul(b, a), b), g.inverse(a));
  EXPECT_EQ(g.inverse(a), 3u);  // a^3
  EXPECT_EQ(g.label(5), "ab");
  EXPECT_EQ(g.label(6), "a^2b");
}

TEST(Dihedral, D4IsKlein) {
  const auto g = make_dihedral(4);
  EXPECT_TRUE(g.is_abelian());
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(g.mul(x, x), g.identity());
}

TEST(Dihedral, Errors) {
  EXPECT_THROW(make_dihedral(7), InvalidInput);
  EXPECT_THROW(make_dihedral(2), InvalidInput);
  EXPECT_THROW(make_dihedral(362), ResourceError);
}

TEST(Symmetric, S3Elements) {
  const auto g = make_symmetric(3);
  ASSERT_EQ(g.order(), 6u);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"e", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"}));
  EXPECT_EQ(g.identity(), 0u);
}

TEST(Symmetric, RightFactorAppliedFirst) {
  const auto g = make_symmetric(3);
  const Elem t12 = *g.find_label("(1 2)");
  const Elem t23 = *g.find_label("(2 3)");
  // (1 2)(2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1, i.e. (1 2 3)
  EXPECT_EQ(g.label(g.mul(t12, t23)), "(1 2 3)");
  EXPECT_EQ(g.label(g.mul(t23, t12)), "(1 3 2)");
}

TEST(Symmetric, TrivialAndCap) {
  EXPECT_EQ(make_symmetric(1).order(), 1u);
  EXPECT_EQ(make_symmetric(5).order(), 120u);
  EXPECT_THROW(make_symmetric(6), ResourceError);
}

TEST(Symmetric, S4CenterIsTrivial) {
  const auto g = make_symmetric(4);
  EXPECT_EQ(g.order(), 24u);
  std::vector<Elem> central;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Elem y = 0; y < g.order(); ++y) commutes = commutes && g.mul(x, y) == g.mul(y, x);
    if (commutes) central.push_back(x);
  }
  EXPECT_EQ(central, std::vector<Elem>{g.identity()});
}

TEST(Axioms, ConstructorsPass) {
  for (const auto& g : {make_cyclic(1), make_cyclic(12), make_elementary_abelian(3, 2), make_elementary_abelian(2, 3),
                        make_dihedral(4), make_dihedral(8), make_dihedral(20), make_symmetric(3), make_symmetric(4)}) {
    const auto r = verify_group_axioms(g);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  }
}

TEST(Axioms, CorruptedEntryBreaksAssociativity) {
  auto table = make_dihedral(8).table();
  table[1][1] = 3;  // a*a := a^3
  const FiniteGroup broken(table, {1, 4});
  const auto r = verify_group_axioms(broken);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.associativity);
  EXPECT_TRUE(r.identity);
}

TEST(Axioms, NonGeneratingSetReported) {
  const auto z6 = make_cyclic(6);
  const FiniteGroup g(z6.table(), {2});
  const auto r = verify_group_axioms(g);
  EXPECT_FALSE(r.generators);
  EXPECT_TRUE(r.associativity);
}

TEST(Families, OrdersAndCommutativity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    const auto s = make_symmetric(n);
    EXPECT_EQ(s.order(), fact);
    EXPECT_EQ(s.is_abelian(), n <= 2);
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto d = make_dihedral(2 * n);
    EXPECT_EQ(d.order(), 2 * n);
    EXPECT_EQ(d.is_abelian(), n <= 2);
  }
  EXPECT_EQ(make_elementary_abelian(3, 3).order(), 27u);
  EXPECT_EQ(make_elementary_abelian(5, 2).order(), 25u);
}

TEST(GroupSpec, ParsesAndPrints) {
  for (const char* text : {"cyclic:12", "elemab:2^2", "dihedral:8", "symmetric:3"})
    EXPECT_EQ(parse_group_spec(text).to_string(), text);
  EXPECT_EQ(parse_group_spec("elemab:3^2"), GroupSpec::elemab(3, 2));
  EXPECT_THROW(parse_group_spec("cyclic"), InvalidInput);
  EXPECT_THROW(parse_group_spec("cyclic:x"), InvalidInput);
  EXPECT_THROW(parse_group_spec("cyclic:-3"), InvalidInput);
  EXPECT_THROW(parse_group_spec("elemab:4"), InvalidInput);
  EXPECT_THROW(parse_group_spec("quaternion:8"), InvalidInput);
  EXPECT_EQ(make_group(parse_group_spec("dihedral:8")), make_dihedral(8));
}
