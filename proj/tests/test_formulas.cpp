#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "fuzzsg/formulas.hpp"

using namespace fuzzsg;

namespace {

// Chains of divisors ending at n, by explicit depth-first enumeration.
std::size_t divisor_chains_below(std::size_t top) {
  std::size_t count = 1;  // the chain that stops at `top`
  for (std::size_t d = 1; d < top; ++d)
    if (top % d == 0) count += divisor_chains_below(d);
  return count;
}

std::size_t phi_by_gcd_scan(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(360), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(97), (Factorization{{97, 1}}));
  EXPECT_THROW(factorize(0), InvalidInput);
}

TEST(Factorize, ReconstructsN) {
  for (std::size_t n = 1; n <= 2000; ++n) {
    std::size_t prod = 1, last = 0;
    for (const auto& [p, m] : factorize(n)) {
      EXPECT_GT(p, last);
      EXPECT_GE(m, 1u);
      last = p;
      for (std::size_t i = 0; i < m; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(4), 2);
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  for (std::size_t n = 1; n <= 500; ++n) EXPECT_EQ(euler_phi(n), phi_by_gcd_scan(n)) << n;
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(3, 1), 3);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(HCyclicFormula, PrimePowerIsTwoToTheM) {
  EXPECT_EQ(h_cyclic_formula(factorize(8)), 8);
  EXPECT_EQ(h_cyclic_formula(factorize(2)), 2);
  for (std::size_t p : {2u, 3u, 5u, 7u})
    for (std::size_t m = 1, pm = p; pm <= 100000; ++m, pm *= p)
      EXPECT_EQ(h_cyclic_formula(factorize(pm)), BigInt(1) << m);
}

TEST(HCyclicFormula, TwelveIsSixteen) { EXPECT_EQ(h_cyclic_formula(factorize(12)), 16); }

TEST(HCyclicFormula, MatchesDivisorChainEnumeration) {
  for (std::size_t n = 2; n <= 400; ++n) EXPECT_EQ(h_cyclic_formula(factorize(n)), divisor_chains_below(n)) << n;
}

TEST(HCyclicFormula, DependsOnlyOnMultiplicities) {
  std::vector<std::size_t> ms{3, 1, 2, 1};
  std::sort(ms.begin(), ms.end());
  const std::vector<std::size_t> primes{2, 3, 5, 7};
  std::optional<BigInt> first;
  do {
    Factorization f;
    for (std::size_t i = 0; i < ms.size(); ++i) f.push_back({primes[i], ms[i]});
    const auto v = h_cyclic_formula(f);
    if (!first) first = v;
    EXPECT_EQ(v, *first);
  } while (std::next_permutation(ms.begin(), ms.end()));
  // and the primes themselves never enter
  EXPECT_EQ(h_cyclic_formula({{11, 2}, {13, 1}}), h_cyclic_formula(factorize(12)));
}

TEST(HCyclicFormula, RejectsEmptyFactorization) { EXPECT_THROW(h_cyclic_formula({}), InvalidInput); }

TEST(HDihedral, Examples) {
  EXPECT_EQ(h_dihedral_2pm(2, 2), 32);  // D8
  EXPECT_EQ(h_dihedral_2pm(3, 1), 10);
  EXPECT_EQ(h_dihedral_2pm(5, 1), 14);
  // order 2^(m+1) gives 2^(2(m+1)-1)
  for (std::size_t m = 1; m <= 10; ++m) EXPECT_EQ(h_dihedral_2pm(2, m), BigInt(1) << (2 * m + 1));
  EXPECT_THROW(h_dihedral_2pm(4, 1), InvalidInput);
  EXPECT_THROW(h_dihedral_2pm(3, 0), InvalidInput);
}

TEST(AutOrderFormula, Examples) {
  EXPECT_EQ(aut_order_formula(GroupSpec::elemab(2, 2)), 6);
  EXPECT_EQ(aut_order_formula(GroupSpec::dihedral(8)), 8);
  EXPECT_EQ(aut_order_formula(GroupSpec::symmetric(6)), 1440);
  EXPECT_EQ(aut_order_formula(GroupSpec::symmetric(5)), 120);
  EXPECT_EQ(aut_order_formula(GroupSpec::cyclic(12)), 4);
  EXPECT_EQ(aut_order_formula(GroupSpec::elemab(2, 3)), 168);
  EXPECT_THROW(aut_order_formula(GroupSpec::dihedral(4)), UnsupportedFamily);
  EXPECT_THROW(aut_order_formula(GroupSpec::symmetric(2)), UnsupportedFamily);
  EXPECT_THROW(aut_order_formula(GroupSpec::elemab(6, 2)), InvalidInput);
}
