#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "fuzzsg/core.hpp"
#include "fuzzsg/group.hpp"

namespace fuzzsg {

struct PrimePower {
  std::size_t prime = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// p_1^m_1 ... p_s^m_s with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

inline Factorization factorize(std::size_t n) {
  require(n >= 1, "cannot factorize 0");
  Factorization f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.multiplicity;
    }
    f.push_back(pp);
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline BigInt euler_phi(std::size_t n) {
  BigInt phi = 1;
  for (const auto& [p, m] : factorize(n)) {
    phi *= p - 1;
    for (std::size_t i = 1; i < m; ++i) phi *= p;
  }
  return phi;
}

inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (long long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// h(Z_n) from the factorization n = p_1^m_1 ... p_s^m_s:
//
//   2^(m_1+...+m_s) * sum_{i_2=0..m_2} ... sum_{i_s=0..m_s}
//       (-1/2)^(i_2+...+i_s) * prod_{a=2..s} C(m_a, i_a) C(m_1 + sum_{b=2..a} (m_b - i_b), m_a)
//
// The nested sums collapse to 1 when s = 1. Only the multiplicities enter.
inline BigInt h_cyclic_formula(const Factorization& f) {
  require(!f.empty(), "h_cyclic_formula needs n >= 2");
  const std::size_t s = f.size();
  long long total_m = 0;
  for (const auto& pp : f) total_m += static_cast<long long>(pp.multiplicity);

  const Rational minus_half(-1, 2);
  Rational sum = 0;
  // depth walks alpha = 2..s (0-based 1..s-1); `partial` is m_1 + sum_{b<=alpha} (m_b - i_b).
  std::function<void(std::size_t, long long, Rational)> nest = [&](std::size_t depth, long long partial,
                                                                   Rational term) {
    if (depth == s) {
      sum += term;
      return;
    }
    const long long m = static_cast<long long>(f[depth].multiplicity);
    Rational sign = 1;
    for (long long i = 0; i <= m; ++i, sign *= minus_half) {
      const long long next_partial = partial + (m - i);
      nest(depth + 1, next_partial,
           term * sign * Rational(binomial(m, i)) * Rational(binomial(next_partial, m)));
    }
  };
  nest(1, static_cast<long long>(f[0].multiplicity), Rational(1));

  Rational value = sum;
  for (long long i = 0; i < total_m; ++i) value *= 2;
  if (denominator(value) != 1 || numerator(value) <= 0)
    throw ConsistencyError("h(Z_n) closed form did not evaluate to a positive integer");
  return numerator(value);
}

/// h(D_{2p^m}) = 2^m (p^(m+1) + p - 2) / (p - 1).
inline BigInt h_dihedral_2pm(std::size_t p, std::size_t m) {
  require(detail::is_prime(p), "h_dihedral_2pm needs a prime p");
  require(m >= 1, "h_dihedral_2pm needs m >= 1");
  BigInt bracket = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m + 1)) + p - 2;
  BigInt scaled = bracket << m;
  if (scaled % (p - 1) != 0) throw ConsistencyError("h(D_2p^m) closed form is not integral");
  return scaled / (p - 1);
}

/// |Aut(G)| from the family formulas: phi(n), prod (p^k - p^i), n phi(n), n! (2*6! for n = 6).
inline BigInt aut_order_formula(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::cyclic:
      require(spec.a >= 1, "cyclic order must be at least 1");
      return euler_phi(spec.a);
    case Family::elementary_abelian: {
      require(detail::is_prime(spec.a) && spec.b >= 1, "elemab needs prime p and k >= 1");
      const BigInt pk = boost::multiprecision::pow(BigInt(spec.a), static_cast<unsigned>(spec.b));
      BigInt prod = 1, pi = 1;
      for (std::size_t i = 0; i < spec.b; ++i, pi *= spec.a) prod *= pk - pi;
      return prod;
    }
    case Family::dihedral: {
      require(spec.a % 2 == 0, "dihedral order must be even");
      const std::size_t n = spec.a / 2;
      if (n < 3) throw UnsupportedFamily("|Aut(D_2n)| = n phi(n) needs n >= 3");
      return BigInt(n) * euler_phi(n);
    }
    case Family::symmetric:
      if (spec.a < 3) throw UnsupportedFamily("|Aut(S_n)| formula needs n >= 3");
      return spec.a == 6 ? 2 * factorial(6) : factorial(spec.a);
  }
  throw InvalidInput("unknown group family");
}

}  // namespace fuzzsg
