#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzsg/core.hpp"
#include "fuzzsg/element_set.hpp"

namespace fuzzsg {

// A finite group given by its full multiplication table over dense indices.
// Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<Elem>> table, std::vector<Elem> generators,
              std::vector<std::string> labels = {})
      : table_(std::move(table)), generators_(std::move(generators)), labels_(std::move(labels)) {
    require(!table_.empty(), "group table must be nonempty");
    const auto n = table_.size();
    for (const auto& row : table_) require(row.size() == n, "group table must be square");
    require(!generators_.empty(), "generating set must be nonempty");
    require(labels_.empty() || labels_.size() == n, "one label per element required");

    identity_ = static_cast<Elem>(n);
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) identity_ = static_cast<Elem>(e);
    }
    require(identity_ < n, "group table has no identity");
    inverses_.assign(n, static_cast<Elem>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (table_[x][y] == identity_) {
          inverses_[x] = static_cast<Elem>(y);
          break;
        }
  }

  std::size_t order() const { return table_.size(); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  /// Missing inverses (malformed tables) are reported as order().
  Elem inverse(Elem x) const { return inverses_[x]; }
  Elem conjugate(Elem x, Elem g) const { return mul(mul(x, g), inverse(x)); }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  std::string label(Elem x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(std::string_view name) const {
    for (std::size_t i = 0; i < order(); ++i)
      if (label(static_cast<Elem>(i)) == name) return static_cast<Elem>(i);
    return std::nullopt;
  }

  std::size_t element_order(Elem x) const {
    std::size_t k = 1;
    for (Elem y = x; y != identity_; y = mul(y, x)) {
      if (++k > order()) return 0;
    }
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a + 1; b < order(); ++b)
        if (table_[a][b] != table_[b][a]) return false;
    return true;
  }

  std::vector<Elem> center() const {
    std::vector<Elem> z;
    for (std::size_t a = 0; a < order(); ++a) {
      bool central = true;
      for (std::size_t b = 0; b < order() && central; ++b) central = table_[a][b] == table_[b][a];
      if (central) z.push_back(static_cast<Elem>(a));
    }
    return z;
  }

  std::size_t centralizer_size(Elem x) const {
    std::size_t c = 0;
    for (std::size_t b = 0; b < order(); ++b) c += table_[x][b] == table_[b][x];
    return c;
  }

  /// Subgroup generated by `gens` (the identity alone when empty).
  ElementSet closure(const std::vector<Elem>& gens) const {
    ElementSet set(order());
    set.insert(identity_);
    std::vector<Elem> frontier{identity_};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem x : frontier)
        for (Elem g : gens) {
          const Elem y = mul(x, g);
          if (!set.contains(y)) {
            set.insert(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return set;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<Elem>> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverses_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

enum class Family { cyclic, elementary_abelian, dihedral, symmetric };

// Canonical key for a group instance. `a` is n (cyclic, symmetric), the order
// 2n (dihedral) or p (elementary abelian); `b` is k for elementary abelian.
struct GroupSpec {
  Family family = Family::cyclic;
  std::size_t a = 1;
  std::size_t b = 0;

  static GroupSpec cyclic(std::size_t n) { return {Family::cyclic, n, 0}; }
  static GroupSpec elemab(std::size_t p, std::size_t k) { return {Family::elementary_abelian, p, k}; }
  static GroupSpec dihedral(std::size_t order) { return {Family::dihedral, order, 0}; }
  static GroupSpec symmetric(std::size_t n) { return {Family::symmetric, n, 0}; }

  std::string to_string() const {
    switch (family) {
      case Family::cyclic: return "cyclic:" + std::to_string(a);
      case Family::elementary_abelian: return "elemab:" + std::to_string(a) + "^" + std::to_string(b);
      case Family::dihedral: return "dihedral:" + std::to_string(a);
      case Family::symmetric: return "symmetric:" + std::to_string(a);
    }
    return {};
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end)
    throw InvalidInput("bad number '" + std::string(s) + "' in group spec '" + std::string(whole) + "'");
  return v;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// p^k, or nullopt once it passes `cap`.
inline std::optional<std::size_t> bounded_power(std::size_t p, std::size_t k, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > cap / p) return std::nullopt;
    v *= p;
  }
  return v;
}

inline void check_cap(std::size_t order, const Limits& lim, const std::string& what) {
  if (order > lim.max_order)
    throw ResourceError(what + " has order " + std::to_string(order) + ", above --max-order " +
                        std::to_string(lim.max_order));
}

}  // namespace detail

/// Parses `cyclic:<n>`, `elemab:<p>^<k>`, `dihedral:<order>`, `symmetric:<n>`.
inline GroupSpec parse_group_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidInput("group spec '" + std::string(text) + "' must look like family:params");
  const auto family = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (family == "cyclic") return GroupSpec::cyclic(detail::parse_size(rest, text));
  if (family == "dihedral") return GroupSpec::dihedral(detail::parse_size(rest, text));
  if (family == "symmetric") return GroupSpec::symmetric(detail::parse_size(rest, text));
  if (family == "elemab") {
    const auto caret = rest.find('^');
    if (caret == std::string_view::npos)
      throw InvalidInput("elemab spec '" + std::string(text) + "' must look like elemab:<p>^<k>");
    return GroupSpec::elemab(detail::parse_size(rest.substr(0, caret), text),
                             detail::parse_size(rest.substr(caret + 1), text));
  }
  throw InvalidInput("unknown group family '" + std::string(family) + "'");
}

/// Z_n; element i is the residue i.
inline FiniteGroup make_cyclic(std::size_t n, const Limits& lim = {}) {
  require(n >= 1, "cyclic group order must be at least 1");
  detail::check_cap(n, lim, "cyclic:" + std::to_string(n));
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroup(std::move(table), {n == 1 ? Elem{0} : Elem{1}}, std::move(labels));
}

// Z_p^k as base-p digit vectors: index = sum_j digit_j * p^j, so coordinate 0
// is the least significant digit and the j-th unit vector is p^j.
inline FiniteGroup make_elementary_abelian(std::size_t p, std::size_t k, const Limits& lim = {}) {
  require(detail::is_prime(p), "elementary abelian group needs a prime p, got " + std::to_string(p));
  require(k >= 1, "elementary abelian rank must be at least 1");
  const auto order = detail::bounded_power(p, k, lim.max_order);
  if (!order)
    throw ResourceError("elemab:" + std::to_string(p) + "^" + std::to_string(k) + " exceeds --max-order " +
                        std::to_string(lim.max_order));
  const std::size_t n = *order;
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t j = 0; j < k; ++j, x /= p) d[j] = x % p;
    return d;
  };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::string lab = "(";
    for (std::size_t j = 0; j < k; ++j) lab += (j ? "," : "") + std::to_string(da[j]);
    labels[a] = lab + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::size_t c = 0, place = 1;
      for (std::size_t j = 0; j < k; ++j, place *= p) c += ((da[j] + db[j]) % p) * place;
      table[a][b] = static_cast<Elem>(c);
    }
  }
  std::vector<Elem> gens;
  for (std::size_t j = 0, place = 1; j < k; ++j, place *= p) gens.push_back(static_cast<Elem>(place));
  return FiniteGroup(std::move(table), std::move(gens), std::move(labels));
}

// D_{2n} = <a, b | a^n = b^2 = 1, bab = a^-1>. Index i is a^i and index n+i
// is a^i b, for i in 0..n-1.
inline FiniteGroup make_dihedral(std::size_t order, const Limits& lim = {}) {
  require(order >= 4 && order % 2 == 0, "dihedral order must be even and at least 4, got " + std::to_string(order));
  detail::check_cap(order, lim, "dihedral:" + std::to_string(order));
  const std::size_t n = order / 2;
  auto encode = [n](std::size_t i, bool refl) { return static_cast<Elem>((refl ? n : 0) + i % n); };
  std::vector<std::vector<Elem>> table(order, std::vector<Elem>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n;
    const bool xr = x >= n;
    const std::string rot = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
    labels[x] = xr ? rot + "b" : (i == 0 ? "1" : rot);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n;
      const bool yr = y >= n;
      // a^i b^s * a^j b^t = a^(i + (-1)^s j) b^(s+t)
      const std::size_t exp = xr ? i + n - j : i + j;
      table[x][y] = encode(exp, xr != yr);
    }
  }
  return FiniteGroup(std::move(table), {encode(1, false), encode(0, true)}, std::move(labels));
}

namespace detail {

inline std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      out += (x == s ? "" : " ") + std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace detail

// S_n over the points {1..n}. Elements are the n! permutations in
// lexicographic rank order of their one-line images (index 0 is the
// identity). Products apply the right factor first: (st)(x) = s(t(x)).
inline FiniteGroup make_symmetric(std::size_t n, const Limits& lim = {}) {
  require(n >= 1, "symmetric degree must be at least 1");
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (fact > lim.max_order / i)
      throw ResourceError("symmetric:" + std::to_string(n) + " exceeds --max-order " + std::to_string(lim.max_order));
    fact *= i;
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto rank = [&](const std::vector<std::size_t>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Elem>> table(fact, std::vector<Elem>(fact));
  std::vector<std::string> labels(fact);
  std::vector<std::size_t> prod(n);
  for (std::size_t s = 0; s < fact; ++s) {
    labels[s] = detail::cycle_notation(perms[s]);
    for (std::size_t t = 0; t < fact; ++t) {
      for (std::size_t x = 0; x < n; ++x) prod[x] = perms[s][perms[t][x]];
      table[s][t] = rank(prod);
    }
  }
  std::vector<Elem> gens;
  if (n >= 2) {
    std::vector<std::size_t> transposition(n), rotation(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (std::size_t x = 0; x < n; ++x) rotation[x] = (x + 1) % n;
    gens.push_back(rank(transposition));
    if (n > 2) gens.push_back(rank(rotation));
  } else {
    gens.push_back(0);
  }
  return FiniteGroup(std::move(table), std::move(gens), std::move(labels));
}

inline FiniteGroup make_group(const GroupSpec& spec, const Limits& lim = {}) {
  switch (spec.family) {
    case Family::cyclic: return make_cyclic(spec.a, lim);
    case Family::elementary_abelian: return make_elementary_abelian(spec.a, spec.b, lim);
    case Family::dihedral: return make_dihedral(spec.a, lim);
    case Family::symmetric: return make_symmetric(spec.a, lim);
  }
  throw InvalidInput("unknown group family");
}

struct AxiomReport {
  bool identity = true;
  bool inverses = true;
  bool associativity = true;
  bool generators = true;
  std::vector<std::string> failures;

  bool ok() const { return identity && inverses && associativity && generators; }
};

/// Checks identity, inverses, associativity and generator closure; never throws.
inline AxiomReport verify_group_axioms(const FiniteGroup& g) {
  AxiomReport r;
  const auto n = g.order();
  const auto e = g.identity();
  for (std::size_t x = 0; x < n; ++x) {
    if (g.table()[x].size() != n) {
      r.identity = r.inverses = r.associativity = false;
      r.failures.push_back("row " + std::to_string(x) + " has wrong width");
      return r;
    }
    for (Elem v : g.table()[x]) {
      if (v >= n) {
        r.associativity = false;
        r.failures.push_back("row " + std::to_string(x) + " holds out-of-range entry");
        return r;
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) {
      r.identity = false;
      r.failures.push_back("identity fails at " + std::to_string(x));
      break;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    const Elem inv = g.inverse(x);
    if (inv >= n || g.mul(x, inv) != e || g.mul(inv, x) != e) {
      r.inverses = false;
      r.failures.push_back("no two-sided inverse for " + std::to_string(x));
      break;
    }
  }
  for (Elem a = 0; a < n && r.associativity; ++a)
    for (Elem b = 0; b < n && r.associativity; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          r.associativity = false;
          r.failures.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
          break;
        }
  for (Elem x : g.generators()) {
    if (x >= n) {
      r.generators = false;
      r.failures.push_back("generator index out of range");
      return r;
    }
  }
  if (g.closure(g.generators()).size() != n) {
    r.generators = false;
    r.failures.push_back("generators do not generate the group");
  }
  return r;
}

}  // namespace fuzzsg
