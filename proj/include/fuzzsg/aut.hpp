#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fuzzsg/core.hpp"
#include "fuzzsg/element_set.hpp"
#include "fuzzsg/formulas.hpp"
#include "fuzzsg/group.hpp"
#include "fuzzsg/lattice.hpp"

namespace fuzzsg {

// An automorphism as the image of every element index. `label` carries the
// family parameterization when one is known (d, (alpha,beta), matrix, sigma).
struct Automorphism {
  std::vector<Elem> perm;
  std::string label;

  Elem operator()(Elem x) const { return perm[x]; }
  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) return false;
    return true;
  }
  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.perm == b.perm; }
  friend bool operator<(const Automorphism& a, const Automorphism& b) { return a.perm < b.perm; }
};

/// (f o g)(x) = f(g(x)).
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  out.perm.resize(g.perm.size());
  for (std::size_t x = 0; x < g.perm.size(); ++x) out.perm[x] = f.perm[g.perm[x]];
  return out;
}

inline Automorphism inverse(const Automorphism& f) {
  Automorphism out;
  out.perm.resize(f.perm.size());
  for (std::size_t x = 0; x < f.perm.size(); ++x) out.perm[f.perm[x]] = static_cast<Elem>(x);
  return out;
}

inline bool is_automorphism(const FiniteGroup& g, const std::vector<Elem>& perm) {
  const auto n = g.order();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n);
  for (Elem y : perm) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
  return true;
}

// Aut(G) as a list sorted lexicographically by permutation.
class AutGroup {
 public:
  AutGroup() = default;
  explicit AutGroup(std::vector<Automorphism> maps) : maps_(std::move(maps)) {
    std::sort(maps_.begin(), maps_.end());
    maps_.erase(std::unique(maps_.begin(), maps_.end()), maps_.end());
  }

  std::size_t size() const { return maps_.size(); }
  const Automorphism& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<Automorphism>& maps() const { return maps_; }
  auto begin() const { return maps_.begin(); }
  auto end() const { return maps_.end(); }

  /// Same permutation set, labels ignored.
  bool same_maps(const AutGroup& other) const { return maps_ == other.maps_; }

  bool contains(const Automorphism& f) const { return std::binary_search(maps_.begin(), maps_.end(), f); }

  bool is_closed() const {
    if (maps_.empty() || !maps_.front().is_identity()) return false;
    for (const auto& f : maps_) {
      if (!contains(inverse(f))) return false;
      for (const auto& g : maps_)
        if (!contains(compose(f, g))) return false;
    }
    return true;
  }

 private:
  std::vector<Automorphism> maps_;
};

namespace detail {

inline void check_aut_cap(std::size_t count, const Limits& lim) {
  if (count > lim.max_automorphisms)
    throw ResourceError("more than " + std::to_string(lim.max_automorphisms) +
                        " automorphisms (--max-automorphisms)");
}

}  // namespace detail

// Backtracking over generator images. Candidates for the image of a generator
// share its element order and centralizer size. After each choice the partial
// map is grown over the subgroup generated so far along Cayley-graph edges
// y -> y*g, and rejected as soon as an edge disagrees or two elements collide.
// Agreement on every edge makes the final map a homomorphism.
inline AutGroup enumerate_automorphisms(const FiniteGroup& g, const Limits& lim = {}) {
  detail::check_cap(g.order(), lim, "group");
  const auto n = g.order();
  const auto& gens = g.generators();
  const Elem unset = static_cast<Elem>(n);

  std::vector<std::size_t> ord(n), cent(n);
  for (Elem x = 0; x < n; ++x) {
    ord[x] = g.element_order(x);
    cent[x] = g.centralizer_size(x);
  }
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem x = 0; x < n; ++x)
      if (ord[x] == ord[gens[j]] && cent[x] == cent[gens[j]]) candidates[j].push_back(x);

  std::vector<Elem> image(gens.size());
  std::vector<Automorphism> found;

  // Grows perm over <gens[0..depth]>; false on conflict.
  auto extend = [&](std::size_t depth, std::vector<Elem>& perm) -> bool {
    std::fill(perm.begin(), perm.end(), unset);
    std::vector<bool> used(n);
    perm[g.identity()] = g.identity();
    used[g.identity()] = true;
    std::vector<Elem> frontier{g.identity()};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem y : frontier)
        for (std::size_t j = 0; j <= depth; ++j) {
          const Elem z = g.mul(y, gens[j]);
          const Elem fz = g.mul(perm[y], image[j]);
          if (perm[z] == unset) {
            if (used[fz]) return false;
            used[fz] = true;
            perm[z] = fz;
            next.push_back(z);
          } else if (perm[z] != fz) {
            return false;
          }
        }
      frontier = std::move(next);
    }
    return true;
  };

  std::vector<Elem> perm(n);
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    for (Elem c : candidates[depth]) {
      image[depth] = c;
      if (!extend(depth, perm)) continue;
      if (depth + 1 < gens.size()) {
        search(depth + 1);
      } else {
        detail::check_aut_cap(found.size() + 1, lim);
        std::string label;
        for (std::size_t j = 0; j < gens.size(); ++j)
          label += (j ? ", " : "") + g.label(gens[j]) + "->" + g.label(image[j]);
        found.push_back({perm, std::move(label)});
      }
    }
  };
  search(0);
  return AutGroup(std::move(found));
}

/// Aut(Z_n) = { k -> dk : gcd(d, n) = 1 }.
inline AutGroup aut_cyclic(std::size_t n) {
  require(n >= 1, "cyclic group order must be at least 1");
  std::vector<Automorphism> maps;
  for (std::size_t d = n == 1 ? 0 : 1; d < std::max<std::size_t>(n, 1); ++d) {
    if (std::gcd(d, n) != 1) continue;
    Automorphism f{std::vector<Elem>(n), "d=" + std::to_string(d)};
    for (std::size_t k = 0; k < n; ++k) f.perm[k] = static_cast<Elem>((d * k) % n);
    maps.push_back(std::move(f));
  }
  return AutGroup(std::move(maps));
}

/// f_{alpha,beta}(a^i) = a^(alpha i), f_{alpha,beta}(a^i b) = a^(alpha i + beta) b.
inline Automorphism dihedral_automorphism(std::size_t order, std::size_t alpha, std::size_t beta) {
  const std::size_t n = order / 2;
  Automorphism f{std::vector<Elem>(order),
                 "(alpha,beta)=(" + std::to_string(alpha) + "," + std::to_string(beta) + ")"};
  for (std::size_t i = 0; i < n; ++i) {
    f.perm[i] = static_cast<Elem>((alpha * i) % n);
    f.perm[n + i] = static_cast<Elem>(n + (alpha * i + beta) % n);
  }
  return f;
}

inline AutGroup aut_dihedral(std::size_t order) {
  require(order >= 4 && order % 2 == 0, "dihedral order must be even and at least 4");
  const std::size_t n = order / 2;
  if (n < 3)
    throw UnsupportedFamily("the (alpha,beta) parameterization needs n >= 3; use the generic search for dihedral:4");
  std::vector<Automorphism> maps;
  for (std::size_t alpha = 1; alpha < n; ++alpha) {
    if (std::gcd(alpha, n) != 1) continue;
    for (std::size_t beta = 0; beta < n; ++beta) maps.push_back(dihedral_automorphism(order, alpha, beta));
  }
  return AutGroup(std::move(maps));
}

namespace detail {

/// Rank of a k x k matrix over F_p given as column vectors.
inline std::size_t rank_mod_p(std::vector<std::vector<std::size_t>> cols, std::size_t p) {
  if (cols.empty()) return 0;
  const std::size_t k = cols.front().size();
  std::size_t rank = 0;
  for (std::size_t row = 0; row < k && rank < cols.size(); ++row) {
    std::size_t pivot = rank;
    while (pivot < cols.size() && cols[pivot][row] == 0) ++pivot;
    if (pivot == cols.size()) continue;
    std::swap(cols[pivot], cols[rank]);
    std::size_t inv = 1;
    while ((cols[rank][row] * inv) % p != 1) ++inv;
    for (auto& v : cols[rank]) v = (v * inv) % p;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == rank || cols[c][row] == 0) continue;
      const std::size_t factor = cols[c][row];
      for (std::size_t r = 0; r < k; ++r) cols[c][r] = (cols[c][r] + (p - factor) * cols[rank][r]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Automorphisms induced by GL(k, p) acting on column vectors: v -> A v, where
// v holds the digits of an element index (coordinate 0 least significant).
// Matrices are built column by column, each column outside the span of the
// previous ones.
inline AutGroup aut_elementary_abelian(std::size_t p, std::size_t k, const Limits& lim = {}) {
  require(detail::is_prime(p), "elementary abelian group needs a prime p");
  require(k >= 1, "elementary abelian rank must be at least 1");
  const auto order = detail::bounded_power(p, k, lim.max_order);
  if (!order) throw ResourceError("elementary abelian group exceeds --max-order");
  const BigInt gl_order = aut_order_formula(GroupSpec::elemab(p, k));
  if (gl_order > lim.max_automorphisms)
    throw ResourceError("|GL(" + std::to_string(k) + "," + std::to_string(p) + ")| = " + gl_order.str() +
                        " exceeds --max-automorphisms " + std::to_string(lim.max_automorphisms));
  const std::size_t n = *order;

  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t j = 0; j < k; ++j, x /= p) d[j] = x % p;
    return d;
  };
  std::vector<std::vector<std::size_t>> vectors(n);
  for (std::size_t x = 0; x < n; ++x) vectors[x] = digits(x);

  std::vector<Automorphism> maps;
  std::vector<std::vector<std::size_t>> cols;
  std::function<void()> build = [&]() {
    if (cols.size() == k) {
      Automorphism f{std::vector<Elem>(n), "A=["};
      for (std::size_t r = 0; r < k; ++r) {
        f.label += r ? ",[" : "[";
        for (std::size_t c = 0; c < k; ++c) f.label += (c ? "," : "") + std::to_string(cols[c][r]);
        f.label += "]";
      }
      f.label += "]";
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = 0, place = 1;
        for (std::size_t r = 0; r < k; ++r, place *= p) {
          std::size_t s = 0;
          for (std::size_t c = 0; c < k; ++c) s += cols[c][r] * vectors[x][c];
          y += (s % p) * place;
        }
        f.perm[x] = static_cast<Elem>(y);
      }
      maps.push_back(std::move(f));
      return;
    }
    for (std::size_t x = 1; x < n; ++x) {
      cols.push_back(vectors[x]);
      if (detail::rank_mod_p(cols, p) == cols.size()) build();
      cols.pop_back();
    }
  };
  build();
  return AutGroup(std::move(maps));
}

/// Conjugations f_x(g) = x g x^-1, one per coset of the center.
inline AutGroup inner_automorphisms(const FiniteGroup& g) {
  std::vector<Automorphism> maps;
  std::vector<std::vector<Elem>> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    Automorphism f{std::vector<Elem>(g.order()), "sigma=" + g.label(x)};
    for (Elem y = 0; y < g.order(); ++y) f.perm[y] = g.conjugate(x, y);
    if (std::find(seen.begin(), seen.end(), f.perm) != seen.end()) continue;
    seen.push_back(f.perm);
    maps.push_back(std::move(f));
  }
  return AutGroup(std::move(maps));
}

inline Subgroup apply_to_subgroup(const Automorphism& f, const Subgroup& h) {
  ElementSet image(h.members.universe());
  h.members.for_each([&](Elem x) { image.insert(f(x)); });
  return {std::move(image)};
}

/// Lattice indices of the subgroups with f(H) = H.
inline ElementSet invariant_subgroups(const Automorphism& f, const SubgroupLattice& lat) {
  ElementSet fixed(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (apply_to_subgroup(f, lat[i]).members == lat[i].members) fixed.insert(static_cast<Elem>(i));
  return fixed;
}

/// f applied entrywise; f maps chains to chains because it preserves inclusion.
inline Chain apply_to_chain(const Automorphism& f, const SubgroupLattice& lat, const Chain& c) {
  Chain out;
  out.subgroups.reserve(c.length());
  for (auto i : c.subgroups) {
    auto j = lat.index_of(apply_to_subgroup(f, lat[i]).members);
    if (!j) throw ConsistencyError("automorphism image of a subgroup is missing from the lattice");
    out.subgroups.push_back(*j);
  }
  return out;
}

// Closed-form test for H^r_i in Fix(f_{alpha,beta}) on D_{2n}, where
// H^r_0 = <a^(n/r)> and H^r_i = <a^(n/r), a^(i-1) b> for 1 <= i <= n/r.
// The gcd(alpha, r) condition is redundant once gcd(alpha, n) = 1 but is
// evaluated as stated.
inline bool dihedral_fix_predicate(std::size_t order, std::size_t alpha, std::size_t beta, std::size_t r,
                                   std::size_t i) {
  require(order >= 4 && order % 2 == 0, "dihedral order must be even and at least 4");
  const std::size_t n = order / 2;
  require(r >= 1 && n % r == 0, "r must divide n");
  require(alpha < n && std::gcd(alpha, n) == 1, "alpha must be a unit mod n");
  require(beta < n, "beta must lie in 0..n-1");
  require(i <= n / r, "i must lie in 0..n/r");
  if (std::gcd(alpha, r) != 1) return false;
  if (i == 0) return true;
  const long long shift = static_cast<long long>(alpha - 1) * static_cast<long long>(i - 1) + static_cast<long long>(beta);
  return shift % static_cast<long long>(n / r) == 0;
}

/// Members of H^r_i in make_dihedral's indexing (i = 0 gives the cyclic H^r_0).
inline Subgroup dihedral_subgroup(std::size_t order, std::size_t r, std::size_t i) {
  const std::size_t n = order / 2;
  require(r >= 1 && n % r == 0 && i <= n / r, "H^r_i needs r | n and i <= n/r");
  const std::size_t step = n / r;
  ElementSet members(order);
  for (std::size_t k = 0; k < r; ++k) {
    members.insert(static_cast<Elem>(k * step));
    if (i > 0) members.insert(static_cast<Elem>(n + (k * step + i - 1) % n));
  }
  return {std::move(members)};
}

}  // namespace fuzzsg
