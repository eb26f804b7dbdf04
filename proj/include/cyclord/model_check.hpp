#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "correspondence.hpp"
#include "mv_algebra.hpp"
#include "mv_structure.hpp"
#include "pco.hpp"

namespace cyclord {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::optional<int> prime_power_base(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int t = q;
    while (t % p == 0) t /= p;
    if (t == 1) return p;
    if (q % p == 0) return std::nullopt;
  }
  return std::nullopt;
}

struct CoPredicates {
  bool c_archimedean = false;
  bool discrete = false;
  bool c_regular = false;
  std::optional<int> eps;  // least positive element, when one exists
};

namespace detail {

inline std::vector<int> co_order(const FinitePco& c) {
  std::vector<int> order(c.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return x != y && c.leq0(x, y); });
  return order;
}

/// Chain condition x <_0 2x <_0 ... <_0 mx on the multiples of x.
inline bool multiples_increase(const FinitePco& c, int x, int m) {
  int prev = x;
  for (int k = 2; k <= m; ++k) {
    const int next = c.add[prev][x];
    if (!c.rel(c.zero, prev, next)) return false;
    prev = next;
  }
  return x != c.zero;
}

}  // namespace detail

/// First-order predicates of a finite cyclically ordered group, decided
/// exactly: the regularity quantifier over tuple lengths is closed off at
/// |C| - 1 because longer strictly increasing tuples do not exist, and only
/// the endpoints of a tuple matter once enough elements lie between them.
inline CoPredicates co_predicates(const FinitePco& c) {
  if (!check_pco_axioms(c).is_co) throw std::domain_error("co_predicates requires a cyclically ordered group");
  CoPredicates p;
  const std::vector<int> order = detail::co_order(c);

  p.c_archimedean = true;
  for (int x = 0; x < c.size && p.c_archimedean; ++x) {
    if (x == c.zero) continue;
    for (int y = 0; y < c.size; ++y) {
      if (y == c.zero) continue;
      bool found = false;
      int acc = c.zero;
      for (int n = 1; n <= c.size && !found; ++n) {
        acc = c.add[acc][x];
        if (!c.rel(c.zero, acc, y)) found = true;
      }
      if (!found) { p.c_archimedean = false; break; }
    }
  }

  p.discrete = true;  // a finite linear order is discretely ordered
  if (c.size > 1) p.eps = order[1];

  p.c_regular = true;
  for (int m = 2; m < c.size && p.c_regular; ++m)
    for (int i = 1; i < c.size && p.c_regular; ++i)
      for (int j = i + m - 1; j < c.size; ++j) {
        // endpoints a = order[i] <_0 b = order[j] admit an increasing
        // m-tuple; look for x with a <=_0 mx <=_0 b and increasing multiples
        const int a = order[i], b = order[j];
        bool found = false;
        for (int x = 0; x < c.size && !found; ++x) {
          if (!detail::multiples_increase(c, x, m)) continue;
          const int mx = c.nfold(x, m);
          if (c.leq0(a, mx) && c.leq0(mx, b)) found = true;
        }
        if (!found) { p.c_regular = false; break; }
      }
  return p;
}

/// The sentence D_{q,k}: some x has strictly increasing multiples
/// x, 2x, ..., (q-1)x and q*x = k*eps.  For q = 2 the order conjunct
/// degenerates to x != 0.
inline bool d_formula(const FinitePco& c, int q, int k) {
  if (!prime_power_base(q)) throw std::invalid_argument("q must be a prime power");
  if (k < 0 || k >= q) throw std::invalid_argument("k must satisfy 0 <= k < q");
  const std::vector<int> order = detail::co_order(c);
  const int target = c.size > 1 ? c.nfold(order[1], k) : c.zero;
  for (int x = 0; x < c.size; ++x) {
    if (x == c.zero) continue;
    if (q > 2 && !detail::multiples_increase(c, x, q - 1)) continue;
    if (c.nfold(x, q) == target) return true;
  }
  return false;
}

/// Chain reading of D_{q,k}, evaluated in the interpreted cyclically ordered
/// group on A \ {1}.
inline bool d_formula(const MvAlgebra& chain, int q, int k) {
  return d_formula(co_from_chain(chain), q, k);
}

/// Zakon's p-th prime invariant: the number of p-incongruent elements,
/// i.e. the index of pB in B.
inline int zakon_invariant(const FiniteGroup& b, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<char> hit(b.size, 0);
  int image = 0;
  for (int x = 0; x < b.size; ++x) {
    const int px = b.nfold(x, p);
    if (!hit[px]) { hit[px] = 1; ++image; }
  }
  return b.size / image;
}

/// Invariant factors d1 | d2 | ... | dk of a finite abelian group, computed
/// from the counts N(m) = #{x : mx = 0}.
inline std::vector<int> invariant_factors(const FiniteGroup& b) {
  if (b.size == 1) return {};
  auto count_killed = [&](int m) {
    int cnt = 0;
    for (int x = 0; x < b.size; ++x)
      if (b.nfold(x, m) == b.zero) ++cnt;
    return cnt;
  };
  // p-primary type: r_j cyclic factors have p-exponent >= j where
  // p^{r_j} = N(p^j)/N(p^{j-1})
  std::map<int, std::vector<int>> ppowers;  // prime -> exponents, descending
  int n = b.size;
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    while (n % p == 0) n /= p;
    std::vector<int> r;
    long long pj = 1;
    int prev = count_killed(1);
    while (true) {
      pj *= p;
      if (pj > b.size) break;
      const int cur = count_killed(static_cast<int>(pj));
      if (cur == prev && r.empty()) break;
      if (cur == prev) break;
      int ratio = cur / prev;
      int rj = 0;
      while (ratio > 1) { ratio /= p; ++rj; }
      r.push_back(rj);
      prev = cur;
    }
    // exponent-j factor count = r_j - r_{j+1}
    std::vector<int> exps;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const int next = j + 1 < r.size() ? r[j + 1] : 0;
      for (int t = 0; t < r[j] - next; ++t) exps.push_back(static_cast<int>(j) + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    std::vector<int> powers;
    for (int e : exps) {
      int v = 1;
      for (int t = 0; t < e; ++t) v *= p;
      powers.push_back(v);
    }
    ppowers[p] = powers;
  }
  std::size_t k = 0;
  for (const auto& [p, powers] : ppowers) k = std::max(k, powers.size());
  std::vector<int> factors(k, 1);
  for (const auto& [p, powers] : ppowers)
    for (std::size_t i = 0; i < powers.size(); ++i) factors[i] *= powers[i];
  std::sort(factors.begin(), factors.end());  // ascending divisibility chain
  return factors;
}

/// Torsion data of an MV-chain: the elements satisfying the chain formula
/// (some n with n.x = 1 and x^n = 0), the group-side cross-check through
/// C(A), and the invariant factors of that group.
struct ChainTorsion {
  std::vector<int> elements;        // chain-torsion elements, carrier indices
  bool zero_group_torsion = true;   // 0 is torsion in the group convention
  bool agrees_with_group = false;   // chain set = group torsion minus zero
  std::vector<int> invariant_factors;
};

inline std::vector<int> torsion_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.size);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

inline ChainTorsion torsion_subgroup(const MvAlgebra& a) {
  if (!a.is_chain()) throw std::domain_error("chain torsion requires a chain");
  ChainTorsion t;
  for (int x = 0; x < a.size; ++x) {
    bool one_reached = false, zero_reached = false;
    for (int n = 1; n <= a.size; ++n) {
      if (a.nfold_sum(x, n) == a.one) one_reached = true;
      if (a.nfold_prod(x, n) == a.zero) zero_reached = true;
    }
    if (one_reached && zero_reached) t.elements.push_back(x);
  }
  const FinitePco c = co_from_chain(a);
  t.invariant_factors = invariant_factors(c);
  // a finite group is all torsion; the chain formula must pick out exactly
  // the nonzero, non-top elements under the order identification
  const std::vector<int> order = chain_sorted(a);
  std::vector<int> expected;
  for (int i = 1; i < c.size; ++i) expected.push_back(order[i]);
  std::sort(expected.begin(), expected.end());
  t.agrees_with_group = t.elements == expected;
  return t;
}

/// Regularity of a chain, decided exactly by the same endpoint reduction as
/// the cyclically ordered case.
inline bool chain_regular(const MvAlgebra& a) {
  const std::vector<int> order = chain_sorted(a);  // throws on non-chains
  const int n = a.size;
  for (int m = 2; m < n; ++m)
    for (int i = 1; i < n; ++i)
      for (int j = i + m - 1; j < n; ++j) {
        const int lo = order[i], hi = order[j];
        bool found = false;
        for (int x = 0; x < n && !found; ++x) {
          if (x == a.zero) continue;
          // 0 < x < 2.x < ... < m.x strictly
          bool incr = true;
          int prev = x;
          for (int k = 2; k <= m && incr; ++k) {
            const int next = a.oplus[prev][x];
            if (!a.lt(prev, next)) incr = false;
            prev = next;
          }
          if (incr && a.le(lo, prev) && a.le(prev, hi)) found = true;
        }
        if (!found) return false;
      }
  return true;
}

struct InvariantBounds {
  int q_max = 9;
  int p_max = 13;
};

/// Sound isomorphism invariant: agreeing structures may still differ, but
/// differing vectors certify non-isomorphism.  Fields not applicable to a
/// structure kind stay unset.
struct InvariantVector {
  std::string kind;
  int size = 0;
  std::optional<std::string> shape;
  std::optional<bool> is_discrete;
  std::optional<int> eps_position;  // position of the least positive element
  std::optional<bool> c_archimedean;
  std::optional<bool> c_regular;
  std::map<std::pair<int, int>, bool> d_spectrum;  // (q, k) -> verdict
  std::map<int, int> zakon;                        // p -> invariant
  std::vector<int> torsion_factors;

  friend bool operator==(const InvariantVector& a, const InvariantVector& b) {
    return a.kind == b.kind && a.size == b.size && a.shape == b.shape && a.is_discrete == b.is_discrete &&
           a.eps_position == b.eps_position && a.c_archimedean == b.c_archimedean && a.c_regular == b.c_regular &&
           a.d_spectrum == b.d_spectrum && a.zakon == b.zakon && a.torsion_factors == b.torsion_factors;
  }
  friend bool operator!=(const InvariantVector& a, const InvariantVector& b) { return !(a == b); }
};

inline std::vector<int> prime_powers_upto(int q_max) {
  std::vector<int> out;
  for (int q = 2; q <= q_max; ++q)
    if (prime_power_base(q)) out.push_back(q);
  return out;
}

inline InvariantVector eq_invariants(const FiniteGroup& g, const InvariantBounds& bounds = {}) {
  InvariantVector v;
  v.kind = "group";
  v.size = g.size;
  for (int p = 2; p <= bounds.p_max; ++p)
    if (is_prime(p)) v.zakon[p] = zakon_invariant(g, p);
  v.torsion_factors = invariant_factors(g);
  return v;
}

inline InvariantVector eq_invariants(const FinitePco& c, const InvariantBounds& bounds = {}) {
  InvariantVector v = eq_invariants(static_cast<const FiniteGroup&>(c), bounds);
  v.kind = "co";
  const CoPredicates p = co_predicates(c);
  v.is_discrete = p.discrete;
  v.eps_position = p.eps ? std::optional<int>(1) : std::nullopt;
  v.c_archimedean = p.c_archimedean;
  v.c_regular = p.c_regular;
  for (int q : prime_powers_upto(bounds.q_max))
    for (int k = 0; k < q; ++k) v.d_spectrum[{q, k}] = d_formula(c, q, k);
  return v;
}

inline InvariantVector eq_invariants(const MvAlgebra& a, const InvariantBounds& bounds = {}) {
  InvariantVector v;
  v.kind = "mv";
  v.size = a.size;
  v.shape = to_string(shape_classify(a));
  if (a.is_chain()) {
    const FinitePco c = co_from_chain(a);
    InvariantVector w = eq_invariants(c, bounds);
    w.kind = "mv";
    w.size = a.size;
    w.shape = v.shape;
    w.c_regular = chain_regular(a);
    return w;
  }
  return v;
}

/// Which classification criteria a finite MV-algebra satisfies: the
/// atomic-and-regular chain conditions and the projectable product-of-chains
/// conditions with per-factor discreteness and regularity.
struct PseudoReport {
  bool is_chain = false;
  bool atomic = false;
  bool regular = false;  // chains only
  bool projectable = false;
  std::vector<int> factor_units;
  std::vector<int> factor_sizes;
  bool factors_discrete_regular = false;
  bool chain_pseudofinite = false;    // atomic and regular
  bool product_pseudofinite = false;  // projectable product of discrete regular factors
};

inline PseudoReport pseudo_classify(const MvAlgebra& a, int width_cap = 4) {
  PseudoReport rep;
  const AlgebraPredicates preds = algebra_predicates(a);
  rep.is_chain = preds.is_chain;
  rep.atomic = preds.is_atomic;
  rep.projectable = preds.is_projectable;
  if (rep.is_chain) {
    rep.regular = chain_regular(a);
    rep.chain_pseudofinite = rep.atomic && rep.regular;
  }
  const DecomposeResult dec = decompose_product(a, width_cap);
  if (!dec.decomposed) throw std::length_error("decomposition width exceeds the configured cap");
  rep.factor_units = dec.units;
  rep.factors_discrete_regular = true;
  for (int u : dec.units) {
    // the interval [0, u] is a finite chain, hence discrete; check its
    // regularity through the chain criterion on the interval algebra
    std::vector<int> below;
    for (int y = 0; y < a.size; ++y)
      if (a.le(y, u)) below.push_back(y);
    rep.factor_sizes.push_back(static_cast<int>(below.size()));
    std::sort(below.begin(), below.end(), [&](int x, int y) { return x != y && a.le(x, y); });
    std::vector<int> rank(a.size, -1);
    for (std::size_t i = 0; i < below.size(); ++i) rank[below[i]] = static_cast<int>(i);
    const int m = static_cast<int>(below.size());
    std::vector<std::vector<int>> oplus(m, std::vector<int>(m, 0));
    std::vector<int> neg(m, 0);
    for (int i = 0; i < m; ++i) {
      neg[i] = m - 1 - i;  // order-reversing complement within the factor chain
      for (int j = 0; j < m; ++j) {
        const int s = a.inf(a.oplus[below[i]][below[j]], u);
        oplus[i][j] = rank[s];
      }
    }
    const MvAlgebra factor = build_mv(std::move(oplus), std::move(neg), 0);
    if (!chain_regular(factor)) rep.factors_discrete_regular = false;
  }
  rep.product_pseudofinite = rep.projectable && rep.factors_discrete_regular;
  return rep;
}

}  // namespace cyclord
