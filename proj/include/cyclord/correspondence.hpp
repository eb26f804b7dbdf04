#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice_quotient.hpp"
#include "mv_algebra.hpp"
#include "mv_structure.hpp"
#include "pco.hpp"
#include "pco_ops.hpp"

namespace cyclord {

/// Carrier indices of a chain sorted ascending by the natural order
/// (zero first, top last).
inline std::vector<int> chain_sorted(const MvAlgebra& a) {
  if (!a.is_chain()) throw std::domain_error("algebra is not a chain");
  std::vector<int> order(a.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return x != y && a.le(x, y); });
  return order;
}

/// The cyclically ordered group on A \ {1}: addition is the truncated sum
/// while it stays below the top and the product once it saturates, and R is
/// the cyclic closure of the natural order.  Element i of the result is the
/// i-th smallest element of the chain.
inline FinitePco co_from_chain(const MvAlgebra& a) {
  const std::vector<int> order = chain_sorted(a);
  const int n = a.size - 1;
  std::vector<int> rank(a.size, -1);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  FiniteGroup g;
  g.size = n;
  g.zero = 0;
  g.add.assign(n, std::vector<int>(n, 0));
  g.neg.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int x = order[i];
    for (int j = 0; j < n; ++j) {
      const int y = order[j];
      const int s = a.oplus[x][y] != a.one ? a.oplus[x][y] : a.odot[x][y];
      g.add[i][j] = rank[s];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.add[i][j] == 0) { g.neg[i] = j; break; }

  FinitePco c = finite_pco_from(std::move(g), std::vector<char>(static_cast<std::size_t>(n) * n * n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((x < y && y < z) || (y < z && z < x) || (z < x && x < y)) c.set_rel(x, y, z);
  return c;
}

/// The MV-chain on C u {top} for a finite cyclically ordered C; the inverse
/// of co_from_chain, and it agrees with the canonical construction as soon
/// as |C| >= 3.  Carrier index i < |C| is the i-th smallest element of
/// (C, <=_0); the top sits at index |C|.
inline MvAlgebra chain_from_co(const FinitePco& c) {
  if (!check_pco_axioms(c).is_co) throw std::domain_error("input is not a cyclically ordered group");
  std::vector<int> order(c.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return x != y && c.leq0(x, y); });
  std::vector<int> rank(c.size, -1);
  for (int i = 0; i < c.size; ++i) rank[order[i]] = i;

  const int n = c.size + 1;
  const int top = c.size;
  std::vector<std::vector<int>> oplus(n, std::vector<int>(n, 0));
  std::vector<int> neg(n, 0);
  neg[0] = top;
  neg[top] = 0;
  for (int i = 1; i < top; ++i) neg[i] = rank[c.neg[order[i]]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == top || j == top) { oplus[i][j] = top; continue; }
      if (i == 0 && j == 0) { oplus[i][j] = 0; continue; }
      const int x = order[i], y = order[j];
      const int s = c.add[x][y];
      const int m = c.leq0(x, y) ? x : y;
      oplus[i][j] = (s != c.zero && c.lt0(m, s)) ? rank[s] : top;
    }
  return build_mv(std::move(oplus), std::move(neg), 0);
}

/// An element of Z x (A \ {1}): winding number plus chain element.
struct ChainGroupElement {
  long long wind = 0;
  int part = 0;  // carrier index of the chain, never the top

  friend bool operator==(const ChainGroupElement& a, const ChainGroupElement& b) {
    return a.wind == b.wind && a.part == b.part;
  }
};

/// The unital linearly ordered group Z x (A \ {1}) attached to a finite
/// chain: lexicographic order, carry into the winding number exactly when
/// the truncated sum saturates.
struct ChangOfChain {
  const MvAlgebra* a = nullptr;

  explicit ChangOfChain(const MvAlgebra& alg) : a(&alg) {
    if (!alg.is_chain()) throw std::domain_error("Z x (A \\ {1}) requires a chain");
  }

  void check_part(int x) const {
    a->check_index(x);
    if (x == a->one) throw std::invalid_argument("second component must differ from the top");
  }

  ChainGroupElement unit() const { return {1, a->zero}; }

  ChainGroupElement add(const ChainGroupElement& p, const ChainGroupElement& q) const {
    check_part(p.part);
    check_part(q.part);
    const int s = a->oplus[p.part][q.part];
    if (s != a->one) return {p.wind + q.wind, s};
    return {p.wind + q.wind + 1, a->odot[p.part][q.part]};
  }

  ChainGroupElement negate(const ChainGroupElement& p) const {
    check_part(p.part);
    if (p.part == a->zero) return {-p.wind, a->zero};
    return {-p.wind - 1, a->neg[p.part]};
  }

  bool leq(const ChainGroupElement& p, const ChainGroupElement& q) const {
    check_part(p.part);
    check_part(q.part);
    if (p.wind != q.wind) return p.wind < q.wind;
    return a->le(p.part, q.part);
  }
};

/// A verified bijection witnessing an isomorphism.
struct IsoWitness {
  enum class Kind { Mv, Pco, Group };
  Kind kind = Kind::Group;
  std::vector<int> map;  // domain index -> codomain index
};

inline bool verify_group_iso(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& f) {
  if (g.size != h.size || static_cast<int>(f.size()) != g.size) return false;
  std::vector<char> seen(h.size, 0);
  for (int v : f) {
    if (v < 0 || v >= h.size || seen[v]) return false;
    seen[v] = 1;
  }
  if (f[g.zero] != h.zero) return false;
  for (int x = 0; x < g.size; ++x)
    for (int y = 0; y < g.size; ++y)
      if (f[g.add[x][y]] != h.add[f[x]][f[y]]) return false;
  return true;
}

inline bool verify_pco_iso(const FinitePco& c, const FinitePco& d, const std::vector<int>& f) {
  if (!verify_group_iso(c, d, f)) return false;
  for (int x = 0; x < c.size; ++x)
    for (int y = 0; y < c.size; ++y)
      for (int z = 0; z < c.size; ++z)
        if (c.rel(x, y, z) != d.rel(f[x], f[y], f[z])) return false;
  return true;
}

inline bool verify_mv_iso(const MvAlgebra& a, const MvAlgebra& b, const std::vector<int>& f) {
  if (a.size != b.size || static_cast<int>(f.size()) != a.size) return false;
  std::vector<char> seen(b.size, 0);
  for (int v : f) {
    if (v < 0 || v >= b.size || seen[v]) return false;
    seen[v] = 1;
  }
  if (f[a.zero] != b.zero) return false;
  for (int x = 0; x < a.size; ++x) {
    if (f[a.neg[x]] != b.neg[f[x]]) return false;
    for (int y = 0; y < a.size; ++y)
      if (f[a.oplus[x][y]] != b.oplus[f[x]][f[y]]) return false;
  }
  return true;
}

namespace detail {

inline void check_iso_cap(int size, int cap) {
  if (size > cap)
    throw std::length_error("structure size " + std::to_string(size) + " exceeds the isomorphism search cap " + std::to_string(cap));
}

inline std::vector<int> order_multiset(const FiniteGroup& g) {
  std::vector<int> orders(g.size);
  for (int x = 0; x < g.size; ++x) orders[x] = g.element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

/// Greedy generating sequence: each generator is the least element outside
/// the closure of the previous ones.
inline std::vector<int> generators(const FiniteGroup& g) {
  std::vector<char> in(g.size, 0);
  in[g.zero] = 1;
  int covered = 1;
  std::vector<int> gens;
  std::vector<int> members{g.zero};
  while (covered < g.size) {
    int pick = -1;
    for (int x = 0; x < g.size; ++x)
      if (!in[x]) { pick = x; break; }
    gens.push_back(pick);
    std::vector<int> frontier{pick};
    while (!frontier.empty()) {
      const int x = frontier.back();
      frontier.pop_back();
      if (in[x]) continue;
      in[x] = 1;
      ++covered;
      members.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i) frontier.push_back(g.add[x][members[i]]);
      frontier.push_back(g.neg[x]);
    }
  }
  return gens;
}

/// Extends generator images to a full homomorphism; returns nullopt when the
/// extension is inconsistent or not injective.
inline std::optional<std::vector<int>> extend_hom(const FiniteGroup& g, const FiniteGroup& h,
                                                  const std::vector<int>& gens, const std::vector<int>& images) {
  std::vector<int> f(g.size, -1);
  f[g.zero] = h.zero;
  std::vector<int> known{g.zero};
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const int x = gens[gi];
    if (f[x] != -1) {
      if (f[x] != images[gi]) return std::nullopt;
      continue;
    }
    f[x] = images[gi];
    std::vector<int> frontier{x};
    while (!frontier.empty()) {
      const int y = frontier.back();
      frontier.pop_back();
      for (std::size_t zi = 0; zi < known.size(); ++zi) {
        const int z = known[zi];
        const int s = g.add[y][z];
        const int hs = h.add[f[y]][f[z]];
        if (f[s] == -1) {
          f[s] = hs;
          frontier.push_back(s);
          known.push_back(s);
        } else if (f[s] != hs) {
          return std::nullopt;
        }
      }
      const int ny = g.neg[y];
      const int hn = h.neg[f[y]];
      if (f[ny] == -1) {
        f[ny] = hn;
        frontier.push_back(ny);
        known.push_back(ny);
      } else if (f[ny] != hn) {
        return std::nullopt;
      }
      if (std::find(known.begin(), known.end(), y) == known.end()) known.push_back(y);
    }
  }
  std::vector<char> seen(h.size, 0);
  for (int v : f) {
    if (v < 0 || seen[v]) return std::nullopt;
    seen[v] = 1;
  }
  return f;
}

template <class Accept>
std::optional<std::vector<int>> group_iso_search(const FiniteGroup& g, const FiniteGroup& h, Accept&& accept) {
  if (g.size != h.size) return std::nullopt;
  if (order_multiset(g) != order_multiset(h)) return std::nullopt;
  const std::vector<int> gens = generators(g);
  std::vector<int> images(gens.size(), -1);
  std::vector<int> g_order(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) g_order[i] = g.element_order(gens[i]);

  auto dfs = [&](auto&& self, std::size_t depth) -> std::optional<std::vector<int>> {
    if (depth == gens.size()) {
      auto f = extend_hom(g, h, gens, images);
      if (f && accept(*f)) return f;
      return std::nullopt;
    }
    for (int cand = 0; cand < h.size; ++cand) {
      if (h.element_order(cand) != g_order[depth]) continue;
      images[depth] = cand;
      if (auto f = self(self, depth + 1)) return f;
    }
    images[depth] = -1;
    return std::nullopt;
  };
  return dfs(dfs, 0);
}

}  // namespace detail

inline std::optional<IsoWitness> group_iso(const FiniteGroup& g, const FiniteGroup& h, int cap = 24) {
  detail::check_iso_cap(g.size, cap);
  detail::check_iso_cap(h.size, cap);
  auto f = detail::group_iso_search(g, h, [](const std::vector<int>&) { return true; });
  if (!f) return std::nullopt;
  return IsoWitness{IsoWitness::Kind::Group, std::move(*f)};
}

inline std::optional<IsoWitness> pco_iso(const FinitePco& c, const FinitePco& d, int cap = 24) {
  detail::check_iso_cap(c.size, cap);
  detail::check_iso_cap(d.size, cap);
  if (c.non_isolated().size() != d.non_isolated().size()) return std::nullopt;
  auto f = detail::group_iso_search(c, d, [&](const std::vector<int>& cand) { return verify_pco_iso(c, d, cand); });
  if (!f) return std::nullopt;
  return IsoWitness{IsoWitness::Kind::Pco, std::move(*f)};
}

inline std::optional<IsoWitness> mv_iso(const MvAlgebra& a, const MvAlgebra& b, int cap = 24) {
  detail::check_iso_cap(a.size, cap);
  detail::check_iso_cap(b.size, cap);
  if (a.size != b.size) return std::nullopt;
  const int n = a.size;

  // label-free per-element fingerprints prune the backtracking
  auto fingerprints = [](const MvAlgebra& m) {
    std::vector<std::array<int, 5>> fp(m.size);
    for (int x = 0; x < m.size; ++x) {
      int below = 0, above = 0, stab_sum = 0, stab_prod = 0;
      for (int y = 0; y < m.size; ++y) {
        below += m.leq[y][x];
        above += m.leq[x][y];
      }
      int acc = m.zero;
      for (int k = 1; k <= m.size + 1; ++k) {
        const int nxt = m.oplus[acc][x];
        if (nxt == acc) { stab_sum = k; break; }
        acc = nxt;
      }
      acc = m.one;
      for (int k = 1; k <= m.size + 1; ++k) {
        const int nxt = m.odot[acc][x];
        if (nxt == acc) { stab_prod = k; break; }
        acc = nxt;
      }
      fp[x] = {below, above, stab_sum, stab_prod, 0};
    }
    for (int x = 0; x < m.size; ++x) fp[x][4] = fp[m.neg[x]][0];
    return fp;
  };
  const auto fpa = fingerprints(a);
  const auto fpb = fingerprints(b);
  {
    auto sa = fpa, sb = fpb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);
  // most-constrained-first assignment order
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> freedom(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (fpb[y] == fpa[x]) ++freedom[x];
  std::sort(order.begin(), order.end(), [&](int x, int y) { return freedom[x] < freedom[y]; });

  auto consistent = [&](int x) {
    if (f[a.neg[x]] != -1 && f[a.neg[x]] != b.neg[f[x]]) return false;
    for (int y = 0; y < n; ++y) {
      if (f[y] == -1) continue;
      if (f[a.oplus[x][y]] != -1 && f[a.oplus[x][y]] != b.oplus[f[x]][f[y]]) return false;
      if (f[a.oplus[y][x]] != -1 && f[a.oplus[y][x]] != b.oplus[f[y]][f[x]]) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) return verify_mv_iso(a, b, f);
    const int x = order[depth];
    if (f[x] != -1) return consistent(x) && self(self, depth + 1);
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || !(fpb[cand] == fpa[x])) continue;
      f[x] = cand;
      used[cand] = 1;
      if (consistent(x) && self(self, depth + 1)) return true;
      f[x] = -1;
      used[cand] = 0;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return IsoWitness{IsoWitness::Kind::Mv, std::move(f)};
}

/// Composite verdict of the reconstruction checks: the canonical MV-algebra
/// of C(A) against A, the interpretation inverse for chains, and the
/// unwound/quotient consistency.
struct RoundTripReport {
  bool used_chain_path = false;
  bool degenerate = false;          // A(C(A)) = {0} with |A| > 2
  bool canonical_iso = false;       // A isomorphic to canonical_mv(C(A))
  bool chain_from_co_iso = false;   // chains: A isomorphic to chain_from_co(C(A))
  bool unwound_consistent = false;  // chains: Rieger + carry criterion
  bool ok = false;
};

namespace detail {

/// Rieger consistency for a finite cyclically ordered group: the map
/// (m, x) -> m*|C| + rank0(x) must carry Z x C with the carry rule onto the
/// integers with unit |C|, the carry must occur exactly when the ranks wrap,
/// and the quotient winding must reproduce R.
inline bool unwound_consistency(const FinitePco& c, int window = 3) {
  const Unwound uw{c};
  const int n = c.size;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return x != y && c.leq0(x, y); });
  std::vector<long long> rank(n, 0);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  auto phi = [&](const UnwoundElement& e) { return e.wind * n + rank[e.part]; };

  if (phi(uw.unit()) != n) return false;
  for (int m1 = -window; m1 <= window; ++m1)
    for (int x = 0; x < n; ++x)
      for (int m2 = -window; m2 <= window; ++m2)
        for (int y = 0; y < n; ++y) {
          const UnwoundElement e1{m1, x}, e2{m2, y};
          if (phi(uw.add(e1, e2)) != phi(e1) + phi(e2)) return false;
          if (uw.leq(e1, e2) != (phi(e1) <= phi(e2))) return false;
          if (phi(uw.negate(e1)) != -phi(e1)) return false;
        }
  // carry criterion: for g, h in [0, u), the projection is additive iff
  // g + h stays below the unit
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const UnwoundElement g{0, x}, h{0, y};
      const bool additive = uw.add(g, h).wind == 0;
      if (additive != (rank[x] + rank[y] < n)) return false;
    }
  // quotient reproduces C: ranks realize the canonical cyclic order
  const FinitePco canon = make_cyclic_group(n);
  std::vector<int> f(n, 0);
  for (int x = 0; x < n; ++x) f[x] = static_cast<int>(rank[x]);
  return verify_pco_iso(c, canon, f);
}

}  // namespace detail

/// Reconstructs A from its associated cyclically ordered structure and
/// verifies the reconstruction.  Chains go through the finite c.o. group on
/// A \ {1}; decomposable non-chains go through the lattice quotient of the
/// unit vector found by decompose_product.
inline RoundTripReport round_trip(const MvAlgebra& a, int iso_cap = 64) {
  if (!check_mv_axioms(a).all_pass()) throw std::domain_error("round_trip requires a valid MV-algebra");
  RoundTripReport rep;
  if (a.is_chain()) {
    rep.used_chain_path = true;
    const FinitePco c = co_from_chain(a);
    const auto can = canonical_mv(c);
    rep.degenerate = can.algebra.size == 2 && a.size > 2;
    rep.canonical_iso = mv_iso(can.algebra, a, iso_cap).has_value();
    rep.chain_from_co_iso = mv_iso(chain_from_co(c), a, iso_cap).has_value();
    rep.unwound_consistent = detail::unwound_consistency(c);
    rep.ok = rep.chain_from_co_iso && rep.unwound_consistent && (rep.canonical_iso || rep.degenerate);
    return rep;
  }
  const DecomposeResult dec = decompose_product(a);
  if (!dec.decomposed) throw std::domain_error("algebra is neither a chain nor decomposable within the width cap");
  std::vector<int> u;
  for (int unit : dec.units) {
    int below = 0;
    for (int y = 0; y < a.size; ++y)
      if (a.le(y, unit)) ++below;
    u.push_back(below - 1);
  }
  const LatticeQuotientPco lq = wound_round(u);
  const auto can = canonical_mv(lq);
  rep.canonical_iso = mv_iso(can.algebra, a, iso_cap).has_value();
  rep.degenerate = can.algebra.size == 2 && a.size > 2;
  rep.ok = rep.canonical_iso || rep.degenerate;
  return rep;
}

}  // namespace cyclord
