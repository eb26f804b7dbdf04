#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice_quotient.hpp"
#include "mv_algebra.hpp"
#include "pco.hpp"

namespace cyclord {

/// The finite lattice (A(C) u {top}, <=_0) of a p.c.o. group, with meets and
/// joins tabulated.  Index 0 is the group zero, index `top` the adjoined
/// greatest element; indices in between enumerate the rest of A(C).
/// Missing infima/suprema are recorded as -1 rather than treated as errors,
/// so class-membership checks can report them as witnesses.
template <class P>
struct AcLattice {
  using Elem = typename P::Elem;

  const P* c = nullptr;
  std::vector<Elem> elems;  // A(C); elems[0] is the group zero
  int top = 0;              // sentinel index = |A(C)|
  std::vector<std::vector<char>> le;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;

  int index_of(const Elem& e) const {
    auto it = std::find(elems.begin(), elems.end(), e);
    return it == elems.end() ? -1 : static_cast<int>(it - elems.begin());
  }

  /// Meet of two group elements read inside the lattice; elements outside
  /// A(C) meet everything at zero.
  Elem meet0(const Elem& a, const Elem& b) const {
    if (a == b) return a;
    const int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) return c->zero_elem();
    const int m = meet[ia][ib];
    if (m < 0 || m == top) throw std::domain_error("meet does not exist in A(C)");
    return elems[m];
  }
};

template <class P>
AcLattice<P> build_ac_lattice(const P& c) {
  AcLattice<P> lat;
  lat.c = &c;
  lat.elems = c.non_isolated();
  // ensure the group zero sits at index 0
  const auto zero = c.zero_elem();
  auto zit = std::find(lat.elems.begin(), lat.elems.end(), zero);
  if (zit != lat.elems.begin()) std::iter_swap(lat.elems.begin(), zit);
  const int m = static_cast<int>(lat.elems.size());
  lat.top = m;
  const int n = m + 1;
  lat.le.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) lat.le[i][j] = c.leq0(lat.elems[i], lat.elems[j]) ? 1 : 0;
    lat.le[i][lat.top] = 1;
  }
  lat.le[lat.top][lat.top] = 1;
  lat.meet.assign(n, std::vector<int>(n, -1));
  lat.join.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int best = -1;
      for (int k = 0; k < n; ++k) {
        if (!lat.le[k][i] || !lat.le[k][j]) continue;
        if (best < 0 || lat.le[best][k]) best = k;
      }
      if (best >= 0)
        for (int k = 0; k < n; ++k)
          if (lat.le[k][i] && lat.le[k][j] && !lat.le[k][best]) { best = -1; break; }
      lat.meet[i][j] = best;
      best = -1;
      for (int k = 0; k < n; ++k) {
        if (!lat.le[i][k] || !lat.le[j][k]) continue;
        if (best < 0 || lat.le[k][best]) best = k;
      }
      if (best >= 0)
        for (int k = 0; k < n; ++k)
          if (lat.le[i][k] && lat.le[j][k] && !lat.le[best][k]) { best = -1; break; }
      lat.join[i][j] = best;
    }
  return lat;
}

/// Non-isolated elements, uniformly for both representations.
template <class P>
std::vector<typename P::Elem> non_isolated(const P& c) {
  return c.non_isolated();
}

/// A p.c.o. group is lattice-cyclically-ordered when every pair in A(C) has
/// an infimum and the base-point order is reversed by negation.
template <class P>
bool is_lco(const P& c) {
  const auto lat = build_ac_lattice(c);
  const int m = lat.top;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int k = lat.meet[i][j];
      if (k < 0 || k == lat.top) return false;
    }
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) {
      const bool lhs = c.rel(c.zero_elem(), lat.elems[i], lat.elems[j]);
      const bool rhs = c.rel(c.zero_elem(), c.negate(lat.elems[j]), c.negate(lat.elems[i]));
      if (lhs != rhs) return false;
    }
  return true;
}

/// Verdicts for the four conditions under which A(C) defines canonically an
/// MV-algebra.  A failing condition keeps a short witness description.
struct AcClassReport {
  bool cond1 = true;  // negation reverses the order on A(C) \ {0}
  bool cond2 = true;  // (A(C) u {top}, <=_0) is a distributive lattice
  bool cond3 = true;  // x + y = meet + join
  bool cond4 = true;  // the three-variable subtraction identity
  std::string witness1, witness2, witness3, witness4;

  bool all_pass() const { return cond1 && cond2 && cond3 && cond4; }
  std::string first_witness() const {
    if (!cond1) return "condition 1: " + witness1;
    if (!cond2) return "condition 2: " + witness2;
    if (!cond3) return "condition 3: " + witness3;
    if (!cond4) return "condition 4: " + witness4;
    return "";
  }
};

template <class P>
AcClassReport check_ac_class(const P& c) {
  using Elem = typename P::Elem;
  AcClassReport rep;
  const auto lat = build_ac_lattice(c);
  const int m = lat.top;
  const Elem zero = c.zero_elem();

  for (int i = 1; i < m && rep.cond1; ++i)
    for (int j = 1; j < m; ++j) {
      const bool lhs = c.rel(zero, lat.elems[i], lat.elems[j]);
      const bool rhs = c.rel(zero, c.negate(lat.elems[j]), c.negate(lat.elems[i]));
      if (lhs != rhs) {
        rep.cond1 = false;
        rep.witness1 = "x=" + c.elem_str(lat.elems[i]) + " y=" + c.elem_str(lat.elems[j]);
        break;
      }
    }

  const int n = m + 1;
  for (int i = 0; i < n && rep.cond2; ++i)
    for (int j = 0; j < n; ++j) {
      if (lat.meet[i][j] < 0) {
        rep.cond2 = false;
        rep.witness2 = "no meet of " + (i == m ? std::string("top") : c.elem_str(lat.elems[i])) + " and " +
                       (j == m ? std::string("top") : c.elem_str(lat.elems[j]));
        break;
      }
      if (lat.join[i][j] < 0) {
        rep.cond2 = false;
        rep.witness2 = "no join of " + (i == m ? std::string("top") : c.elem_str(lat.elems[i])) + " and " +
                       (j == m ? std::string("top") : c.elem_str(lat.elems[j]));
        break;
      }
    }
  for (int i = 0; i < n && rep.cond2; ++i)
    for (int j = 0; j < n && rep.cond2; ++j)
      for (int k = 0; k < n; ++k) {
        if (lat.meet[i][lat.join[j][k]] != lat.join[lat.meet[i][j]][lat.meet[i][k]]) {
          rep.cond2 = false;
          rep.witness2 = "distributivity fails at indices (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          break;
        }
      }

  if (rep.cond2) {
    // x + y = x ^ y + x v y, with top + t = t
    for (int i = 0; i < m && rep.cond3; ++i)
      for (int j = 0; j < m; ++j) {
        const int mi = lat.meet[i][j];
        const int ji = lat.join[i][j];
        if (mi < 0 || ji < 0 || mi == lat.top) { rep.cond3 = false; rep.witness3 = "lattice incomplete"; break; }
        const Elem lhs = c.sum(lat.elems[i], lat.elems[j]);
        const Elem rhs = ji == lat.top ? lat.elems[mi] : c.sum(lat.elems[mi], lat.elems[ji]);
        if (!(lhs == rhs)) {
          rep.cond3 = false;
          rep.witness3 = "x=" + c.elem_str(lat.elems[i]) + " y=" + c.elem_str(lat.elems[j]);
          break;
        }
      }
    // inner sums that wrap to the class of zero stand for the lift u, i.e.
    // the adjoined top, whose meet with -y is -y itself
    auto clipped_meet = [&](const Elem& inner, const Elem& other) {
      return inner == zero ? other : lat.meet0(inner, other);
    };
    for (int i = 1; i < m && rep.cond4; ++i)
      for (int j = 1; j < m && rep.cond4; ++j)
        for (int k = 1; k < m; ++k) {
          const Elem& x = lat.elems[i];
          const Elem& y = lat.elems[j];
          const Elem& z = lat.elems[k];
          Elem lhs = c.sum(x, c.negate(y));
          Elem t1 = clipped_meet(c.sum(lat.meet0(x, c.negate(z)), z), c.negate(y));
          Elem t2 = clipped_meet(c.sum(lat.meet0(y, c.negate(z)), z), c.negate(x));
          Elem rhs = c.sum(t1, c.negate(t2));
          if (!(lhs == rhs)) {
            rep.cond4 = false;
            rep.witness4 = "x=" + c.elem_str(x) + " y=" + c.elem_str(y) + " z=" + c.elem_str(z);
            break;
          }
        }
  } else {
    rep.cond3 = rep.cond4 = false;
    rep.witness3 = rep.witness4 = "lattice incomplete (condition 2)";
  }
  return rep;
}

/// The canonical MV-algebra of a class member: carrier A(C) plus an adjoined
/// top, indexed with zero at 0 and the top last, together with the element
/// table needed to map carrier indices back into the group.
template <class P>
struct CanonicalMv {
  MvAlgebra algebra;
  std::vector<typename P::Elem> elems;  // indices 0..top-1
  int top = 0;
};

template <class P>
CanonicalMv<P> canonical_mv(const P& c) {
  using Elem = typename P::Elem;
  const AcClassReport rep = check_ac_class(c);
  if (!rep.all_pass())
    throw std::domain_error("A(C) does not define canonically an MV-algebra: " + rep.first_witness());
  const auto lat = build_ac_lattice(c);
  const int m = lat.top;
  const int n = m + 1;
  const Elem zero = c.zero_elem();

  std::vector<int> neg(n, 0);
  neg[0] = m;
  neg[m] = 0;
  for (int i = 1; i < m; ++i) {
    const int j = lat.index_of(c.negate(lat.elems[i]));
    if (j < 0) throw std::domain_error("A(C) is not closed under negation");
    neg[i] = j;
  }

  std::vector<std::vector<int>> oplus(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == 0) { oplus[x][y] = y; continue; }
      if (y == 0) { oplus[x][y] = x; continue; }
      if (x == m || y == m) { oplus[x][y] = m; continue; }
      const int mi = lat.meet[x][neg[y]];
      const Elem s = c.sum(lat.elems[mi], lat.elems[y]);
      if (s == zero) { oplus[x][y] = m; continue; }
      const int si = lat.index_of(s);
      if (si < 0) throw std::domain_error("sum escapes A(C) in the canonical construction");
      oplus[x][y] = si;
    }

  CanonicalMv<P> out;
  out.elems = lat.elems;
  out.top = m;
  out.algebra = build_mv(std::move(oplus), std::move(neg), 0);
  return out;
}

/// Subgroup closure of A(C) inside a finite p.c.o. group.
inline std::vector<int> generated_subgroup(const FinitePco& c) {
  std::vector<char> in(c.size, 0);
  std::vector<int> queue = c.non_isolated();
  for (int x : queue) in[x] = 1;
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    if (!in[c.neg[x]]) { in[c.neg[x]] = 1; queue.push_back(c.neg[x]); }
    for (int y = 0; y < c.size; ++y) {
      if (!in[y]) continue;
      const int s = c.add[x][y];
      if (!in[s]) { in[s] = 1; queue.push_back(s); }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < c.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// Evaluates the two first-order formula families asserting that length-n
/// sums of A(C) elements have unique good representations and that good
/// representations add by the carry rule.  Quantification is exhaustive over
/// A(C)^n, capped at `tuple_cap` tuples.
template <class P>
bool good_seq_formulas(const P& c, int n, long long tuple_cap = 1 << 22) {
  using Elem = typename P::Elem;
  if (n < 1) throw std::invalid_argument("tuple length must be positive");
  const CanonicalMv<P> can = canonical_mv(c);  // rejects non-members
  const MvAlgebra& a = can.algebra;
  const int m = can.top;  // |A(C)|

  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > tuple_cap) throw std::length_error("A(C)^n exceeds the configured tuple cap");
  }

  const auto lat = build_ac_lattice(c);
  auto good_tuple = [&](const std::vector<int>& t) {
    for (int i = 0; i + 1 < n; ++i) {
      if (t[i] == 0 && t[i + 1] != 0) return false;
      if (t[i] == 0) continue;
      const Elem mt = lat.meet0(lat.elems[t[i + 1]], c.negate(lat.elems[t[i]]));
      if (!(mt == c.zero_elem())) return false;
    }
    return true;
  };
  auto tuple_sum = [&](const std::vector<int>& t) {
    Elem s = c.zero_elem();
    for (int i = 0; i < n; ++i) s = c.sum(s, lat.elems[t[i]]);
    return s;
  };

  // index all good tuples by their group sum
  std::map<Elem, std::vector<std::vector<int>>> good_by_sum;
  std::vector<int> t(n, 0);
  auto enumerate = [&](auto&& self, int depth, auto&& visit) -> void {
    if (depth == n) { visit(t); return; }
    for (t[depth] = 0; t[depth] < m; ++t[depth]) self(self, depth + 1, visit);
    t[depth] = 0;
  };
  enumerate(enumerate, 0, [&](const std::vector<int>& tup) {
    if (good_tuple(tup)) good_by_sum[tuple_sum(tup)].push_back(tup);
  });

  // family 1: every length-n sum has exactly one good representation
  bool ok = true;
  enumerate(enumerate, 0, [&](const std::vector<int>& tup) {
    if (!ok) return;
    const auto it = good_by_sum.find(tuple_sum(tup));
    if (it == good_by_sum.end() || it->second.size() != 1) ok = false;
  });
  if (!ok) return false;

  // family 2: the good representation of a sum of two good tuples is the
  // carry-rule sum with leading tops dropped
  std::vector<std::vector<int>> goods;
  for (const auto& [sum, tuples] : good_by_sum)
    for (const auto& tup : tuples) goods.push_back(tup);
  const int len = 2 * n;
  for (const auto& x : goods) {
    for (const auto& y : goods) {
      std::vector<int> w(len, 0);
      auto term = [&](const std::vector<int>& v, int i) { return i >= 0 && i < n ? v[i] : 0; };
      for (int i = 1; i <= len; ++i) {
        int acc = term(x, i - 1);
        for (int j = 1; j < i; ++j) acc = a.oplus[acc][a.odot[term(x, i - 1 - j)][term(y, j - 1)]];
        acc = a.oplus[acc][term(y, i - 1)];
        w[i - 1] = acc;
      }
      int lead = 0;
      while (lead < len && w[lead] == a.one) ++lead;
      for (int i = lead; i < len; ++i)
        if (w[i] == a.one) return false;  // tops must form a prefix
      std::vector<int> dropped(w.begin() + lead, w.end());
      while (!dropped.empty() && dropped.back() == 0) dropped.pop_back();

      const Elem s = c.sum(tuple_sum(x), tuple_sum(y));
      const auto it = good_by_sum.find(s);
      if (static_cast<int>(dropped.size()) > n) {
        if (it != good_by_sum.end()) return false;  // no length-n witness may exist
        continue;
      }
      if (it == good_by_sum.end()) return false;
      dropped.resize(n, 0);
      if (it->second.front() != dropped) return false;
    }
  }
  return true;
}

/// An element of the unwound of a finite cyclically ordered group C: an
/// integer winding number paired with a group element, ordered
/// lexicographically by (Z, <=) x (C, <=_0).
struct UnwoundElement {
  long long wind = 0;
  int part = 0;

  friend bool operator==(const UnwoundElement& a, const UnwoundElement& b) {
    return a.wind == b.wind && a.part == b.part;
  }
};

/// Arithmetic view of Z x C with the carry rule.  Construction verifies that
/// C really is cyclically ordered.
struct Unwound {
  FinitePco co;

  explicit Unwound(FinitePco c) : co(std::move(c)) {
    if (!check_pco_axioms(co).is_co) throw std::domain_error("unwound construction requires a cyclically ordered group");
  }

  UnwoundElement unit() const { return {1, co.zero}; }

  int min0(int x, int y) const { return co.leq0(x, y) ? x : y; }

  UnwoundElement add(const UnwoundElement& a, const UnwoundElement& b) const {
    const int s = co.add[a.part][b.part];
    const bool no_carry = (a.part == co.zero && b.part == co.zero) || co.lt0(min0(a.part, b.part), s);
    return {a.wind + b.wind + (no_carry ? 0 : 1), s};
  }

  UnwoundElement negate(const UnwoundElement& a) const {
    if (a.part == co.zero) return {-a.wind, co.zero};
    return {-a.wind - 1, co.neg[a.part]};
  }

  bool leq(const UnwoundElement& a, const UnwoundElement& b) const {
    if (a.wind != b.wind) return a.wind < b.wind;
    return co.leq0(a.part, b.part);
  }

  /// Quotient by the unit subgroup.
  int project(const UnwoundElement& a) const { return a.part; }
};

}  // namespace cyclord
