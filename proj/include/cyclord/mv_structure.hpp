#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mv_algebra.hpp"

namespace cyclord {

/// The four mutually exclusive carrier shapes of a finite MV-algebra:
/// {0,1}, {0,1,x}, {0,1,x,negx}, or "every interior element has a strictly
/// comparable interior partner".  Branches are tried in this order.
enum class MvShape { TwoElement, ThreeElement, FourElementXNegX, DenseComparable };

inline const char* to_string(MvShape s) {
  switch (s) {
    case MvShape::TwoElement: return "two-elt";
    case MvShape::ThreeElement: return "three-elt";
    case MvShape::FourElementXNegX: return "four-elt-x-negx";
    case MvShape::DenseComparable: return "dense-comparable";
  }
  return "?";
}

inline MvShape shape_classify(const MvAlgebra& a) {
  if (a.size == 2) return MvShape::TwoElement;
  if (a.size == 3) return MvShape::ThreeElement;
  if (a.size == 4) {
    // interior elements must be a pair {x, neg x}
    std::vector<int> interior;
    for (int x = 0; x < a.size; ++x)
      if (x != a.zero && x != a.one) interior.push_back(x);
    if (interior.size() == 2 && a.neg[interior[0]] == interior[1])
      return MvShape::FourElementXNegX;
  }
  for (int z = 0; z < a.size; ++z) {
    if (z == a.zero || z == a.one) continue;
    bool has_partner = false;
    for (int y = 0; y < a.size && !has_partner; ++y) {
      if (y == a.zero || y == a.one || y == z) continue;
      if (a.lt(z, y) || a.lt(y, z)) has_partner = true;
    }
    if (!has_partner)
      throw std::domain_error("shape_classify: element " + std::to_string(z) + " has no comparable interior partner");
  }
  return MvShape::DenseComparable;
}

struct ElementPredicates {
  bool is_atom = false;
  bool is_archimedean = false;
  bool is_torsion = false;        // chain formula: some n has n.x = 1 and x^n = 0
  bool is_group_torsion = false;  // is_torsion, or x = 0 (group convention)
};

/// Predicates of a single element.  The torsion formula is only meaningful
/// on chains; querying it elsewhere is an error.  Searching n in 1..size is
/// exhaustive because n.x and x^n stabilize on a finite carrier.
inline ElementPredicates element_predicates(const MvAlgebra& a, int x) {
  a.check_index(x);
  ElementPredicates p;
  p.is_atom = x != a.zero;
  for (int y = 0; y < a.size && p.is_atom; ++y)
    if (a.le(y, x) && y != a.zero && y != x) p.is_atom = false;

  for (int n = 1; n <= a.size && !p.is_archimedean; ++n)
    if (a.sup(a.neg[x], a.nfold_sum(x, n)) == a.one) p.is_archimedean = true;

  if (!a.is_chain()) throw std::domain_error("torsion predicate requires a chain");
  bool reaches_one = false, reaches_zero = false;
  for (int n = 1; n <= a.size; ++n) {
    if (a.nfold_sum(x, n) == a.one) reaches_one = true;
    if (a.nfold_prod(x, n) == a.zero) reaches_zero = true;
  }
  p.is_torsion = reaches_one && reaches_zero;
  p.is_group_torsion = p.is_torsion || x == a.zero;
  return p;
}

/// Variant that skips the chain-only torsion flag.
inline bool is_atom(const MvAlgebra& a, int x) {
  if (x == a.zero) return false;
  for (int y = 0; y < a.size; ++y)
    if (a.le(y, x) && y != a.zero && y != x) return false;
  return true;
}

inline bool is_archimedean_element(const MvAlgebra& a, int x) {
  for (int n = 1; n <= a.size; ++n)
    if (a.sup(a.neg[x], a.nfold_sum(x, n)) == a.one) return true;
  return false;
}

/// The polar of S: all elements meeting every member of S at 0.
inline std::vector<int> polar(const MvAlgebra& a, const std::vector<int>& s) {
  std::vector<int> out;
  for (int x = 0; x < a.size; ++x) {
    bool ok = true;
    for (int b : s) {
      a.check_index(b);
      if (a.inf(x, b) != a.zero) { ok = false; break; }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

inline bool is_projectable(const MvAlgebra& a) {
  for (int x = 0; x < a.size; ++x) {
    const std::vector<int> pol = polar(a, {x});
    const std::vector<int> bipol = polar(a, pol);
    std::vector<char> in_pol(a.size, 0), in_bipol(a.size, 0);
    for (int y : pol) in_pol[y] = 1;
    for (int y : bipol) in_bipol[y] = 1;
    for (int b = 0; b < a.size; ++b) {
      int count = 0;
      for (int b1 = 0; b1 < a.size && count < 2; ++b1) {
        if (!in_pol[b1]) continue;
        for (int b2 = 0; b2 < a.size; ++b2) {
          if (!in_bipol[b2]) continue;
          if (a.oplus[b1][b2] == b && ++count == 2) break;
        }
      }
      if (count != 1) return false;
    }
  }
  return true;
}

struct AlgebraPredicates {
  bool is_chain = false;
  bool is_atomic = false;
  bool is_atomless = false;
  bool is_hyperarchimedean = false;
  bool is_projectable = false;
};

inline AlgebraPredicates algebra_predicates(const MvAlgebra& a) {
  AlgebraPredicates p;
  p.is_chain = a.is_chain();
  std::vector<char> atom(a.size, 0);
  bool any_atom = false;
  for (int x = 0; x < a.size; ++x) {
    atom[x] = is_atom(a, x) ? 1 : 0;
    any_atom = any_atom || atom[x];
  }
  p.is_atomless = !any_atom;
  p.is_atomic = true;
  for (int x = 0; x < a.size && p.is_atomic; ++x) {
    if (x == a.zero) continue;
    bool below = false;
    for (int y = 0; y < a.size && !below; ++y)
      if (atom[y] && a.le(y, x)) below = true;
    p.is_atomic = below;
  }
  p.is_hyperarchimedean = true;
  for (int x = 0; x < a.size && p.is_hyperarchimedean; ++x)
    p.is_hyperarchimedean = is_archimedean_element(a, x);
  p.is_projectable = is_projectable(a);
  return p;
}

/// Outcome of the orthogonal-unit search: the units of a maximal-width
/// decomposition 1 = u1 (+) ... (+) un into pairwise orthogonal elements
/// whose intervals [0,ui] are chains, or a report that no decomposition of
/// width <= width_cap exists.
struct DecomposeResult {
  bool decomposed = false;
  std::vector<int> units;
  int width_cap = 0;
};

inline DecomposeResult decompose_product(const MvAlgebra& a, int width_cap = 4) {
  DecomposeResult res;
  res.width_cap = width_cap;

  // candidate units are the basic elements: nonzero x with [0,x] a chain
  std::vector<int> basics;
  for (int x = 0; x < a.size; ++x) {
    if (x == a.zero) continue;
    std::vector<int> below;
    for (int y = 0; y < a.size; ++y)
      if (a.le(y, x)) below.push_back(y);
    bool chain = true;
    for (std::size_t i = 0; i < below.size() && chain; ++i)
      for (std::size_t j = i + 1; j < below.size(); ++j)
        if (!a.le(below[i], below[j]) && !a.le(below[j], below[i])) { chain = false; break; }
    if (chain) basics.push_back(x);
  }

  std::vector<int> chosen, best;
  auto dfs = [&](auto&& self, std::size_t from, int partial_sum) -> void {
    if (partial_sum == a.one && chosen.size() > best.size()) best = chosen;
    if (static_cast<int>(chosen.size()) == width_cap) return;
    for (std::size_t i = from; i < basics.size(); ++i) {
      const int u = basics[i];
      bool orth = true;
      for (int v : chosen)
        if (a.inf(u, v) != a.zero) { orth = false; break; }
      if (!orth) continue;
      chosen.push_back(u);
      self(self, i + 1, a.oplus[partial_sum][u]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, a.zero);

  if (!best.empty()) {
    res.decomposed = true;
    res.units = best;
  }
  return res;
}

}  // namespace cyclord
