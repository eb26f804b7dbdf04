#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pco.hpp"

namespace cyclord {

/// The quotient of the rank-k integer lattice (componentwise order) by the
/// subgroup generated by a strong unit u, cyclically ordered by lifting.
/// Elements are kept in the normal form v >= 0 and not(v >= u), which picks
/// a unique representative per class; the carrier is infinite for k >= 2.
struct LatticeQuotientPco {
  std::vector<int> u;

  using Elem = std::vector<int>;

  int rank() const { return static_cast<int>(u.size()); }

  void check_dim(const Elem& v) const {
    if (v.size() != u.size()) throw std::invalid_argument("vector dimension mismatch");
  }

  /// v - m*u with m = min_j floor(v_j / u_j); the unique representative with
  /// v >= 0 and some component below u.
  Elem normalize(Elem v) const {
    check_dim(v);
    int m = 0;
    bool first = true;
    for (std::size_t j = 0; j < u.size(); ++j) {
      // floor division for possibly negative components
      int q = v[j] / u[j];
      if (v[j] % u[j] != 0 && ((v[j] < 0) != (u[j] < 0))) --q;
      if (first || q < m) { m = q; first = false; }
    }
    for (std::size_t j = 0; j < u.size(); ++j) v[j] -= m * u[j];
    return v;
  }

  Elem zero_elem() const { return Elem(u.size(), 0); }

  Elem sum(const Elem& a, const Elem& b) const {
    check_dim(a);
    check_dim(b);
    Elem v(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) v[j] = a[j] + b[j];
    return normalize(std::move(v));
  }

  Elem negate(const Elem& a) const {
    check_dim(a);
    Elem v(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) v[j] = -a[j];
    return normalize(std::move(v));
  }

  /// Strict product order on lifts: a < b iff a <= b componentwise and a != b.
  static bool lift_lt(const Elem& a, const Elem& b) {
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] > b[j]) return false;
      if (a[j] < b[j]) strict = true;
    }
    return strict;
  }

  /// R(x,y,z) iff integers n2, n3 exist with x < y + n2*u < z + n3*u < x + u.
  /// The two chained inequalities pin each multiplier into a width-one
  /// interval per component, so the search space is at most two candidates
  /// for each of n2 and n3.
  bool rel(const Elem& x, const Elem& y, const Elem& z) const {
    check_dim(x);
    check_dim(y);
    check_dim(z);
    auto bounds = [&](const Elem& w, long long& lo, long long& hi) {
      // x <= w + m*u and w + m*u <= x + u componentwise
      lo = -(1LL << 40);
      hi = 1LL << 40;
      for (std::size_t j = 0; j < u.size(); ++j) {
        const int d = x[j] - w[j];
        long long l = d >= 0 ? (d + u[j] - 1) / u[j] : -((-d) / u[j]);  // ceil(d/u)
        long long h = (d + u[j]) >= 0 ? (d + u[j]) / u[j] : -((-(d + u[j]) + u[j] - 1) / u[j]);  // floor((d+u)/u)
        lo = std::max(lo, l);
        hi = std::min(hi, h);
      }
    };
    long long lo2, hi2, lo3, hi3;
    bounds(y, lo2, hi2);
    bounds(z, lo3, hi3);
    Elem xu(u.size()), ym(u.size()), zm(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) xu[j] = x[j] + u[j];
    for (long long n2 = lo2; n2 <= hi2; ++n2) {
      for (std::size_t j = 0; j < u.size(); ++j) ym[j] = y[j] + static_cast<int>(n2) * u[j];
      if (!lift_lt(x, ym)) continue;
      for (long long n3 = lo3; n3 <= hi3; ++n3) {
        for (std::size_t j = 0; j < u.size(); ++j) zm[j] = z[j] + static_cast<int>(n3) * u[j];
        if (lift_lt(ym, zm) && lift_lt(zm, xu)) return true;
      }
    }
    return false;
  }

  bool leq0(const Elem& x, const Elem& y) const { return x == y || x == zero_elem() || rel(zero_elem(), x, y); }
  bool lt0(const Elem& x, const Elem& y) const { return x != y && leq0(x, y); }

  /// A(C) for a wound-round of a lattice: zero plus the interior box points
  /// that are strictly comparable to another interior point.
  std::vector<Elem> non_isolated() const {
    std::vector<Elem> interior;
    Elem v(u.size(), 0);
    const Elem zero = zero_elem();
    auto walk = [&](auto&& self, std::size_t j) -> void {
      if (j == u.size()) {
        if (v != zero && !std::equal(v.begin(), v.end(), u.begin())) interior.push_back(v);
        return;
      }
      for (v[j] = 0; v[j] <= u[j]; ++v[j]) self(self, j + 1);
      v[j] = 0;
    };
    walk(walk, 0);
    std::vector<Elem> out{zero};
    for (const Elem& x : interior) {
      bool hit = false;
      for (const Elem& y : interior)
        if (lift_lt(x, y) || lift_lt(y, x)) { hit = true; break; }
      if (hit) out.push_back(x);
    }
    std::sort(out.begin() + 1, out.end());
    return out;
  }

  bool is_finite() const { return u.size() == 1; }

  /// Table form; only the rank-one quotient has a finite carrier.
  FinitePco to_finite() const {
    if (!is_finite()) throw std::domain_error("lattice quotient of rank >= 2 has an infinite carrier");
    const int n = u[0];
    FinitePco c = finite_pco_from(cyclic_group_tables(n), std::vector<char>(static_cast<std::size_t>(n) * n * n, 0));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (rel(Elem{x}, Elem{y}, Elem{z})) c.set_rel(x, y, z);
    return c;
  }

  std::string elem_str(const Elem& v) const {
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(v[j]);
    }
    return s + ")";
  }
};

inline LatticeQuotientPco wound_round(std::vector<int> u) {
  if (u.empty()) throw std::invalid_argument("unit vector is empty");
  for (int c : u)
    if (c < 1) throw std::invalid_argument("unit components must be positive");
  return LatticeQuotientPco{std::move(u)};
}

/// Normal-form reduction exposed as a free function.
inline LatticeQuotientPco::Elem lq_normalize(const LatticeQuotientPco& c, LatticeQuotientPco::Elem v) {
  return c.normalize(std::move(v));
}

inline bool lq_relation(const LatticeQuotientPco& c, const LatticeQuotientPco::Elem& x,
                        const LatticeQuotientPco::Elem& y, const LatticeQuotientPco::Elem& z) {
  return c.rel(x, y, z);
}

}  // namespace cyclord
