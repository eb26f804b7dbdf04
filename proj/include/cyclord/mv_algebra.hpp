#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclord {

/// A finite MV-algebra as explicit operation tables over the dense carrier
/// {0, ..., size-1}.  Derived tables (odot, meet, join, leq) are computed
/// eagerly from the defining oplus/neg terms.  Construction does not check
/// the MV axioms, so invalid structures are representable and can be fed to
/// check_mv_axioms.
struct MvAlgebra {
  int size = 0;
  int zero = 0;
  int one = 0;  // neg[zero]
  std::vector<std::vector<int>> oplus;
  std::vector<int> neg;
  // derived
  std::vector<std::vector<int>> odot;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<char>> leq;

  void check_index(int x) const {
    if (x < 0 || x >= size) throw std::out_of_range("carrier index " + std::to_string(x) + " out of range 0.." + std::to_string(size - 1));
  }

  int sum(int x, int y) const { check_index(x); check_index(y); return oplus[x][y]; }
  int negate(int x) const { check_index(x); return neg[x]; }
  int prod(int x, int y) const { check_index(x); check_index(y); return odot[x][y]; }
  int inf(int x, int y) const { check_index(x); check_index(y); return meet[x][y]; }
  int sup(int x, int y) const { check_index(x); check_index(y); return join[x][y]; }
  bool le(int x, int y) const { check_index(x); check_index(y); return leq[x][y] != 0; }

  bool lt(int x, int y) const { return x != y && le(x, y); }

  /// n.x = x (+) ... (+) x, n times; 0.x = zero.
  int nfold_sum(int x, int n) const {
    int acc = zero;
    for (int i = 0; i < n; ++i) acc = oplus[acc][x];
    return acc;
  }

  /// x^n = x (.) ... (.) x, n times; x^0 = one.
  int nfold_prod(int x, int n) const {
    int acc = one;
    for (int i = 0; i < n; ++i) acc = odot[acc][x];
    return acc;
  }

  bool is_chain() const {
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        if (!leq[x][y] && !leq[y][x]) return false;
    return true;
  }
};

/// Builds an MvAlgebra from raw tables.  Validates shape and index closure
/// only; MV1-MV6 are the business of check_mv_axioms.
inline MvAlgebra build_mv(std::vector<std::vector<int>> oplus, std::vector<int> neg, int zero) {
  const int n = static_cast<int>(oplus.size());
  if (n == 0) throw std::invalid_argument("oplus table is empty");
  if (static_cast<int>(neg.size()) != n) throw std::invalid_argument("neg table size mismatch");
  if (zero < 0 || zero >= n) throw std::invalid_argument("zero index out of range");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(oplus[x].size()) != n)
      throw std::invalid_argument("oplus table is not square at row " + std::to_string(x));
    for (int y = 0; y < n; ++y)
      if (oplus[x][y] < 0 || oplus[x][y] >= n)
        throw std::invalid_argument("oplus entry (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    if (neg[x] < 0 || neg[x] >= n)
      throw std::invalid_argument("neg entry " + std::to_string(x) + " out of range");
  }

  MvAlgebra a;
  a.size = n;
  a.zero = zero;
  a.oplus = std::move(oplus);
  a.neg = std::move(neg);
  a.one = a.neg[a.zero];

  a.odot.assign(n, std::vector<int>(n, 0));
  a.meet.assign(n, std::vector<int>(n, 0));
  a.join.assign(n, std::vector<int>(n, 0));
  a.leq.assign(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // x (.) y = neg(neg x (+) neg y)
      a.odot[x][y] = a.neg[a.oplus[a.neg[x]][a.neg[y]]];
      // x v y = neg(neg x (+) y) (+) y
      a.join[x][y] = a.oplus[a.neg[a.oplus[a.neg[x]][y]]][y];
      // x ^ y = neg(neg(x (+) neg y) (+) neg y)
      a.meet[x][y] = a.neg[a.oplus[a.neg[a.oplus[x][a.neg[y]]]][a.neg[y]]];
    }
  // x <= y iff some z has x (+) z = y
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) a.leq[x][a.oplus[x][z]] = 1;
  return a;
}

/// Mixed-radix coordinates for the gamma box [0,u]: index 0 is the zero
/// vector, the first coordinate is most significant.
inline std::vector<int> gamma_coords(const std::vector<int>& u, int index) {
  std::vector<int> v(u.size(), 0);
  for (int j = static_cast<int>(u.size()) - 1; j >= 0; --j) {
    v[j] = index % (u[j] + 1);
    index /= (u[j] + 1);
  }
  return v;
}

inline int gamma_index(const std::vector<int>& u, const std::vector<int>& v) {
  int idx = 0;
  for (std::size_t j = 0; j < u.size(); ++j) idx = idx * (u[j] + 1) + v[j];
  return idx;
}

/// The interval algebra on the integer box [0,u] with truncated addition
/// x (+) y = (x+y) ^ u and complement u - x.  k = 1 yields the (u+1)-element
/// chain.
inline MvAlgebra make_gamma(const std::vector<int>& u) {
  if (u.empty()) throw std::invalid_argument("unit vector is empty");
  long long total = 1;
  for (int c : u) {
    if (c < 1) throw std::invalid_argument("unit components must be positive");
    total *= c + 1;
    if (total > 1 << 20) throw std::invalid_argument("gamma box too large");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(u.size());
  std::vector<std::vector<int>> oplus(n, std::vector<int>(n, 0));
  std::vector<int> neg(n, 0);
  std::vector<int> x(k), y(k), z(k);
  for (int i = 0; i < n; ++i) {
    x = gamma_coords(u, i);
    for (int j = 0; j < k; ++j) z[j] = u[j] - x[j];
    neg[i] = gamma_index(u, z);
    for (int jdx = 0; jdx < n; ++jdx) {
      y = gamma_coords(u, jdx);
      for (int j = 0; j < k; ++j) z[j] = std::min(x[j] + y[j], u[j]);
      oplus[i][jdx] = gamma_index(u, z);
    }
  }
  return build_mv(std::move(oplus), std::move(neg), 0);
}

/// Cartesian product with componentwise operations.  Pair (a,b) lives at
/// index a*|B| + b.
inline MvAlgebra product(const MvAlgebra& a, const MvAlgebra& b) {
  const int n = a.size * b.size;
  std::vector<std::vector<int>> oplus(n, std::vector<int>(n, 0));
  std::vector<int> neg(n, 0);
  auto pack = [&](int x, int y) { return x * b.size + y; };
  for (int xa = 0; xa < a.size; ++xa)
    for (int xb = 0; xb < b.size; ++xb) {
      neg[pack(xa, xb)] = pack(a.neg[xa], b.neg[xb]);
      for (int ya = 0; ya < a.size; ++ya)
        for (int yb = 0; yb < b.size; ++yb)
          oplus[pack(xa, xb)][pack(ya, yb)] = pack(a.oplus[xa][ya], b.oplus[xb][yb]);
    }
  return build_mv(std::move(oplus), std::move(neg), pack(a.zero, b.zero));
}

/// Per-axiom verdict of the exhaustive MV1-MV6 scan.  A failing axiom
/// carries the lexicographically least witness; unused witness slots stay -1.
struct AxiomReport {
  struct Entry {
    bool pass = true;
    std::array<int, 3> witness{{-1, -1, -1}};
  };
  std::array<Entry, 6> axiom;  // MV1..MV6 at indices 0..5

  bool all_pass() const {
    for (const auto& e : axiom)
      if (!e.pass) return false;
    return true;
  }

  std::optional<int> first_failed() const {
    for (int i = 0; i < 6; ++i)
      if (!axiom[i].pass) return i + 1;
    return std::nullopt;
  }

  std::string summary() const {
    std::string s;
    for (int i = 0; i < 6; ++i) {
      s += "MV" + std::to_string(i + 1) + (axiom[i].pass ? ": pass" : ": FAIL at (");
      if (!axiom[i].pass) {
        const auto& w = axiom[i].witness;
        for (int j = 0; j < 3; ++j) {
          if (w[j] < 0) break;
          if (j) s += ",";
          s += std::to_string(w[j]);
        }
        s += ")";
      }
      s += "\n";
    }
    return s;
  }
};

/// Exhaustive check of MV1-MV6.  Each axiom is scanned independently in
/// lexicographic order, so the reported witness is deterministic.
inline AxiomReport check_mv_axioms(const MvAlgebra& a) {
  AxiomReport r;
  const int n = a.size;
  auto fail = [&](int ax, int x, int y, int z) {
    if (!r.axiom[ax].pass) return;
    r.axiom[ax].pass = false;
    r.axiom[ax].witness = {x, y, z};
  };
  // MV3: x + 0 = x, MV4: neg neg x = x, MV5: x + neg 0 = neg 0
  for (int x = 0; x < n; ++x) {
    if (a.oplus[x][a.zero] != x) { fail(2, x, -1, -1); break; }
  }
  for (int x = 0; x < n; ++x) {
    if (a.neg[a.neg[x]] != x) { fail(3, x, -1, -1); break; }
  }
  for (int x = 0; x < n; ++x) {
    if (a.oplus[x][a.one] != a.one) { fail(4, x, -1, -1); break; }
  }
  // MV2: commutativity
  for (int x = 0; x < n && r.axiom[1].pass; ++x)
    for (int y = 0; y < n; ++y)
      if (a.oplus[x][y] != a.oplus[y][x]) { fail(1, x, y, -1); break; }
  // MV6: neg(neg x + y) + y = neg(neg y + x) + x
  for (int x = 0; x < n && r.axiom[5].pass; ++x)
    for (int y = 0; y < n; ++y) {
      const int lhs = a.oplus[a.neg[a.oplus[a.neg[x]][y]]][y];
      const int rhs = a.oplus[a.neg[a.oplus[a.neg[y]][x]]][x];
      if (lhs != rhs) { fail(5, x, y, -1); break; }
    }
  // MV1: associativity
  for (int x = 0; x < n && r.axiom[0].pass; ++x)
    for (int y = 0; y < n && r.axiom[0].pass; ++y)
      for (int z = 0; z < n; ++z)
        if (a.oplus[x][a.oplus[y][z]] != a.oplus[a.oplus[x][y]][z]) { fail(0, x, y, z); break; }
  return r;
}

}  // namespace cyclord
