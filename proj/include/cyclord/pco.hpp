#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclord {

/// A finite abelian group as explicit tables over {0, ..., size-1}.
struct FiniteGroup {
  int size = 0;
  int zero = 0;
  std::vector<std::vector<int>> add;
  std::vector<int> neg;

  void check_index(int x) const {
    if (x < 0 || x >= size) throw std::out_of_range("group index " + std::to_string(x) + " out of range");
  }
  int sum(int x, int y) const { return add[x][y]; }
  int negate(int x) const { return neg[x]; }
  int sub(int x, int y) const { return add[x][neg[y]]; }
  int nfold(int x, int n) const {
    int acc = zero;
    for (int i = 0; i < n; ++i) acc = add[acc][x];
    return acc;
  }
  int element_order(int x) const {
    int acc = x, n = 1;
    while (acc != zero) { acc = add[acc][x]; ++n; }
    return n;
  }

  /// Structural validation: closure, associativity, identity, inverses,
  /// commutativity.
  void validate() const {
    if (size <= 0 || static_cast<int>(add.size()) != size || static_cast<int>(neg.size()) != size)
      throw std::invalid_argument("group tables have inconsistent sizes");
    for (int x = 0; x < size; ++x) {
      if (static_cast<int>(add[x].size()) != size) throw std::invalid_argument("add table is not square");
      for (int y = 0; y < size; ++y) {
        if (add[x][y] < 0 || add[x][y] >= size) throw std::invalid_argument("add entry out of range");
        if (add[x][y] != add[y][x]) throw std::invalid_argument("addition is not commutative");
      }
      if (neg[x] < 0 || neg[x] >= size) throw std::invalid_argument("neg entry out of range");
      if (add[x][zero] != x) throw std::invalid_argument("zero is not an identity");
      if (add[x][neg[x]] != zero) throw std::invalid_argument("neg is not an inverse");
    }
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        for (int z = 0; z < size; ++z)
          if (add[x][add[y][z]] != add[add[x][y]][z]) throw std::invalid_argument("addition is not associative");
  }
};

inline FiniteGroup cyclic_group_tables(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
  FiniteGroup g;
  g.size = n;
  g.zero = 0;
  g.add.assign(n, std::vector<int>(n, 0));
  g.neg.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    g.neg[x] = (n - x) % n;
    for (int y = 0; y < n; ++y) g.add[x][y] = (x + y) % n;
  }
  return g;
}

/// A finite partially cyclically ordered group: group tables plus the
/// ternary relation R stored as a bitset over size^3 triples.
struct FinitePco : FiniteGroup {
  std::vector<char> r;

  using Elem = int;

  bool rel(int x, int y, int z) const { return r[(static_cast<std::size_t>(x) * size + y) * size + z] != 0; }
  void set_rel(int x, int y, int z, bool v = true) {
    r[(static_cast<std::size_t>(x) * size + y) * size + z] = v ? 1 : 0;
  }

  int zero_elem() const { return zero; }
  bool leq0(int x, int y) const { return x == y || x == zero || rel(zero, x, y); }
  bool lt0(int x, int y) const { return x != y && leq0(x, y); }

  /// A(C): zero together with every element strictly comparable to some
  /// nonzero element under the base-point order.
  std::vector<int> non_isolated() const {
    std::vector<int> out;
    for (int x = 0; x < size; ++x) {
      if (x == zero) { out.push_back(x); continue; }
      bool hit = false;
      for (int y = 0; y < size && !hit; ++y)
        if (y != zero && (lt0(x, y) || lt0(y, x))) hit = true;
      if (hit) out.push_back(x);
    }
    return out;
  }

  std::string elem_str(int x) const { return std::to_string(x); }
};

inline FinitePco finite_pco_from(FiniteGroup g, std::vector<char> r) {
  FinitePco c;
  static_cast<FiniteGroup&>(c) = std::move(g);
  if (r.size() != static_cast<std::size_t>(c.size) * c.size * c.size)
    throw std::invalid_argument("relation bitset has wrong size");
  c.r = std::move(r);
  return c;
}

/// Z/nZ with the canonical cyclic order: R(x,y,z) iff the representatives
/// satisfy 0 != (y-x mod n) < (z-x mod n).
inline FinitePco make_cyclic_group(int n) {
  FinitePco c = finite_pco_from(cyclic_group_tables(n), std::vector<char>(static_cast<std::size_t>(n) * n * n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int dy = (y - x + n) % n;
      if (dy == 0) continue;
      for (int z = 0; z < n; ++z) {
        const int dz = (z - x + n) % n;
        if (dy < dz) c.set_rel(x, y, z);
      }
    }
  return c;
}

/// Componentwise product order: R((x1,x2),(y1,y2),(z1,z2)) iff both
/// coordinates are related.  Pair (a,b) lives at index a*|C2| + b.
inline FinitePco make_product_pco(const FinitePco& c1, const FinitePco& c2) {
  const int n1 = c1.size, n2 = c2.size, n = n1 * n2;
  FiniteGroup g;
  g.size = n;
  g.zero = c1.zero * n2 + c2.zero;
  g.add.assign(n, std::vector<int>(n, 0));
  g.neg.assign(n, 0);
  auto pack = [&](int a, int b) { return a * n2 + b; };
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) {
      g.neg[pack(a, b)] = pack(c1.neg[a], c2.neg[b]);
      for (int a2 = 0; a2 < n1; ++a2)
        for (int b2 = 0; b2 < n2; ++b2)
          g.add[pack(a, b)][pack(a2, b2)] = pack(c1.add[a][a2], c2.add[b][b2]);
    }
  FinitePco c = finite_pco_from(std::move(g), std::vector<char>(static_cast<std::size_t>(n) * n * n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (c1.rel(x / n2, y / n2, z / n2) && c2.rel(x % n2, y % n2, z % n2)) c.set_rel(x, y, z);
  return c;
}

struct PcoAxiomReport {
  bool strict = true;
  bool cyclic = true;
  bool order_per_base = true;
  bool compatible = true;
  bool is_co = false;  // every base-point order linear
  std::vector<int> witness;

  bool all_pass() const { return strict && cyclic && order_per_base && compatible; }
};

/// Exhaustive check of the four p.c.o. axioms; the first failing scan keeps
/// its lexicographically least witness.  Also decides whether every <=_x is
/// linear.
inline PcoAxiomReport check_pco_axioms(const FinitePco& c) {
  PcoAxiomReport rep;
  const int n = c.size;
  auto witness = [&](std::initializer_list<int> w) {
    if (rep.witness.empty()) rep.witness.assign(w);
  };
  for (int x = 0; x < n && rep.strict; ++x)
    for (int y = 0; y < n && rep.strict; ++y)
      for (int z = 0; z < n; ++z)
        if (c.rel(x, y, z) && (x == y || y == z || z == x)) {
          rep.strict = false;
          witness({x, y, z});
          break;
        }
  for (int x = 0; x < n && rep.cyclic; ++x)
    for (int y = 0; y < n && rep.cyclic; ++y)
      for (int z = 0; z < n; ++z)
        if (c.rel(x, y, z) && !c.rel(y, z, x)) {
          rep.cyclic = false;
          witness({x, y, z});
          break;
        }
  // <=_x is a partial order iff R(x,-,-) is asymmetric and transitive
  for (int x = 0; x < n && rep.order_per_base; ++x) {
    for (int y = 0; y < n && rep.order_per_base; ++y)
      for (int z = 0; z < n; ++z) {
        if (c.rel(x, y, z) && c.rel(x, z, y)) {
          rep.order_per_base = false;
          witness({x, y, z});
          break;
        }
      }
    for (int y = 0; y < n && rep.order_per_base; ++y)
      for (int z = 0; z < n && rep.order_per_base; ++z) {
        if (!c.rel(x, y, z)) continue;
        for (int w = 0; w < n; ++w)
          if (c.rel(x, z, w) && !c.rel(x, y, w)) {
            rep.order_per_base = false;
            witness({x, y, z, w});
            break;
          }
      }
  }
  for (int x = 0; x < n && rep.compatible; ++x)
    for (int y = 0; y < n && rep.compatible; ++y)
      for (int z = 0; z < n && rep.compatible; ++z) {
        if (!c.rel(x, y, z)) continue;
        for (int v = 0; v < n; ++v)
          if (!c.rel(c.add[x][v], c.add[y][v], c.add[z][v])) {
            rep.compatible = false;
            witness({x, y, z, v});
            break;
          }
      }
  rep.is_co = rep.all_pass();
  for (int x = 0; x < n && rep.is_co; ++x)
    for (int y = 0; y < n && rep.is_co; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || z == x) continue;
        if (!c.rel(x, y, z) && !c.rel(x, z, y)) { rep.is_co = false; break; }
      }
  return rep;
}

inline bool is_co(const FinitePco& c) { return check_pco_axioms(c).is_co; }

/// Builds R from a strict partial order on the nonzero elements via
/// R(x,y,z) iff 0 != y-x < z-x.  The order must satisfy the winding
/// hypothesis x < y implies y-x < -x; violations are reported with the
/// offending pair.
inline FinitePco r_from_order(const FiniteGroup& g, const std::vector<std::pair<int, int>>& pairs) {
  const int n = g.size;
  std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
  for (auto [x, y] : pairs) {
    g.check_index(x);
    g.check_index(y);
    if (x == g.zero || y == g.zero) throw std::invalid_argument("order pairs must avoid the group zero");
    if (x == y) throw std::invalid_argument("order must be irreflexive");
    lt[static_cast<std::size_t>(x) * n + y] = 1;
  }
  auto less = [&](int x, int y) { return lt[static_cast<std::size_t>(x) * n + y] != 0; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      if (less(y, x)) throw std::invalid_argument("order is not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      for (int z = 0; z < n; ++z)
        if (less(y, z) && !less(x, z))
          throw std::invalid_argument("order is not transitive at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
      if (!less(g.sub(y, x), g.neg[x]))
        throw std::invalid_argument("winding hypothesis fails at pair (" + std::to_string(x) + "," + std::to_string(y) + "): " +
                                    std::to_string(g.sub(y, x)) + " is not below " + std::to_string(g.neg[x]));
    }
  FinitePco c = finite_pco_from(g, std::vector<char>(static_cast<std::size_t>(n) * n * n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      const int dy = g.sub(y, x);
      if (dy == g.zero) continue;
      for (int z = 0; z < n; ++z) {
        const int dz = g.sub(z, x);
        if (dz != g.zero && less(dy, dz)) c.set_rel(x, y, z);
      }
    }
  return c;
}

/// The restriction of the base-point order to the nonzero elements, as a
/// pair list (for round-tripping r_from_order).
inline std::vector<std::pair<int, int>> order_from_pco(const FinitePco& c) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < c.size; ++x)
    for (int y = 0; y < c.size; ++y)
      if (x != c.zero && y != c.zero && c.lt0(x, y)) out.emplace_back(x, y);
  return out;
}

/// R(x1,...,xn) as the chain conjunction R(x1,x2,x3) & R(x1,x3,x4) & ...
inline bool r_tuple(const FinitePco& c, const std::vector<int>& xs) {
  if (xs.size() < 3) throw std::invalid_argument("r_tuple needs at least three elements");
  for (int x : xs) c.check_index(x);
  for (std::size_t i = 2; i < xs.size(); ++i)
    if (!c.rel(xs[0], xs[i - 1], xs[i])) return false;
  return true;
}

/// Group homomorphism that preserves R on triples with pairwise distinct
/// images.
inline bool c_hom_check(const std::vector<int>& f, const FinitePco& c, const FinitePco& d) {
  if (static_cast<int>(f.size()) != c.size) throw std::invalid_argument("map must be total on the domain");
  for (int v : f) d.check_index(v);
  for (int x = 0; x < c.size; ++x)
    for (int y = 0; y < c.size; ++y)
      if (f[c.add[x][y]] != d.add[f[x]][f[y]]) return false;
  for (int x = 0; x < c.size; ++x)
    for (int y = 0; y < c.size; ++y)
      for (int z = 0; z < c.size; ++z) {
        if (!c.rel(x, y, z)) continue;
        if (f[x] == f[y] || f[y] == f[z] || f[z] == f[x]) continue;
        if (!d.rel(f[x], f[y], f[z])) return false;
      }
  return true;
}

}  // namespace cyclord
