#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mv_algebra.hpp"

namespace cyclord {

/// An eventually-zero sequence (x1, x2, ...) with xi (+) xi+1 = xi, stored
/// with trailing zeros trimmed so equality of the term vectors is canonical
/// equality.  Good sequences encode the positive cone of the group the
/// algebra generates.
struct GoodSequence {
  const MvAlgebra* base = nullptr;
  std::vector<int> terms;

  int term(std::size_t i) const { return i < terms.size() ? terms[i] : base->zero; }
  bool empty() const { return terms.empty(); }

  friend bool operator==(const GoodSequence& a, const GoodSequence& b) {
    return a.base == b.base && a.terms == b.terms;
  }
};

inline void require_same_base(const GoodSequence& p, const GoodSequence& q) {
  if (p.base != q.base) throw std::invalid_argument("good sequences over different algebras");
}

inline GoodSequence trim(GoodSequence s) {
  while (!s.terms.empty() && s.terms.back() == s.base->zero) s.terms.pop_back();
  return s;
}

inline bool is_good_sequence(const MvAlgebra& a, const std::vector<int>& terms) {
  for (int t : terms) a.check_index(t);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i)
    if (a.oplus[terms[i]][terms[i + 1]] != terms[i]) return false;
  return true;
}

inline GoodSequence make_good(const MvAlgebra& a, std::vector<int> terms) {
  if (!is_good_sequence(a, terms)) throw std::invalid_argument("sequence is not good");
  return trim(GoodSequence{&a, std::move(terms)});
}

inline GoodSequence good_zero(const MvAlgebra& a) { return GoodSequence{&a, {}}; }

inline GoodSequence good_singleton(const MvAlgebra& a, int x) {
  a.check_index(x);
  if (x == a.zero) return good_zero(a);
  return GoodSequence{&a, {x}};
}

/// Monoid addition: z_i = x_i (+) (x_{i-1} (.) y_1) (+) ... (+) (x_1 (.) y_{i-1}) (+) y_i.
inline GoodSequence good_add(const GoodSequence& p, const GoodSequence& q) {
  require_same_base(p, q);
  const MvAlgebra& a = *p.base;
  const std::size_t len = p.terms.size() + q.terms.size();
  GoodSequence z{&a, std::vector<int>(len, a.zero)};
  for (std::size_t i = 1; i <= len; ++i) {
    int acc = p.term(i - 1);
    for (std::size_t j = 1; j < i; ++j)
      acc = a.oplus[acc][a.odot[p.term(i - 1 - j)][q.term(j - 1)]];
    acc = a.oplus[acc][q.term(i - 1)];
    z.terms[i - 1] = acc;
  }
  return trim(std::move(z));
}

/// Subtraction per the inverse rule: add the reversed complements of p, then
/// strip len(p) leading components which must each equal the top.  Returns
/// nullopt when p is not below q in the monoid order.
inline std::optional<GoodSequence> try_good_subtract(const GoodSequence& q, const GoodSequence& p) {
  require_same_base(q, p);
  const MvAlgebra& a = *q.base;
  std::vector<int> rev;
  rev.reserve(p.terms.size());
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) rev.push_back(a.neg[*it]);
  const GoodSequence sum = good_add(q, trim(GoodSequence{&a, std::move(rev)}));
  const std::size_t k = p.terms.size();
  for (std::size_t i = 0; i < k; ++i)
    if (sum.term(i) != a.one) return std::nullopt;
  const auto skip = static_cast<std::ptrdiff_t>(std::min(k, sum.terms.size()));
  std::vector<int> rest(sum.terms.begin() + skip, sum.terms.end());
  return trim(GoodSequence{&a, std::move(rest)});
}

inline GoodSequence good_subtract(const GoodSequence& q, const GoodSequence& p) {
  auto z = try_good_subtract(q, p);
  if (!z) throw std::domain_error("good_subtract: subtrahend is not below the minuend");
  return *z;
}

/// p <= q in the monoid order, i.e. q = p + z for some good z.
inline bool monoid_leq(const GoodSequence& p, const GoodSequence& q) {
  return try_good_subtract(q, p).has_value();
}

/// The unique good sequence with the same monoid sum as the given parts,
/// obtained by folding good_add over singletons.
inline GoodSequence good_decompose(const MvAlgebra& a, const std::vector<int>& parts) {
  GoodSequence acc = good_zero(a);
  for (int x : parts) acc = good_add(acc, good_singleton(a, x));
  return acc;
}

inline GoodSequence seq_meet(const GoodSequence& p, const GoodSequence& q) {
  require_same_base(p, q);
  const MvAlgebra& a = *p.base;
  const std::size_t len = std::max(p.terms.size(), q.terms.size());
  GoodSequence z{&a, std::vector<int>(len, a.zero)};
  for (std::size_t i = 0; i < len; ++i) z.terms[i] = a.meet[p.term(i)][q.term(i)];
  return trim(std::move(z));
}

inline GoodSequence seq_join(const GoodSequence& p, const GoodSequence& q) {
  require_same_base(p, q);
  const MvAlgebra& a = *p.base;
  const std::size_t len = std::max(p.terms.size(), q.terms.size());
  GoodSequence z{&a, std::vector<int>(len, a.zero)};
  for (std::size_t i = 0; i < len; ++i) z.terms[i] = a.join[p.term(i)][q.term(i)];
  return trim(std::move(z));
}

/// A group element as a normalized pair of good sequences: pos - neg with
/// componentwise meet zero.
struct ChangElement {
  GoodSequence pos;
  GoodSequence neg;

  friend bool operator==(const ChangElement& a, const ChangElement& b) {
    return a.pos == b.pos && a.neg == b.neg;
  }
};

inline ChangElement chang_normalize(const GoodSequence& pos, const GoodSequence& neg) {
  require_same_base(pos, neg);
  const GoodSequence m = seq_meet(pos, neg);
  return ChangElement{good_subtract(pos, m), good_subtract(neg, m)};
}

inline ChangElement chang_zero(const MvAlgebra& a) { return ChangElement{good_zero(a), good_zero(a)}; }

inline ChangElement chang_from_good(GoodSequence pos) {
  const MvAlgebra& a = *pos.base;
  return ChangElement{std::move(pos), good_zero(a)};
}

inline ChangElement chang_add(const ChangElement& x, const ChangElement& y) {
  return chang_normalize(good_add(x.pos, y.pos), good_add(x.neg, y.neg));
}

inline ChangElement chang_negate(const ChangElement& x) { return ChangElement{x.neg, x.pos}; }

inline ChangElement chang_sub(const ChangElement& x, const ChangElement& y) {
  return chang_add(x, chang_negate(y));
}

/// Lattice operations via the positive shift: both operands are translated
/// by neg_x + neg_y, met/joined componentwise as good sequences, and shifted
/// back.  Translation invariance of the group order makes this exact.
inline ChangElement chang_meet(const ChangElement& x, const ChangElement& y) {
  const GoodSequence shift = good_add(x.neg, y.neg);
  const GoodSequence px = good_add(x.pos, y.neg);
  const GoodSequence py = good_add(y.pos, x.neg);
  return chang_normalize(seq_meet(px, py), shift);
}

inline ChangElement chang_join(const ChangElement& x, const ChangElement& y) {
  const GoodSequence shift = good_add(x.neg, y.neg);
  const GoodSequence px = good_add(x.pos, y.neg);
  const GoodSequence py = good_add(y.pos, x.neg);
  return chang_normalize(seq_join(px, py), shift);
}

inline bool chang_leq(const ChangElement& x, const ChangElement& y) {
  return monoid_leq(good_add(x.pos, y.neg), good_add(y.pos, x.neg));
}

}  // namespace cyclord
