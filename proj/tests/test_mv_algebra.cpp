#include <catch_amalgamated.hpp>

#include <random>

#include <cyclord/mv_algebra.hpp>

using namespace cyclord;

namespace {

// independent integer oracle for the chain of length n: truncated addition
// on {0, ..., n}
MvAlgebra lukasiewicz(int n) {
  const int size = n + 1;
  std::vector<std::vector<int>> oplus(size, std::vector<int>(size, 0));
  std::vector<int> neg(size, 0);
  for (int x = 0; x <= n; ++x) {
    neg[x] = n - x;
    for (int y = 0; y <= n; ++y) oplus[x][y] = std::min(x + y, n);
  }
  return build_mv(std::move(oplus), std::move(neg), 0);
}

}  // namespace

TEST_CASE("build_mv accepts the two-element Boolean algebra") {
  const MvAlgebra a = build_mv({{0, 1}, {1, 1}}, {1, 0}, 0);
  REQUIRE(a.size == 2);
  REQUIRE(a.one == 1);
  REQUIRE(check_mv_axioms(a).all_pass());
}

TEST_CASE("build_mv rejects malformed tables") {
  REQUIRE_THROWS_AS(build_mv({{0, 2}, {1, 1}}, {1, 0}, 0), std::invalid_argument);  // entry = size
  REQUIRE_THROWS_AS(build_mv({{0, 1}, {1}}, {1, 0}, 0), std::invalid_argument);     // non-square
  REQUIRE_THROWS_AS(build_mv({{0, 1}, {1, 1}}, {1, 0}, 5), std::invalid_argument);  // zero out of range
  REQUIRE_THROWS_AS(build_mv({{0, 1}, {1, 1}}, {1, 3}, 0), std::invalid_argument);  // neg out of range
}

TEST_CASE("generated chain tables match make_gamma") {
  const MvAlgebra a = lukasiewicz(3);
  const MvAlgebra g = make_gamma({3});
  REQUIRE(a.oplus == g.oplus);
  REQUIRE(a.neg == g.neg);
  REQUIRE(check_mv_axioms(a).all_pass());
}

TEST_CASE("axiom checker finds witnesses under mutation") {
  MvAlgebra a = lukasiewicz(2);
  REQUIRE(check_mv_axioms(a).all_pass());

  SECTION("negation fixed at zero breaks MV5 or MV6") {
    std::vector<int> neg = a.neg;
    neg[0] = 0;  // force neg 0 = 0
    const MvAlgebra bad = build_mv(a.oplus, neg, 0);
    const AxiomReport rep = check_mv_axioms(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE((!rep.axiom[4].pass || !rep.axiom[5].pass));
    const auto failed = rep.first_failed();
    REQUIRE(failed.has_value());
    REQUIRE_FALSE(rep.axiom[*failed - 1].witness[0] < 0);
  }

  SECTION("gamma((4)) passes") {
    REQUIRE(check_mv_axioms(make_gamma({4})).all_pass());
  }
}

TEST_CASE("derived operations follow the defining terms") {
  const MvAlgebra a = lukasiewicz(3);
  // integer oracle: x (.) y = max(x + y - 3, 0)
  REQUIRE(a.prod(2, 2) == 1);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      REQUIRE(a.prod(x, y) == std::max(x + y - 3, 0));
      REQUIRE(a.inf(x, y) == std::min(x, y));
      REQUIRE(a.sup(x, y) == std::max(x, y));
      REQUIRE(a.le(x, y) == (x <= y));
    }
  REQUIRE(a.le(1, 2));
  for (int x = 0; x < a.size; ++x) REQUIRE(a.inf(x, a.zero) == a.zero);
  REQUIRE_THROWS_AS(a.prod(1, 9), std::out_of_range);
}

TEST_CASE("natural order is a bounded partial order with antitone negation") {
  for (const auto& u : {std::vector<int>{4}, std::vector<int>{1, 1}, std::vector<int>{2, 3}}) {
    const MvAlgebra a = make_gamma(u);
    for (int x = 0; x < a.size; ++x) {
      REQUIRE(a.le(x, x));
      REQUIRE(a.le(a.zero, x));
      REQUIRE(a.le(x, a.one));
      for (int y = 0; y < a.size; ++y) {
        if (a.le(x, y) && a.le(y, x)) REQUIRE(x == y);
        REQUIRE(a.le(x, y) == a.le(a.neg[y], a.neg[x]));
        for (int z = 0; z < a.size; ++z)
          if (a.le(x, y) && a.le(y, z)) REQUIRE(a.le(x, z));
      }
    }
  }
}

TEST_CASE("meet and join realize order infima and suprema") {
  for (const auto& u : {std::vector<int>{5}, std::vector<int>{2, 3}}) {
    const MvAlgebra a = make_gamma(u);
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < a.size; ++y) {
        const int m = a.inf(x, y);
        REQUIRE(a.le(m, x));
        REQUIRE(a.le(m, y));
        const int j = a.sup(x, y);
        REQUIRE(a.le(x, j));
        REQUIRE(a.le(y, j));
        for (int z = 0; z < a.size; ++z) {
          if (a.le(z, x) && a.le(z, y)) REQUIRE(a.le(z, m));
          if (a.le(x, z) && a.le(y, z)) REQUIRE(a.le(j, z));
        }
      }
  }
}

TEST_CASE("gamma boxes satisfy the truncated-sum identity") {
  // (x (+) y) + (x (.) y) = x + y as integer vectors
  for (const auto& u : {std::vector<int>{4}, std::vector<int>{1, 1}, std::vector<int>{2, 3}, std::vector<int>{2, 2, 2}}) {
    const MvAlgebra a = make_gamma(u);
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < a.size; ++y) {
        const auto vx = gamma_coords(u, x);
        const auto vy = gamma_coords(u, y);
        const auto vs = gamma_coords(u, a.oplus[x][y]);
        const auto vp = gamma_coords(u, a.odot[x][y]);
        for (std::size_t j = 0; j < u.size(); ++j) REQUIRE(vs[j] + vp[j] == vx[j] + vy[j]);
      }
  }
}

TEST_CASE("gamma examples") {
  const MvAlgebra chain = make_gamma({4});
  REQUIRE(chain.size == 5);
  REQUIRE(chain.is_chain());
  REQUIRE(chain.sum(2, 3) == 4);
  REQUIRE(chain.negate(1) == 3);

  const MvAlgebra square = make_gamma({1, 1});
  REQUIRE(square.size == 4);
  REQUIRE_FALSE(square.is_chain());
  // interior elements are complements of each other
  const int x = gamma_index({1, 1}, {0, 1});
  REQUIRE(square.neg[x] == gamma_index({1, 1}, {1, 0}));

  REQUIRE_THROWS_AS(make_gamma({0}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_gamma({2, -1}), std::invalid_argument);
}

TEST_CASE("random tables that pass the axioms have coherent derived structure") {
  // soundness of the checker: whenever a random table clears MV1-MV6, the
  // natural order must be a bounded partial order and meet/join its
  // infima/suprema
  std::mt19937 rng(424242);
  int accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> oplus(n, std::vector<int>(n));
    std::vector<int> neg(n);
    for (int x = 0; x < n; ++x) {
      neg[x] = static_cast<int>(rng() % n);
      for (int y = 0; y < n; ++y) oplus[x][y] = static_cast<int>(rng() % n);
    }
    const MvAlgebra a = build_mv(std::move(oplus), std::move(neg), 0);
    if (!check_mv_axioms(a).all_pass()) continue;
    ++accepted;
    for (int x = 0; x < n; ++x) {
      REQUIRE(a.le(a.zero, x));
      REQUIRE(a.le(x, a.one));
      for (int y = 0; y < n; ++y) {
        if (a.le(x, y) && a.le(y, x)) REQUIRE(x == y);
        REQUIRE(a.le(a.inf(x, y), x));
        REQUIRE(a.le(x, a.sup(x, y)));
        REQUIRE(a.le(x, y) == a.le(a.neg[y], a.neg[x]));
        for (int z = 0; z < n; ++z) {
          if (a.le(z, x) && a.le(z, y)) REQUIRE(a.le(z, a.inf(x, y)));
          if (a.le(x, z) && a.le(y, z)) REQUIRE(a.le(a.sup(x, y), z));
        }
      }
    }
  }
  REQUIRE(accepted > 0);
}

TEST_CASE("products are componentwise and preserve the axioms") {
  const MvAlgebra l2 = lukasiewicz(2);
  const MvAlgebra l3 = lukasiewicz(3);
  const MvAlgebra p = product(l2, l3);
  REQUIRE(p.size == 12);
  REQUIRE(check_mv_axioms(p).all_pass());
  const int top1 = 2 * l3.size + 0;  // (1, 0) with 1 the top of the first factor
  const int top2 = 0 * l3.size + 3;
  REQUIRE(p.oplus[top1][top2] == p.one);
}
