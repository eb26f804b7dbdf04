#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include <cyclord/correspondence.hpp>
#include <cyclord/good_sequence.hpp>
#include <cyclord/model_check.hpp>

using namespace cyclord;

TEST_CASE("cyclically ordered group of a chain") {
  const MvAlgebra l4 = make_gamma({4});
  const FinitePco c = co_from_chain(l4);
  REQUIRE(c.size == 4);
  REQUIRE(check_pco_axioms(c).is_co);
  REQUIRE(pco_iso(c, make_cyclic_group(4)).has_value());
  // 2 + 3 = 2 (.) 3 = 1 since the truncated sum saturates
  REQUIRE(c.add[2][3] == 1);

  const FinitePco trivial = co_from_chain(make_gamma({1}));
  REQUIRE(trivial.size == 1);

  REQUIRE_THROWS_AS(co_from_chain(make_gamma({1, 1})), std::domain_error);
}

TEST_CASE("chain of a cyclically ordered group") {
  const FinitePco z4 = make_cyclic_group(4);
  const MvAlgebra a = chain_from_co(z4);
  REQUIRE(a.size == 5);
  REQUIRE(check_mv_axioms(a).all_pass());
  REQUIRE(mv_iso(a, make_gamma({4})).has_value());

  const MvAlgebra a5 = chain_from_co(make_cyclic_group(5));
  REQUIRE(a5.oplus[2][2] == 4);      // 2 <_0 4, no wrap
  REQUIRE(a5.oplus[3][3] == a5.one); // 3 + 3 = 1 <=_0 3, wraps to the top

  REQUIRE_THROWS_AS(chain_from_co(make_product_pco(make_cyclic_group(5), make_cyclic_group(5))), std::domain_error);
}

TEST_CASE("the interpretation maps invert each other on small instances") {
  for (int n = 1; n <= 15; ++n) {
    const MvAlgebra chain = make_gamma({n});
    REQUIRE(mv_iso(chain_from_co(co_from_chain(chain)), chain, 24).has_value());
  }
  for (int n = 1; n <= 16; ++n) {
    const FinitePco c = make_cyclic_group(n);
    REQUIRE(pco_iso(co_from_chain(chain_from_co(c)), c, 24).has_value());
  }
}

TEST_CASE("chain_from_co coincides with the canonical construction from three elements on") {
  for (int n = 3; n <= 10; ++n) {
    const FinitePco c = make_cyclic_group(n);
    const MvAlgebra via_chain = chain_from_co(c);
    const MvAlgebra via_canonical = canonical_mv(c).algebra;
    REQUIRE(via_chain.oplus == via_canonical.oplus);
    REQUIRE(via_chain.neg == via_canonical.neg);
  }
}

TEST_CASE("winding-number group of a chain") {
  const MvAlgebra l4 = make_gamma({4});
  const ChangOfChain g{l4};
  REQUIRE(g.add({0, 2}, {0, 3}) == ChainGroupElement{1, 1});  // 2 (+) 3 = top, 2 (.) 3 = 1
  REQUIRE(g.add({3, 0}, {-1, 0}) == ChainGroupElement{2, 0});
  REQUIRE(g.add({0, 1}, {0, 2}) == ChainGroupElement{0, 3});
  REQUIRE_THROWS_AS(g.add({0, 4}, {0, 0}), std::invalid_argument);  // top is not a carrier element

  SECTION("isomorphic to the integers with unit n on a window") {
    for (int n = 1; n <= 6; ++n) {
      const MvAlgebra chain = make_gamma({n});
      const ChangOfChain gg{chain};
      auto phi = [&](const ChainGroupElement& e) { return e.wind * n + e.part; };
      for (long long m1 = -10; m1 <= 10; ++m1)
        for (int x = 0; x < n; ++x)
          for (long long m2 = -10; m2 <= 10; ++m2)
            for (int y = 0; y < n; ++y) {
              const ChainGroupElement e1{m1, x}, e2{m2, y};
              REQUIRE(phi(gg.add(e1, e2)) == phi(e1) + phi(e2));
              REQUIRE(gg.leq(e1, e2) == (phi(e1) <= phi(e2)));
              REQUIRE(phi(gg.negate(e1)) == -phi(e1));
            }
      REQUIRE(phi(gg.unit()) == n);
    }
  }

  SECTION("agrees with the good-sequence group under the sum map") {
    const MvAlgebra chain = make_gamma({3});
    auto to_chang = [&](const ChainGroupElement& e) {
      // m*n + x as a normalized positive/negative pair
      long long v = e.wind * 3 + e.part;
      GoodSequence pos = good_zero(chain), neg = good_zero(chain);
      long long a = v >= 0 ? v : -v;
      std::vector<int> terms;
      while (a >= 3) { terms.push_back(3); a -= 3; }
      if (a > 0) terms.push_back(static_cast<int>(a));
      if (v >= 0) pos = make_good(chain, terms);
      else neg = make_good(chain, terms);
      return ChangElement{pos, neg};
    };
    for (long long m1 = -3; m1 <= 3; ++m1)
      for (int x = 0; x < 3; ++x)
        for (long long m2 = -3; m2 <= 3; ++m2)
          for (int y = 0; y < 3; ++y) {
            const ChainGroupElement e1{m1, x}, e2{m2, y};
            const ChangOfChain gg{chain};
            REQUIRE(to_chang(gg.add(e1, e2)) == chang_add(to_chang(e1), to_chang(e2)));
            REQUIRE(gg.leq(e1, e2) == chang_leq(to_chang(e1), to_chang(e2)));
          }
  }
}

TEST_CASE("isomorphism search") {
  SECTION("groups: Z/4 is not the Klein four group") {
    FiniteGroup klein;
    klein.size = 4;
    klein.zero = 0;
    klein.add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    klein.neg = {0, 1, 2, 3};
    REQUIRE_FALSE(group_iso(cyclic_group_tables(4), klein).has_value());
    REQUIRE(group_iso(klein, klein).has_value());
  }

  SECTION("self isomorphism yields a verified witness") {
    const FinitePco c = make_cyclic_group(9);
    const auto w = pco_iso(c, c);
    REQUIRE(w.has_value());
    REQUIRE(verify_pco_iso(c, c, w->map));
  }

  SECTION("witnesses are invertible and compose") {
    const FinitePco c = make_cyclic_group(8);
    const FinitePco d = co_from_chain(make_gamma({8}));
    const auto w1 = pco_iso(c, d);
    REQUIRE(w1.has_value());
    std::vector<int> inverse(w1->map.size());
    for (std::size_t i = 0; i < w1->map.size(); ++i) inverse[w1->map[i]] = static_cast<int>(i);
    REQUIRE(verify_pco_iso(d, c, inverse));
    const auto w2 = pco_iso(d, c);
    REQUIRE(w2.has_value());
    std::vector<int> composed(w1->map.size());
    for (std::size_t i = 0; i < w1->map.size(); ++i) composed[i] = w2->map[w1->map[i]];
    REQUIRE(verify_pco_iso(c, c, composed));
  }

  SECTION("mv structures") {
    REQUIRE(mv_iso(product(make_gamma({2}), make_gamma({3})), make_gamma({2, 3})).has_value());
    REQUIRE_FALSE(mv_iso(make_gamma({3}), make_gamma({1, 1})).has_value());  // chain vs square
    REQUIRE_FALSE(mv_iso(make_gamma({3}), make_gamma({4})).has_value());
  }

  SECTION("size cap") {
    REQUIRE_THROWS_AS(pco_iso(make_cyclic_group(30), make_cyclic_group(30), 24), std::length_error);
    REQUIRE(pco_iso(make_cyclic_group(30), make_cyclic_group(30), 32).has_value());
  }

  SECTION("Z/4 differs from the product of two Z/2 as a p.c.o. group") {
    const FinitePco p = make_product_pco(make_cyclic_group(2), make_cyclic_group(2));
    REQUIRE_FALSE(pco_iso(make_cyclic_group(4), p).has_value());
  }

  SECTION("canonical algebra of the (2,3) quotient matches the interval algebra") {
    REQUIRE(mv_iso(canonical_mv(wound_round({2, 3})).algebra, make_gamma({2, 3})).has_value());
  }
}

TEST_CASE("round trips") {
  SECTION("five-element chain and larger") {
    for (int n : {4, 5, 9}) {
      const RoundTripReport rep = round_trip(make_gamma({n}));
      REQUIRE(rep.used_chain_path);
      REQUIRE_FALSE(rep.degenerate);
      REQUIRE(rep.canonical_iso);
      REQUIRE(rep.chain_from_co_iso);
      REQUIRE(rep.unwound_consistent);
      REQUIRE(rep.ok);
    }
  }

  SECTION("two-element chain trivially") {
    const RoundTripReport rep = round_trip(make_gamma({1}));
    REQUIRE(rep.canonical_iso);
    REQUIRE(rep.ok);
  }

  SECTION("three-element chain is the degenerate corner") {
    const RoundTripReport rep = round_trip(make_gamma({2}));
    REQUIRE(rep.degenerate);
    REQUIRE_FALSE(rep.canonical_iso);  // the non-isolated set collapses to {0}
    REQUIRE(rep.chain_from_co_iso);    // the interpretation map still inverts
    REQUIRE(rep.ok);
  }

  SECTION("product route through the lattice quotient") {
    const RoundTripReport rep = round_trip(product(make_gamma({2}), make_gamma({3})));
    REQUIRE_FALSE(rep.used_chain_path);
    REQUIRE(rep.canonical_iso);
    REQUIRE(rep.ok);
  }

  SECTION("precondition failures propagate") {
    MvAlgebra bad = make_gamma({3});
    bad.neg[0] = 0;
    REQUIRE_THROWS_AS(round_trip(bad), std::domain_error);
    REQUIRE_THROWS_AS(round_trip(make_gamma({1, 1, 1, 1, 1})), std::domain_error);
  }
}
