#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <cyclord/pco.hpp>

using namespace cyclord;

namespace {

// the running partial-order example on Z/6Z: {1 < 2, 1 < -1, -2 < 2, -2 < -1}
std::vector<std::pair<int, int>> z6_example_pairs() { return {{1, 2}, {1, 5}, {4, 2}, {4, 5}}; }

FinitePco z6_example() { return r_from_order(cyclic_group_tables(6), z6_example_pairs()); }

// All strict partial orders on C \ {0} satisfying the winding hypothesis:
// the hypothesis closes each pair (x,y) into the orbit
// (x,y) -> (y-x,-x) -> (-y,x-y) of size one or three, so valid orders are
// exactly the transitive antisymmetric unions of those orbits.
std::vector<std::vector<std::pair<int, int>>> all_valid_orders(const FiniteGroup& g) {
  const int n = g.size;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && x != g.zero && y != g.zero) pairs.emplace_back(x, y);
  std::map<std::pair<int, int>, int> orbit_of;
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (const auto& p : pairs) {
    if (orbit_of.count(p)) continue;
    std::vector<std::pair<int, int>> orbit;
    std::pair<int, int> cur = p;
    do {
      orbit.push_back(cur);
      orbit_of[cur] = static_cast<int>(orbits.size());
      cur = {g.sub(cur.second, cur.first), g.neg[cur.first]};
    } while (cur != p);
    orbits.push_back(orbit);
  }
  std::vector<std::vector<std::pair<int, int>>> result;
  const std::size_t k = orbits.size();
  for (std::size_t mask = 0; mask < (1ULL << k); ++mask) {
    std::set<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ULL << i)) rel.insert(orbits[i].begin(), orbits[i].end());
    bool valid = true;
    for (const auto& [x, y] : rel) {
      if (rel.count({y, x})) { valid = false; break; }
      for (int z = 0; z < n && valid; ++z)
        if (z != g.zero && z != y && rel.count({y, z}) && !rel.count({x, z})) valid = false;
      if (!valid) break;
    }
    if (valid) result.emplace_back(rel.begin(), rel.end());
  }
  return result;
}

}  // namespace

TEST_CASE("canonical cyclic order passes all axioms") {
  const FinitePco c = make_cyclic_group(6);
  const PcoAxiomReport rep = check_pco_axioms(c);
  REQUIRE(rep.strict);
  REQUIRE(rep.cyclic);
  REQUIRE(rep.order_per_base);
  REQUIRE(rep.compatible);
  REQUIRE(rep.is_co);
}

TEST_CASE("canonical cyclic order examples") {
  REQUIRE(make_cyclic_group(4).rel(1, 2, 3));
  const FinitePco trivial = make_cyclic_group(1);
  REQUIRE(std::count(trivial.r.begin(), trivial.r.end(), 1) == 0);
  REQUIRE(make_cyclic_group(5).rel(3, 4, 0));  // representatives 3 < 4 < 5
  REQUIRE_THROWS_AS(make_cyclic_group(0), std::invalid_argument);
}

TEST_CASE("a lone triple violates cyclicity") {
  FinitePco c = make_cyclic_group(6);
  std::fill(c.r.begin(), c.r.end(), 0);
  c.set_rel(0, 1, 2);
  const PcoAxiomReport rep = check_pco_axioms(c);
  REQUIRE_FALSE(rep.cyclic);
  REQUIRE(rep.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("products pass the axioms but are not cyclically ordered") {
  const FinitePco p = make_product_pco(make_cyclic_group(5), make_cyclic_group(5));
  const PcoAxiomReport rep = check_pco_axioms(p);
  REQUIRE(rep.all_pass());
  REQUIRE_FALSE(rep.is_co);

  // componentwise relation
  auto pack = [&](int a, int b) { return a * 5 + b; };
  REQUIRE(p.rel(pack(0, 0), pack(1, 1), pack(2, 2)));
  REQUIRE_FALSE(p.rel(pack(0, 0), pack(1, 2), pack(2, 1)));
}

TEST_CASE("product with the trivial group keeps the group and empties the relation") {
  // strictness leaves nothing to relate over a one-point factor, so the
  // componentwise conjunction is empty
  const FinitePco c = make_cyclic_group(4);
  const FinitePco p = make_product_pco(c, make_cyclic_group(1));
  REQUIRE(p.size == c.size);
  REQUIRE(p.add == c.add);
  REQUIRE(std::count(p.r.begin(), p.r.end(), 1) == 0);
}

TEST_CASE("winding a partial order") {
  SECTION("the Z/6 example is a valid p.c.o. group and not cyclically ordered") {
    const FinitePco c = z6_example();
    const PcoAxiomReport rep = check_pco_axioms(c);
    REQUIRE(rep.all_pass());
    REQUIRE_FALSE(rep.is_co);
    REQUIRE(c.lt0(1, 2));
    REQUIRE(c.lt0(4, 5));
    REQUIRE_FALSE(c.lt0(1, 4));
  }

  SECTION("empty order gives an empty relation") {
    const FinitePco c = r_from_order(cyclic_group_tables(6), {});
    REQUIRE(check_pco_axioms(c).all_pass());
    REQUIRE(std::count(c.r.begin(), c.r.end(), 1) == 0);
  }

  SECTION("hypothesis violations are rejected with the offending pair") {
    try {
      r_from_order(cyclic_group_tables(6), {{1, 3}});
      FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
      REQUIRE(std::string(e.what()).find("(1,3)") != std::string::npos);
    }
  }

  SECTION("order pairs touching zero are rejected") {
    REQUIRE_THROWS_AS(r_from_order(cyclic_group_tables(6), {{0, 2}}), std::invalid_argument);
  }
}

TEST_CASE("winding round trip is exhaustive on small abelian groups") {
  std::vector<FiniteGroup> groups;
  for (int n = 5; n <= 8; ++n) groups.push_back(cyclic_group_tables(n));
  // the non-cyclic abelian groups of order <= 8
  groups.push_back(make_product_pco(make_cyclic_group(2), make_cyclic_group(2)));
  groups.push_back(make_product_pco(make_cyclic_group(2), make_cyclic_group(4)));
  groups.push_back(make_product_pco(make_cyclic_group(2), make_product_pco(make_cyclic_group(2), make_cyclic_group(2))));

  for (const FiniteGroup& g : groups) {
    int checked = 0;
    for (const auto& order : all_valid_orders(g)) {
      const FinitePco c = r_from_order(g, order);
      REQUIRE(check_pco_axioms(c).all_pass());
      std::vector<std::pair<int, int>> back = order_from_pco(c);
      std::vector<std::pair<int, int>> expected = order;
      std::sort(back.begin(), back.end());
      std::sort(expected.begin(), expected.end());
      REQUIRE(back == expected);
      ++checked;
    }
    REQUIRE(checked >= 1);  // at least the empty order
  }
}

TEST_CASE("the negation map reverses no base-point comparison") {
  // x <_0 y implies not (-x <_0 -y)
  const auto instances = {z6_example(), make_cyclic_group(7), make_product_pco(make_cyclic_group(3), make_cyclic_group(4))};
  for (const FinitePco& c : instances)
    for (int x = 0; x < c.size; ++x)
      for (int y = 0; y < c.size; ++y) {
        if (x == c.zero || y == c.zero) continue;
        if (c.lt0(x, y)) REQUIRE_FALSE(c.lt0(c.neg[x], c.neg[y]));
      }
}

TEST_CASE("tuple relation") {
  const FinitePco c = make_cyclic_group(7);
  REQUIRE(r_tuple(c, {1, 3, 5, 0}));
  REQUIRE_FALSE(r_tuple(c, {1, 5, 3, 0}));
  REQUIRE_FALSE(r_tuple(c, {2, 2, 3}));
  REQUIRE_THROWS_AS(r_tuple(c, {1, 2}), std::invalid_argument);
}

TEST_CASE("tuple relation properties: all triples, translation, rotation") {
  const FinitePco c = make_cyclic_group(7);
  std::vector<int> xs(4);
  for (xs[0] = 0; xs[0] < 7; ++xs[0])
    for (xs[1] = 0; xs[1] < 7; ++xs[1])
      for (xs[2] = 0; xs[2] < 7; ++xs[2])
        for (xs[3] = 0; xs[3] < 7; ++xs[3]) {
          const bool r = r_tuple(c, xs);
          bool all_triples = true;
          for (std::size_t i = 0; i < 4 && all_triples; ++i)
            for (std::size_t j = i + 1; j < 4 && all_triples; ++j)
              for (std::size_t k = j + 1; k < 4; ++k)
                if (!c.rel(xs[i], xs[j], xs[k])) { all_triples = false; break; }
          REQUIRE(r == all_triples);
          for (int y = 0; y < 7; ++y) {
            std::vector<int> shifted(4);
            for (int i = 0; i < 4; ++i) shifted[i] = c.add[xs[i]][y];
            REQUIRE(r == r_tuple(c, shifted));
          }
          std::vector<int> rotated{xs[1], xs[2], xs[3], xs[0]};
          REQUIRE(r == r_tuple(c, rotated));
        }
}

TEST_CASE("c-homomorphism checks") {
  const FinitePco c5 = make_cyclic_group(5);
  std::vector<int> id(5);
  std::iota(id.begin(), id.end(), 0);
  REQUIRE(c_hom_check(id, c5, c5));

  std::vector<int> negation(5);
  for (int x = 0; x < 5; ++x) negation[x] = c5.neg[x];
  REQUIRE_FALSE(c_hom_check(negation, c5, c5));  // orientation reversal

  // winding functor instance: doubling Z -> Z with units 2 -> 4 induces
  // Z/2 -> Z/4
  const FinitePco c2 = make_cyclic_group(2);
  const FinitePco c4 = make_cyclic_group(4);
  REQUIRE(c_hom_check({0, 2}, c2, c4));

  // non-homomorphism is rejected
  REQUIRE_FALSE(c_hom_check({0, 1}, c2, c4));
  REQUIRE_THROWS_AS(c_hom_check({0}, c2, c4), std::invalid_argument);
}
