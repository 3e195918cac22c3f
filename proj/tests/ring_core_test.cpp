#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "core/exchange.hpp"
#include "core/ideal.hpp"
#include "core/ring.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace exgl;

namespace {

// Independent membership oracle: the additive closure of {a*g*b}, i.e. all
// finite sums of two-sided multiples of the generators.
std::set<elem> ideal_oracle(const Ring& R, const std::vector<elem>& gens) {
  std::set<elem> products{R.zero()};
  for (elem g : gens)
    for (elem a = 0; a < R.order(); ++a)
      for (elem b = 0; b < R.order(); ++b) products.insert(R.mul(R.mul(a, g), b));
  std::set<elem> closure = products;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<elem> snapshot(closure.begin(), closure.end());
    for (elem x : snapshot)
      for (elem y : snapshot)
        if (closure.insert(R.add(x, y)).second) grew = true;
  }
  return closure;
}

void check_table_ring_axioms_exhaustively(const RingPtr& ring) {
  const Ring& R = *ring;
  for (elem a = 0; a < R.order(); ++a)
    for (elem b = 0; b < R.order(); ++b)
      for (elem c = 0; c < R.order(); ++c) {
        CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        CHECK(R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)));
      }
}

}  // namespace

TEST_CASE("ring spec grammar round-trips") {
  CHECK(parse_ring_spec("Z/8")->order() == 8);
  CHECK(parse_ring_spec("Prod(Z/2,Z/3)")->order() == 6);
  CHECK(parse_ring_spec("Mat(2,Z/2)")->order() == 16);
  CHECK(parse_ring_spec("UT(2,Z/2)")->order() == 8);
  CHECK(parse_ring_spec(" Prod( Z/2 , UT(2, Z/3) ) ")->order() == 2 * 27);
  CHECK_THROWS_AS(parse_ring_spec("Z/1"), error);
  CHECK_THROWS_AS(parse_ring_spec("Foo(3)"), error);
  CHECK_THROWS_AS(parse_ring_spec("Z/4 trailing"), error);
  CHECK(parse_ring_spec("Mat(2,Z/2)")->spec_string() == "Mat(2,Z/2)");
}

TEST_CASE("modular arithmetic") {
  auto R = parse_ring_spec("Z/8");
  CHECK(R->add(5, 6) == 3);
  CHECK(R->mul(5, 6) == 6);
  CHECK(R->neg(3) == 5);
  CHECK(R->zero() == 0);
  CHECK(R->one() == 1);
}

TEST_CASE("structural ring kinds satisfy the axioms exhaustively") {
  check_table_ring_axioms_exhaustively(parse_ring_spec("UT(2,Z/2)"));
  check_table_ring_axioms_exhaustively(parse_ring_spec("Mat(2,Z/2)"));
  check_table_ring_axioms_exhaustively(parse_ring_spec("Prod(Z/2,Z/3)"));
  check_table_ring_axioms_exhaustively(parse_ring_spec("UT(3,Z/2)"));  // 64 elements
}

TEST_CASE("arithmetic beyond the dense-cache threshold") {
  // orders above 256 compute structurally instead of via cached tables
  auto big = parse_ring_spec("Z/1000");
  CHECK(big->add(999, 2) == 1);
  CHECK(big->mul(999, 999) == 1);
  CHECK(big->neg(1) == 999);
  const Ideal even = Ideal::generated(big, {2});
  CHECK(even.size() == 500);
  CHECK(even.contains(998));
  CHECK_FALSE(even.contains(999));

  auto mat = parse_ring_spec("Mat(2,Z/6)");  // order 1296, uncached
  const elem a = mat->pack({1, 2, 3, 4});
  const elem b = mat->pack({5, 0, 1, 1});
  // [[1,2],[3,4]] * [[5,0],[1,1]] = [[7,2],[19,4]] mod 6
  CHECK(mat->unpack(mat->mul(a, b)) == std::vector<elem>{1, 2, 1, 4});
  CHECK(mat->mul(a, mat->one()) == a);
  CHECK(mat->add(a, mat->neg(a)) == mat->zero());
}

TEST_CASE("upper triangular multiplication is really triangular") {
  auto R = parse_ring_spec("UT(2,Z/2)");
  // components (a, b, d) <-> [[a, b], [0, d]]; the strictly-upper slot is
  // nilpotent and the diagonal multiplies componentwise.
  const elem n10 = R->pack({0, 1, 0});
  CHECK(R->mul(n10, n10) == R->zero());
  const elem diag = R->pack({1, 0, 1});
  CHECK(diag == R->one());
  CHECK(R->display(n10) == "[[0,1],[0,0]]");
}

TEST_CASE("product rings behave componentwise") {
  auto R = parse_ring_spec("Prod(Z/2,Z/3)");
  const elem a = R->pack({1, 2});
  const elem b = R->pack({1, 1});
  CHECK(R->unpack(R->add(a, b)) == std::vector<elem>{0, 0});
  CHECK(R->unpack(R->mul(a, b)) == std::vector<elem>{1, 2});
}

TEST_CASE("ideal closure matches the frozen examples") {
  auto z8 = parse_ring_spec("Z/8");
  CHECK(Ideal::generated(z8, {2}).elements() == std::vector<elem>{0, 2, 4, 6});

  auto z4 = parse_ring_spec("Z/4");
  CHECK(Ideal::generated(z4, {}).elements() == std::vector<elem>{0});

  // a full matrix ring over a field has no proper nonzero two-sided ideals
  auto m2 = parse_ring_spec("Mat(2,Z/2)");
  const elem e11 = m2->pack({1, 0, 0, 0});
  CHECK(Ideal::generated(m2, {e11}).size() == m2->order());
}

TEST_CASE("ideal closure agrees with the sum-of-multiples oracle") {
  for (const char* spec : {"Z/8", "Z/6", "UT(2,Z/2)", "Mat(2,Z/2)", "Z/12"}) {
    auto R = parse_ring_spec(spec);
    for (elem g = 0; g < R->order(); ++g) {
      const Ideal ideal = Ideal::generated(R, {g});
      const auto oracle = ideal_oracle(*R, {g});
      CHECK(std::vector<elem>(oracle.begin(), oracle.end()) == ideal.elements());
    }
    // a couple of two-generator ideals
    SplitMix64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      const elem g1 = static_cast<elem>(rng.below(R->order()));
      const elem g2 = static_cast<elem>(rng.below(R->order()));
      const Ideal ideal = Ideal::generated(R, {g1, g2});
      const auto oracle = ideal_oracle(*R, {g1, g2});
      CHECK(std::vector<elem>(oracle.begin(), oracle.end()) == ideal.elements());
    }
  }
}

TEST_CASE("ideal closure is idempotent") {
  auto R = parse_ring_spec("Z/12");
  const Ideal first = Ideal::generated(R, {8, 6});
  const Ideal second = Ideal::generated(R, first.elements());
  CHECK(first.elements() == second.elements());
}

TEST_CASE("ideal closure respects the cap") {
  auto R = parse_ring_spec("Z/256");
  CHECK_THROWS_AS(Ideal::generated(R, {1}, 100), error);
}

TEST_CASE("table rings: construction, verification, quotients") {
  // Z/2 x Z/2 as an explicit table
  auto structural = parse_ring_spec("Prod(Z/2,Z/2)");
  const std::size_t order = structural->order();
  std::vector<std::vector<elem>> add(order, std::vector<elem>(order));
  std::vector<std::vector<elem>> mul(order, std::vector<elem>(order));
  for (elem a = 0; a < order; ++a)
    for (elem b = 0; b < order; ++b) {
      add[a][b] = structural->add(a, b);
      mul[a][b] = structural->mul(a, b);
    }
  auto table = Ring::from_table(add, mul, structural->zero(), structural->one());
  CHECK(verify_ring_axioms(*table).pass);

  SUBCASE("a broken table is reported with a counterexample") {
    auto broken_mul = mul;
    broken_mul[2][3] = structural->one();  // damage one product
    auto broken = Ring::from_table(add, broken_mul, structural->zero(), structural->one());
    const AxiomReport report = verify_ring_axioms(*broken);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.counterexample.empty());
  }

  SUBCASE("quotient by a proper ideal is a ring of cosets") {
    auto z4 = parse_ring_spec("Z/4");
    const Ideal two = Ideal::generated(z4, {2});
    const QuotientRing q = make_quotient(z4, two);
    CHECK(q.ring->order() == 2);
    CHECK(q.project[0] == q.project[2]);
    CHECK(q.project[1] == q.project[3]);
    CHECK(q.project[1] == q.ring->one());
    CHECK(verify_ring_axioms(*q.ring).pass);
    CHECK_THROWS_AS(make_quotient(z4, Ideal::generated(z4, {1})), error);
  }
}

TEST_CASE("Table(path) specs load a ring from disk") {
  const char* path = "exgl_test_table_ring.json";
  {
    std::ofstream out(path);
    out << R"({"order":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"zero":0,"one":1})";
  }
  auto ring = parse_ring_spec(std::string("Table(") + path + ")");
  CHECK(ring->order() == 2);
  CHECK(ring->add(1, 1) == 0);
  CHECK(verify_ring_axioms(*ring).pass);
  std::remove(path);
  CHECK_THROWS_AS(parse_ring_spec("Table(no_such_file.json)"), error);
}

TEST_CASE("nicholson witnesses: frozen cases") {
  auto z4 = parse_ring_spec("Z/4");
  SUBCASE("x = 1 gives e = 1") {
    const auto w = nicholson_idempotent(*z4, 1);
    CHECK(w.e == 1);
    CHECK(w.s == 1);
  }
  SUBCASE("x = 0 gives e = 0") {
    const auto w = nicholson_idempotent(*z4, 0);
    CHECK(w.e == 0);
  }
  SUBCASE("x = 3 in Z/6 gives the nontrivial idempotent 3") {
    auto z6 = parse_ring_spec("Z/6");
    const auto w = nicholson_idempotent(*z6, 3);
    CHECK(w.e == 3);
    CHECK(z6->mul(3, w.s) == w.e);
    CHECK(z6->mul(z6->sub(1, 3), w.t) == z6->sub(1, w.e));
  }
}

TEST_CASE("nicholson witnesses: exhaustive contract") {
  for (const char* spec : {"Z/2", "Z/4", "Z/6", "Z/8", "UT(2,Z/2)", "Mat(2,Z/2)", "Prod(Z/2,Z/3)"}) {
    auto R = parse_ring_spec(spec);
    for (elem x = 0; x < R->order(); ++x) {
      const auto [e, s, t] = nicholson_idempotent(*R, x);
      CHECK(R->mul(e, e) == e);
      CHECK(R->mul(x, s) == e);
      CHECK(R->mul(R->sub(R->one(), x), t) == R->sub(R->one(), e));
    }
  }
}

TEST_CASE("orthogonal decompositions: frozen examples") {
  auto z6 = parse_ring_spec("Z/6");
  SUBCASE("(3,4) over Z/6 is already orthogonal") {
    const auto d = orthogonal_decomposition(z6, {3, 4});
    CHECK(d.idempotents == std::vector<elem>{3, 4});
    CHECK(d.witnesses == std::vector<elem>{1, 1});
  }
  SUBCASE("(2,3) over Z/4 collapses to (0,1)") {
    auto z4 = parse_ring_spec("Z/4");
    const auto d = orthogonal_decomposition(z4, {2, 3});
    CHECK(d.idempotents == std::vector<elem>{0, 1});
    CHECK(d.witnesses == std::vector<elem>{0, 3});
  }
  SUBCASE("already-orthogonal triple is preserved") {
    auto z4 = parse_ring_spec("Z/4");
    const auto d = orthogonal_decomposition(z4, {1, 0, 0});
    CHECK(d.idempotents == std::vector<elem>{1, 0, 0});
  }
  SUBCASE("inputs must sum to one") {
    CHECK_THROWS_AS(orthogonal_decomposition(z6, {2, 2}), error);
  }
}

TEST_CASE("orthogonal decompositions: seeded property check") {
  for (const char* spec : {"Z/4", "Z/6", "UT(2,Z/2)", "Mat(2,Z/2)", "Z/12"}) {
    auto R = parse_ring_spec(spec);
    SplitMix64 rng(41);
    for (std::size_t m : {2, 3, 4}) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<elem> xs(m);
        elem partial = R->zero();
        for (std::size_t idx = 0; idx + 1 < m; ++idx) {
          xs[idx] = static_cast<elem>(rng.below(R->order()));
          partial = R->add(partial, xs[idx]);
        }
        xs[m - 1] = R->sub(R->one(), partial);
        const auto d = orthogonal_decomposition(R, xs);
        validate_decomposition(*R, d);  // throws on violation
      }
    }
  }
}

TEST_CASE("decomposition output is canonical against a pair-search oracle") {
  // For m = 2 the constructive answer must satisfy the same predicate the
  // brute-force search over all witness pairs verifies.
  auto R = parse_ring_spec("Z/6");
  for (elem x = 0; x < R->order(); ++x) {
    const elem y = R->sub(R->one(), x);
    const auto d = orthogonal_decomposition(R, {x, y});
    bool found_by_search = false;
    for (elem r1 = 0; r1 < R->order() && !found_by_search; ++r1)
      for (elem r2 = 0; r2 < R->order() && !found_by_search; ++r2) {
        const elem e1 = R->mul(x, r1), e2 = R->mul(y, r2);
        found_by_search = R->mul(e1, e1) == e1 && R->mul(e2, e2) == e2 &&
                          R->mul(e1, e2) == R->zero() && R->mul(e2, e1) == R->zero() &&
                          R->add(e1, e2) == R->one() && e1 == d.idempotents[0] &&
                          e2 == d.idempotents[1];
      }
    CHECK(found_by_search);
  }
}
