#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "core/sample.hpp"
#include "core/subgroups.hpp"
#include "core/words.hpp"
#include "doctest.h"

using namespace exgl;

TEST_CASE("transvections and permutation matrices have their defining shape") {
  auto z5 = parse_ring_spec("Z/5");
  SUBCASE("t_{12}(0) is the identity") {
    CHECK(transvection(z5, 2, 0, 1, 0) == identity(z5, 2));
  }
  SUBCASE("p_{12} over Z/5 at degree 2") {
    const Mat p = perm_matrix(z5, 2, 0, 1);
    CHECK(p.at(0, 0) == 0);
    CHECK(p.at(0, 1) == 1);
    CHECK(p.at(1, 0) == 4);
    CHECK(p.at(1, 1) == 0);
  }
  SUBCASE("p_{ij} equals its three-letter word") {
    for (const char* spec : {"Z/5", "Z/4", "UT(2,Z/2)"}) {
      auto R = parse_ring_spec(spec);
      for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          CHECK(perm_word(R, 3, i, j).eval() == perm_matrix(R, 3, i, j));
        }
    }
  }
  SUBCASE("i = j is rejected") {
    CHECK_THROWS_AS(transvection(z5, 2, 1, 1, 1), error);
  }
}

TEST_CASE("inversion: round trips, known inverses, failures") {
  auto z4 = parse_ring_spec("Z/4");
  SUBCASE("identity") {
    const InvertibleMatrix e = invert(identity(z4, 3));
    CHECK(e.inv == identity(z4, 3));
  }
  SUBCASE("transvection inverse flips the sign") {
    const InvertibleMatrix t = invert(transvection(z4, 3, 0, 1, 3));
    CHECK(t.inv == transvection(z4, 3, 0, 1, 1));
  }
  SUBCASE("permutation matrix inverse swaps the indices") {
    const InvertibleMatrix p = invert(perm_matrix(z4, 3, 0, 1));
    CHECK(p.inv == perm_matrix(z4, 3, 1, 0));
  }
  SUBCASE("a non-invertible matrix is rejected") {
    Mat m = identity(z4, 2);
    m.at(0, 0) = 2;
    CHECK_THROWS_AS(invert(m), error);
  }
  SUBCASE("sampled matrices round trip") {
    for (const char* spec : {"Z/2", "Z/4", "UT(2,Z/2)"}) {
      auto R = parse_ring_spec(spec);
      for (const InvertibleMatrix& m : sample_gl(R, 3, 11, 10)) {
        CHECK(mul(m.mat, m.inv) == identity(R, 3));
        CHECK(mul(m.inv, m.mat) == identity(R, 3));
      }
    }
  }
}

TEST_CASE("word evaluation") {
  auto z4 = parse_ring_spec("Z/4");
  GroupWord w(z4, 3);
  SUBCASE("empty word is the identity") { CHECK(w.eval() == identity(z4, 3)); }
  SUBCASE("a letter against its inverse cancels") {
    w.push(Letter{0, 1, 1, 1});
    w.push(Letter{0, 1, 1, -1});
    CHECK(w.eval() == identity(z4, 3));
  }
  SUBCASE("chain relation via evaluation") {
    for (elem x = 0; x < 4; ++x)
      for (elem y = 0; y < 4; ++y) {
        GroupWord c(z4, 3);
        c.push(Letter{0, 1, x, 1});
        c.push(Letter{1, 2, y, 1});
        c.push(Letter{0, 1, x, -1});
        c.push(Letter{1, 2, y, -1});
        CHECK(c.eval() == transvection(z4, 3, 0, 2, z4->mul(x, y)));
      }
  }
  SUBCASE("json round trip is exact") {
    w.push(Letter{2, 0, 3, -1});
    w.push(Letter{0, 1, 1, 1});
    const std::string json = w.to_json();
    const GroupWord back = GroupWord::from_json(z4, 3, json);
    CHECK(back.to_json() == json);
    CHECK(back.eval() == w.eval());
  }
}

TEST_CASE("reduced pushing preserves evaluation") {
  for (const char* spec : {"Z/4", "Z/6", "UT(2,Z/2)"}) {
    auto R = parse_ring_spec(spec);
    SplitMix64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
      GroupWord plain(R, 3), reduced(R, 3);
      for (int step = 0; step < 12; ++step) {
        const std::uint32_t i = static_cast<std::uint32_t>(rng.below(3));
        std::uint32_t j = static_cast<std::uint32_t>(rng.below(2));
        if (j >= i) ++j;
        const Letter l{i, j, static_cast<elem>(rng.below(R->order())),
                       rng.below(2) ? 1 : -1};
        plain.push(l);
        reduced.push_reduced(l);
      }
      CHECK(reduced.eval() == plain.eval());
      CHECK(reduced.size() <= plain.size());
    }
  }
}

TEST_CASE("relation checker accepts the standard rings") {
  CHECK(check_relations(parse_ring_spec("Z/4"), 3).pass);
  CHECK(check_relations(parse_ring_spec("UT(2,Z/2)"), 3).pass);
}

TEST_CASE("perm conjugator repositions transvections for every entry") {
  for (const char* spec : {"Z/4", "Z/2", "UT(2,Z/2)"}) {
    auto R = parse_ring_spec(spec);
    const std::uint32_t n = 3;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::uint32_t i2 = 0; i2 < n; ++i2)
          for (std::uint32_t j2 = 0; j2 < n; ++j2) {
            if (i2 == j2) continue;
            // construction verifies t_{ij}(x)^tau = t_{i2 j2}(x) for all x
            const GroupWord tau = perm_conjugator(R, n, i, j, i2, j2);
            if (i == i2 && j == j2) CHECK(tau.empty());
          }
      }
  }
  CHECK_THROWS_AS(perm_conjugator(parse_ring_spec("Z/4"), 2, 0, 1, 1, 0), error);
}

TEST_CASE("transvections as commutators") {
  auto z4 = parse_ring_spec("Z/4");
  SUBCASE("x = 0 gives the empty word") {
    CHECK(transvection_as_commutator(z4, 3, 0, 2, 0).empty());
  }
  SUBCASE("frozen example (1,3) with x = 2") {
    const GroupWord w = transvection_as_commutator(z4, 3, 0, 2, 2);
    CHECK(w.eval() == transvection(z4, 3, 0, 2, 2));
    CHECK(w.size() == 4);
  }
  SUBCASE("exhaustive over Z/2 at degree 3") {
    auto z2 = parse_ring_spec("Z/2");
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t k = 0; k < 3; ++k) {
        if (i == k) continue;
        for (elem x = 0; x < 2; ++x)
          CHECK(transvection_as_commutator(z2, 3, i, k, x).eval() ==
                transvection(z2, 3, i, k, x));
      }
  }
}

TEST_CASE("relative words enforce the ideal and evaluate conjugates") {
  auto z4 = parse_ring_spec("Z/4");
  auto ideal = std::make_shared<Ideal>(Ideal::generated(z4, {2}));
  RelativeWord w(z4, 3, ideal);
  SUBCASE("base letters outside the ideal are rejected") {
    CHECK_THROWS_AS(w.push(GroupWord(z4, 3), Letter{0, 1, 1, 1}), error);
  }
  SUBCASE("conjugated factors evaluate and expand consistently") {
    GroupWord conj(z4, 3);
    conj.push(Letter{1, 2, 3, 1});
    conj.push(Letter{0, 1, 1, 1});
    w.push(conj, Letter{0, 1, 2, 1});
    w.push(GroupWord(z4, 3), Letter{2, 0, 2, -1});
    const Mat direct = w.eval();
    CHECK(w.expand().eval() == direct);
    const std::string json = w.to_json();
    const RelativeWord back = RelativeWord::from_json(z4, 3, ideal, json);
    CHECK(back.to_json() == json);
    CHECK(back.eval() == direct);
  }
}

TEST_CASE("congruence membership per the entry test") {
  auto z4 = parse_ring_spec("Z/4");
  const Ideal two = Ideal::generated(z4, {2});
  const Ideal zero = Ideal::generated(z4, {});
  SUBCASE("frozen examples") {
    CHECK(congruence_member(transvection(z4, 3, 0, 1, 2), two));
    CHECK_FALSE(congruence_member(transvection(z4, 3, 0, 1, 1), two));
    Mat scalar = identity(z4, 3);
    for (std::uint32_t i = 0; i < 3; ++i) scalar.at(i, i) = 3;
    CHECK(congruence_member(scalar, zero));
  }
  SUBCASE("level ideals at the frozen examples") {
    CHECK(level_ideal(identity(z4, 3)).elements() == std::vector<elem>{0});
    CHECK(level_ideal(transvection(z4, 3, 0, 1, 2)).elements() == std::vector<elem>{0, 2});
    Mat scalar = identity(z4, 3);
    for (std::uint32_t i = 0; i < 3; ++i) scalar.at(i, i) = 3;
    CHECK(level_ideal(scalar).elements() == std::vector<elem>{0});
  }
  SUBCASE("congruence members sit in the congruence subgroup of their level ideal") {
    for (const InvertibleMatrix& m : sample_gl(z4, 3, 3, 20))
      CHECK(congruence_member(m.mat, level_ideal(m.mat)));
  }
}

TEST_CASE("subgroup enumeration oracles") {
  SUBCASE("no generators means the trivial group") {
    auto z4 = parse_ring_spec("Z/4");
    const Subgroup g = enumerate_closure(z4, 3, {identity(z4, 3)});
    CHECK(g.order() == 1);
  }
  SUBCASE("the elementary subgroup over the field with two elements") {
    auto z2 = parse_ring_spec("Z/2");
    const Subgroup g = enumerate_closure(z2, 3, elementary_generators(z2, 3));
    CHECK(g.order() == 168);
  }
  SUBCASE("the cap aborts an oversized enumeration") {
    auto z4 = parse_ring_spec("Z/4");
    CHECK_THROWS_AS(enumerate_closure(z4, 3, elementary_generators(z4, 3), 100), error);
  }
  SUBCASE("full general linear group over Z/2 from transvections and units") {
    auto z2 = parse_ring_spec("Z/2");
    const Subgroup g = enumerate_closure(z2, 3, gl_generators(z2, 3));
    CHECK(g.order() == 168);
  }
}

TEST_CASE("sampling is deterministic and respects the count") {
  auto z4 = parse_ring_spec("Z/4");
  CHECK(sample_gl(z4, 3, 1, 0).empty());
  const auto first = sample_gl(z4, 3, 42, 8);
  const auto second = sample_gl(z4, 3, 42, 8);
  REQUIRE(first.size() == 8);
  for (std::size_t idx = 0; idx < first.size(); ++idx)
    CHECK(first[idx].mat == second[idx].mat);
  const auto other_seed = sample_gl(z4, 3, 43, 8);
  bool all_equal = true;
  for (std::size_t idx = 0; idx < first.size(); ++idx)
    all_equal = all_equal && first[idx].mat == other_seed[idx].mat;
  CHECK_FALSE(all_equal);
}

TEST_CASE("words from different contexts are rejected") {
  auto z4 = parse_ring_spec("Z/4");
  auto z6 = parse_ring_spec("Z/6");
  GroupWord a(z4, 3), b(z6, 3);
  b.push(Letter{0, 1, 5, 1});
  CHECK_THROWS_AS(a.append(b), error);
  GroupWord c(z4, 2);
  c.push(Letter{0, 1, 1, 1});
  CHECK_THROWS_AS(mul(a.eval(), c.eval()), error);
}

TEST_CASE("frozen group orders over Z/4") {
  auto z4 = parse_ring_spec("Z/4");
  const Subgroup elementary = enumerate_closure(z4, 3, elementary_generators(z4, 3));
  CHECK(elementary.order() == 43008);
  const Subgroup gl = enumerate_closure(z4, 3, gl_generators(z4, 3));
  // reduction-kernel count times the residue group: 2^9 * 168
  CHECK(gl.order() == 512 * 168);
  // index of the elementary subgroup = number of units of Z/4
  CHECK(gl.order() == 2 * elementary.order());
}

TEST_CASE("invertibility coincides with membership in the enumerated group") {
  SUBCASE("exhaustive at degree 2 over Z/4") {
    auto z4 = parse_ring_spec("Z/4");
    const Subgroup gl = enumerate_closure(z4, 2, gl_generators(z4, 2));
    CHECK(gl.order() == 96);
    Mat m = zero_matrix(z4, 2);
    std::size_t invertible = 0;
    while (true) {
      bool ok = true;
      try {
        invert(m);
      } catch (const error&) {
        ok = false;
      }
      CHECK(ok == gl.contains(m));
      invertible += ok;
      std::size_t pos = m.a.size();
      bool wrapped = false;
      while (true) {
        if (pos == 0) {
          wrapped = true;
          break;
        }
        --pos;
        if (++m.a[pos] < 4) break;
        m.a[pos] = 0;
      }
      if (wrapped) break;
    }
    CHECK(invertible == 96);
  }
  SUBCASE("exhaustive at degree 3 over Z/2") {
    auto z2 = parse_ring_spec("Z/2");
    const Subgroup gl = enumerate_closure(z2, 3, gl_generators(z2, 3));
    Mat m = zero_matrix(z2, 3);
    std::size_t invertible = 0;
    while (true) {
      bool ok = true;
      try {
        invert(m);
      } catch (const error&) {
        ok = false;
      }
      CHECK(ok == gl.contains(m));
      invertible += ok;
      std::size_t pos = m.a.size();
      bool wrapped = false;
      while (true) {
        if (pos == 0) {
          wrapped = true;
          break;
        }
        --pos;
        if (++m.a[pos] < 2) break;
        m.a[pos] = 0;
      }
      if (wrapped) break;
    }
    CHECK(invertible == 168);
  }
}

TEST_CASE("congruence test agrees with the definitional quotient test") {
  auto z2 = parse_ring_spec("Z/2");
  const Ideal zero2 = Ideal::generated(z2, {});
  // exhaustive over all of GL_3(Z/2)
  const Subgroup gl = enumerate_closure(z2, 3, gl_generators(z2, 3));
  for (const Mat& m : gl.elements)
    CHECK(congruence_member(m, zero2) == congruence_member_definitional(m, zero2));

  auto z4 = parse_ring_spec("Z/4");
  for (const Ideal& ideal : {Ideal::generated(z4, {}), Ideal::generated(z4, {2})})
    for (const InvertibleMatrix& m : sample_gl(z4, 3, 17, 40))
      CHECK(congruence_member(m.mat, ideal) == congruence_member_definitional(m.mat, ideal));
}

TEST_CASE("relative elementary subgroup enumerations agree") {
  auto z4 = parse_ring_spec("Z/4");
  const Ideal two = Ideal::generated(z4, {2});
  const Subgroup relative = enumerate_relative_elementary(z4, 3, two);

  // closure of single-letter conjugates of the ideal-elementary letters
  std::vector<Mat> gens = ideal_elementary_generators(z4, 3, two);
  const std::vector<Mat> letters = elementary_generators(z4, 3);
  const std::size_t base_count = gens.size();
  for (std::size_t idx = 0; idx < base_count; ++idx)
    for (const Mat& c : letters) {
      const InvertibleMatrix ci = invert(c);
      gens.push_back(mul(mul(ci.inv, gens[idx]), ci.mat));
    }
  const Subgroup from_single = enumerate_closure(z4, 3, gens);
  CHECK(from_single.order() == relative.order());
  CHECK(from_single.elements == relative.elements);

  // and the relative subgroup is strictly between the ideal letters' closure
  // and the full elementary subgroup
  const Subgroup pre = enumerate_closure(z4, 3, ideal_elementary_generators(z4, 3, two));
  CHECK(pre.order() <= relative.order());
  const Subgroup full = enumerate_closure(z4, 3, elementary_generators(z4, 3));
  CHECK(relative.order() < full.order());
}
