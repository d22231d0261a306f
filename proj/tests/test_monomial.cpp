#include <doctest.h>

#include "agt/io.hpp"
#include "helpers.hpp"

using namespace agt;
using namespace agt::testing;

TEST_CASE("monomial basics") {
  Monomial x({1, 0}), y({0, 1});
  CHECK((x * y).e == Exps{1, 1});
  CHECK(lcm(Monomial({2, 1}), Monomial({1, 3})).e == Exps{2, 3});
  CHECK(colonQuot(Monomial({2, 1}), Monomial({1, 3})).e == Exps{1, 0});
  CHECK(x.divides(Monomial({2, 2})));
  CHECK(!Monomial({2, 0}).divides(Monomial({1, 5})));
  CHECK(one(2).isOne());
  CHECK(gradedLexLess(x, y));  // x_1 before x_2
  CHECK(gradedLexLess(y, Monomial({2, 0})));  // degree first
}

TEST_CASE("minimal generators and containment") {
  MonomialIdeal I = gens(2, {{2, 0}, {1, 1}, {0, 2}, {2, 1}});
  CHECK(I.gens().size() == 3);  // x^2 y is redundant
  CHECK(I.contains(Monomial({3, 0})));
  CHECK(!I.contains(Monomial({1, 0})));
  CHECK(I.containsIdeal(gens(2, {{2, 2}})));
  CHECK(!gens(2, {{2, 2}}).containsIdeal(I));
}

TEST_CASE("sum intersect product colon against membership oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = randomIdeal(rng, n, 4, 2);
    MonomialIdeal J = randomIdeal(rng, n, 4, 2);
    MonomialIdeal S = sum(I, J), X = intersect(I, J), C = colonIdeal(I, J);
    for (const auto& m : box(n, 6)) {
      CHECK(S.contains(m) == (I.contains(m) || J.contains(m)));
      CHECK(X.contains(m) == (I.contains(m) && J.contains(m)));
      CHECK(C.contains(m) == colonMember(I, J, m));
    }
  }
}

TEST_CASE("colon operator properties") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    MonomialIdeal I = randomIdeal(rng, n, 4, 2);
    MonomialIdeal J = randomIdeal(rng, n, 4, 2);
    MonomialIdeal C1 = colonIdeal(I, J);
    // colon is idempotent in its second stage: I:(J) = I:(J) applied again
    CHECK(colonIdeal(colonIdeal(I, J), J) == colonIdeal(I, product(J, J)));
    CHECK(C1.containsIdeal(I));
    // J inside I => I:J = (1)
    CHECK(colonIdeal(sum(I, J), J).isUnit());
  }
}

TEST_CASE("gorenstein colon-back duality inside an irreducible ideal") {
  // for J irreducible containing I, J:(J:I) = I
  std::mt19937_64 rng(13);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    MonomialIdeal I = randomIdeal(rng, n, 4, 3);
    auto comps = irreducibleDecomposition(I);
    auto enc = enclosingIrreducible(I, comps);
    MonomialIdeal J = expand(enc.J);
    CHECK(colonIdeal(J, colonIdeal(J, I)) == I);
  }
}

TEST_CASE("irreducible decomposition is irredundant and re-intersects") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    MonomialIdeal I = randomIdeal(rng, n, 5, 4);
    auto comps = irreducibleDecomposition(I);
    CHECK(intersectAll(n, comps) == I);
    for (size_t i = 0; i < comps.size(); ++i) {
      std::vector<IrreducibleComponent> rest;
      for (size_t j = 0; j < comps.size(); ++j)
        if (j != i) rest.push_back(comps[j]);
      if (!rest.empty()) CHECK(intersectAll(n, rest) != I);
    }
  }
}

TEST_CASE("decomposition of named ideals") {
  auto comps = irreducibleDecomposition(gens(2, {{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE(comps.size() == 2);
  CHECK(((comps[0].a == Exps{2, 1} && comps[1].a == Exps{1, 2}) ||
         (comps[0].a == Exps{1, 2} && comps[1].a == Exps{2, 1})));
  CHECK(irreducibleDecomposition(gens(2, {{2, 0}, {0, 2}})).size() == 1);
  CHECK(irreducibleDecomposition(gens(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})).size() == 3);
}

TEST_CASE("irreducible colon shortcut equals general colon") {
  std::mt19937_64 rng(15);
  int pairs = 0;
  while (pairs < 1000) {
    int n = 2 + static_cast<int>(rng() % 3);
    IrreducibleComponent a = randomComponent(rng, n, 5), b = randomComponent(rng, n, 5);
    CHECK(irreducibleColon(a, b) == colonIdeal(expand(a), expand(b)));
    ++pairs;
  }
}

TEST_CASE("standard monomials and hilbert function") {
  MonomialIdeal I = fromComps({{3, 2}, {1, 4}});  // (x^3, x y^2, y^4)
  CHECK(I == gens(2, {{3, 0}, {1, 2}, {0, 4}}));
  CHECK(hilbertFunction(I) == std::vector<int>{1, 2, 3, 2});
  CHECK(standardMonomials(I).size() == 8);
  CHECK(hilbertFunction(gens(2, {{2, 0}, {1, 1}, {0, 2}})) == std::vector<int>{1, 2});
  CHECK(hilbertFunction(gens(1, {{4}})) == std::vector<int>{1, 1, 1, 1});

  std::mt19937_64 rng(16);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    MonomialIdeal I2 = randomIdeal(rng, n, 4, 3);
    auto hf = hilbertFunction(I2);
    size_t total = 0;
    for (int h : hf) total += static_cast<size_t>(h);
    CHECK(total == standardMonomials(I2).size());
  }
}

TEST_CASE("m-primary detection") {
  CHECK(isMPrimary(gens(2, {{2, 0}, {0, 2}})));
  CHECK(!isMPrimary(gens(2, {{2, 0}})));
  CHECK(!isMPrimary(MonomialIdeal::zero(2)));
}

TEST_CASE("json round trip") {
  MonomialIdeal I = fromComps({{2, 3}, {3, 2}});
  json j = idealToJson(I);
  CHECK(idealFromJson(j) == I);
  json fromCompsJson = {{"vars", 2}, {"components", {{2, 3}, {3, 2}}}};
  CHECK(idealFromJson(fromCompsJson) == I);
}
