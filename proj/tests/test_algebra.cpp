#include <doctest.h>

#include "agt/algebra.hpp"
#include "helpers.hpp"

using namespace agt;
using namespace agt::testing;

TEST_CASE("algebra construction and multiplication table") {
  MonomialIdeal I = fromComps({{3, 2}, {1, 4}});
  FiniteAlgebra R(I, 101);
  CHECK(R.dim() == 8);
  CHECK(R.hilbert() == std::vector<int>{1, 2, 3, 2});
  // table matches monomial arithmetic
  for (int i = 0; i < R.dim(); ++i)
    for (int j = 0; j < R.dim(); ++j) {
      Monomial prod = R.basis()[i] * R.basis()[j];
      CHECK(R.mul(i, j) == R.indexOf(prod));
      CHECK(R.kill(i).test(j) == I.contains(prod));
    }
  // mulVec agrees with the table on unit vectors
  for (int i = 0; i < R.dim(); ++i) {
    FpVec u = R.vecOf(R.basis()[i]);
    for (int j = 0; j < R.dim(); ++j) {
      FpVec w = R.mulVec(u, R.vecOf(R.basis()[j]));
      int t = R.mul(i, j);
      for (int s = 0; s < R.dim(); ++s) CHECK(w[s] == (s == t ? 1u : 0u));
    }
  }
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS(FiniteAlgebra(gens(2, {{2, 0}}), 101));       // not m-primary
  CHECK_THROWS(FiniteAlgebra(gens(2, {{2, 0}, {0, 2}}), 4));  // not prime
  CHECK_THROWS(FiniteAlgebra(gens(1, {{9}}), 101, 5));        // over the cap
}

TEST_CASE("colon and annihilator agree with monomial arithmetic") {
  std::mt19937_64 rng(31);
  int pairs = 0;
  while (pairs < 220) {
    int n = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = randomIdeal(rng, n, 4, 3);
    if (standardMonomials(I).size() > 60) continue;
    uint32_t p = (pairs % 3 == 0) ? 3u : 101u;
    FiniteAlgebra R(I, p);
    MonomialIdeal J = randomIdeal(rng, n, 4, 2);
    Subspace Jimg = idealImage(R, J);

    // 0 : J in R equals the image of I : J computed monomially
    Subspace ann = annihilator(R, Jimg);
    CHECK(ann == idealImage(R, colonIdeal(I, J)));

    // (image of K) : (image of J) equals image of (K + I) : J
    MonomialIdeal K = randomIdeal(rng, n, 4, 2);
    Subspace col = colonSubspace(R, idealImage(R, K), Jimg);
    CHECK(col == idealImage(R, colonIdeal(sum(K, I), J)));
    ++pairs;
  }
}

TEST_CASE("socle and type") {
  MonomialIdeal I = fromComps({{2, 1}, {1, 2}});  // (x^2, xy, y^2)
  FiniteAlgebra R(I, 101);
  Subspace soc = socle(R);
  CHECK(soc.dim() == 2);
  CHECK(cmType(R) == 2);
  // socle = span(x, y)
  CHECK(contains(soc, R.vecOf(Monomial({1, 0}))));
  CHECK(contains(soc, R.vecOf(Monomial({0, 1}))));

  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I2 = randomIdeal(rng, n, 4, 3);
    if (standardMonomials(I2).size() > 60) continue;
    FiniteAlgebra R2(I2, 101);
    CHECK(static_cast<size_t>(cmType(R2)) == irreducibleDecomposition(I2).size());
  }
}

TEST_CASE("ideal generated by vectors") {
  MonomialIdeal I = fromComps({{3, 3}});
  FiniteAlgebra R(I, 101);
  // the ideal generated by x+y in k[x,y]/(x^3,y^3)
  FpVec g(R.dim(), 0);
  g[R.indexOf(Monomial({1, 0}))] = 1;
  g[R.indexOf(Monomial({0, 1}))] = 1;
  Subspace S = idealGeneratedBy(R, {g});
  CHECK(isIdealSubspace(R, S));
  CHECK(S.dim() == 6);  // degrees 1..4 contribute 1,2,2,1
  CHECK(contains(S, g));
  CHECK(!contains(S, R.vecOf(one(2))));
  // maximal ideal subspace has codimension 1
  CHECK(maximalIdealSubspace(R).dim() == R.dim() - 1);
  CHECK(isIdealSubspace(R, maximalIdealSubspace(R)));
}
