#include <doctest.h>

#include "agt/cover.hpp"
#include "helpers.hpp"

using namespace agt;
using namespace agt::testing;

namespace {

struct Setup {
  FiniteAlgebra R;
  CanonicalModule W;
  Setup(const MonomialIdeal& I, uint32_t p = 101)
      : R(I, p), W(canonicalModule(R, irreducibleDecomposition(I))) {}
};

}  // namespace

TEST_CASE("teter ring: quotient of a gorenstein ring by its socle") {
  // k[x,y]/(x^3, y^3, x^2 y^2) is the image of k[x,y]/(x^3,y^3) mod its socle
  Setup s(gens(2, {{3, 0}, {0, 3}, {2, 2}}));
  TeterResult t = teterTest(s.R, s.W.rep, 5);
  REQUIRE(t.status == TeterStatus::Found);
  CHECK(!t.specialM2);
  Cover S = buildCover(s.R, s.W.rep, t.h);
  CHECK(S.dim == 9);
  auto V = verifyCover(s.R, S, coverProjection(s.R, s.W.rep, t.h));
  CHECK(V.ok());
  CHECK(V.socleDim == 1);
}

TEST_CASE("square of the maximal ideal uses the explicit fixture") {
  for (int n : {1, 2, 3}) {
    MonomialIdeal m = maximalIdeal(n);
    Setup s(product(m, m));
    CHECK(s.R.hilbert() == std::vector<int>{1, n});
    TeterResult t = teterTest(s.R, s.W.rep, 5);
    REQUIRE(t.status == TeterStatus::Found);
    CHECK(t.specialM2);
    Cover S = specialM2Cover(s.R);
    CHECK(S.dim == n + 2);
    CHECK(verifyCover(s.R, S, specialM2Projection(s.R)).ok());
  }
}

TEST_CASE("one dimensional ring is covered") {
  Setup s(maximalIdeal(2));  // R = k
  TeterResult t = teterTest(s.R, s.W.rep, 5);
  CHECK(t.status == TeterStatus::Found);
}

TEST_CASE("socle outside m^2 is detected") {
  // (x^2, xy, y^3): socle contains the degree-1 element x
  Setup s(gens(2, {{2, 0}, {1, 1}, {0, 3}}));
  CHECK(teterTest(s.R, s.W.rep, 5).status == TeterStatus::SocleNotInM2);
}

TEST_CASE("gorenstein non-teter ring is rejected with a probability bound") {
  Setup s(fromComps({{2, 2}}));  // k[x,y]/(x^2,y^2) is not a socle quotient
  TeterResult t = teterTest(s.R, s.W.rep, 5);
  CHECK(t.status == TeterStatus::NotFound);
  CHECK(t.samples == 24);
  CHECK(t.log2FailureBound <= -20.0);
}

TEST_CASE("characteristic two is refused") {
  Setup s(fromComps({{2, 2}}), 2);
  CHECK_THROWS(teterTest(s.R, s.W.rep, 5));
}

TEST_CASE("tampered surjection fails verification") {
  Setup s(gens(2, {{3, 0}, {0, 3}, {2, 2}}));
  TeterResult t = teterTest(s.R, s.W.rep, 5);
  REQUIRE(t.status == TeterStatus::Found);
  FpMat h = t.h;
  h.at(1, 1) = (h.at(1, 1) + 1) % s.R.p();  // corrupt one structure constant
  auto V = verifyCover(s.R, buildCover(s.R, s.W.rep, h), coverProjection(s.R, s.W.rep, h));
  CHECK(!V.ok());
}

TEST_CASE("covers verify across a random teter family") {
  // quotients of random irreducible (Gorenstein) ideals by their socle
  std::mt19937_64 rng(51);
  int done = 0;
  while (done < 15) {
    int n = 2 + static_cast<int>(rng() % 2);
    IrreducibleComponent c = randomComponent(rng, n, 4);
    MonomialIdeal G = expand(c);
    if (standardMonomials(G).size() > 40 || standardMonomials(G).size() < 3) continue;
    FiniteAlgebra RG(G, 101);
    // I = G + socle lift: the Teter quotient of S/G
    Exps corner(n);
    for (int k = 0; k < n; ++k) corner[k] = c.a[k] - 1;
    // degree <= 2 socle generators put the socle of the quotient outside m^2
    if (Monomial(corner).degree() < 3) continue;
    MonomialIdeal I = sum(G, principal(Monomial(corner)));
    Setup s(I);
    TeterResult t = teterTest(s.R, s.W.rep, rng());
    REQUIRE(t.status == TeterStatus::Found);
    if (!t.specialM2) {
      auto V = verifyCover(s.R, buildCover(s.R, s.W.rep, t.h),
                           coverProjection(s.R, s.W.rep, t.h));
      CHECK(V.ok());
    }
    ++done;
  }
}
