#include <doctest.h>

#include "agt/classify.hpp"
#include "helpers.hpp"

using namespace agt;
using namespace agt::testing;

namespace {

struct Setup {
  FiniteAlgebra R;
  std::vector<IrreducibleComponent> comps;
  CanonicalModule W;
  Setup(const MonomialIdeal& I, uint32_t p = 101)
      : R(I, p), comps(irreducibleDecomposition(I)), W(canonicalModule(R, comps)) {}
};

}  // namespace

TEST_CASE("canonical module construction") {
  Setup s(fromComps({{3, 2}, {1, 4}}));
  CHECK(s.W.rep.dim == s.R.dim());
  CHECK(s.W.f.size() == 2);
  CHECK(s.W.rep.generators.size() == 2);  // type-two module needs two generators
  // J : f_i recovers the i-th component
  for (size_t i = 0; i < s.comps.size(); ++i)
    CHECK(colonIdeal(expand(s.W.J), principal(s.W.f[i])) == expand(s.comps[i]));
  // K = J : I
  CHECK(s.W.K == colonIdeal(expand(s.W.J), s.R.ideal()));
}

TEST_CASE("graded and dense hom computations agree") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 25) {
    int n = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = randomIdeal(rng, n, 4, 3);
    if (standardMonomials(I).size() > 25) continue;
    Setup s(I);
    ModuleRep reg = regularModule(s.R);
    for (const auto& pair : {std::pair(&s.W.rep, &reg), std::pair(&reg, &reg)}) {
      HomBasis a = homGraded(*pair.first, *pair.second);
      HomBasis b = homDense(*pair.first, *pair.second);
      REQUIRE(a.dim() == b.dim());
      // same span
      Echelon ech(s.R.p(), pair.second->dim * pair.first->dim);
      for (const auto& X : a.maps) ech.add(X.a);
      for (const auto& X : b.maps) CHECK(ech.containsVec(X.a));
    }
    ++done;
  }
}

TEST_CASE("hom dimensions on known rings") {
  Setup s(fromComps({{3, 2}, {1, 4}}));
  ModuleRep reg = regularModule(s.R);
  CHECK(homSpace(reg, reg).dim() == s.R.dim());      // Hom(R,R) = R
  CHECK(homSpace(s.W.rep, s.W.rep).dim() == s.R.dim());  // End(omega) = R
  CHECK(homSpace(s.W.rep, reg).dim() == 10);
}

TEST_CASE("trace ideal and the two gorenstein conditions") {
  {
    Setup s(fromComps({{2, 2}}));  // Gorenstein
    auto c1 = condition1Check(s.R, s.W.rep);
    CHECK(c1.gorenstein);
    CHECK(c1.almostGorenstein);
    CHECK(c1.trace.dim() == s.R.dim());
  }
  {
    Setup s(fromComps({{2, 1}, {1, 2}}));  // (x^2,xy,y^2): almost, not Gorenstein
    auto c1 = condition1Check(s.R, s.W.rep);
    CHECK(!c1.gorenstein);
    CHECK(c1.almostGorenstein);
    CHECK(c1.trace == maximalIdealSubspace(s.R));
  }
  {
    Setup s(fromComps({{3, 2}, {1, 4}}));  // (x^3,xy^2,y^4): fails
    auto c1 = condition1Check(s.R, s.W.rep);
    CHECK(!c1.almostGorenstein);
    CHECK(c1.trace.dim() == 6);
    // trace = image of (x, y^2)
    CHECK(c1.trace == idealImage(s.R, gens(2, {{1, 0}, {0, 2}})));
    CHECK(isIdealSubspace(s.R, c1.trace));
  }
}

TEST_CASE("tilde is a well-defined involution swapping evaluation sides") {
  std::mt19937_64 rng(42);
  int done = 0;
  while (done < 20) {
    int n = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = randomIdeal(rng, n, 3, 3);
    if (standardMonomials(I).size() > 20) continue;
    Setup s(I);
    HomBasis H = homSpace(s.W.rep, regularModule(s.R));
    std::vector<FpMat> acts = basisActions(s.W.rep);
    std::uniform_int_distribution<uint32_t> coef(0, s.R.p() - 1);
    for (int t = 0; t < 4; ++t) {
      FpMat f(s.R.p(), s.R.dim(), s.W.rep.dim);
      for (const auto& B : H.maps) {
        uint32_t c = coef(rng);
        for (size_t i = 0; i < f.a.size(); ++i)
          f.a[i] = static_cast<uint32_t>((f.a[i] + static_cast<uint64_t>(c) * B.a[i]) % s.R.p());
      }
      auto ft = tilde(s.W.rep, f);
      REQUIRE(ft.has_value());
      auto ftt = tilde(s.W.rep, *ft);
      REQUIRE(ftt.has_value());
      CHECK(*ftt == f);
      // defining identity f(x) y = ftilde(y) x on all basis pairs
      for (int i = 0; i < s.W.rep.dim; ++i)
        for (int j = 0; j < s.W.rep.dim; ++j) {
          FpVec fi(s.R.dim()), fj(s.R.dim());
          for (int r = 0; r < s.R.dim(); ++r) { fi[r] = f.at(r, i); fj[r] = ft->at(r, j); }
          FpMat actFi = actElement(s.W.rep, fi), actFj = actElement(s.W.rep, fj);
          for (int r = 0; r < s.W.rep.dim; ++r) CHECK(actFi.at(r, j) == actFj.at(r, i));
        }
    }
    ++done;
  }
}

TEST_CASE("biduality kernel: annihilator route vs hom route") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 40) {
    int n = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = randomIdeal(rng, n, 3, 3);
    if (standardMonomials(I).size() > 16) continue;
    FiniteAlgebra R(I, 101);
    // random ideal subspace
    std::vector<FpVec> g;
    for (int t = 0; t < 1 + static_cast<int>(rng() % 2); ++t) {
      FpVec v(R.dim());
      for (auto& x : v) x = static_cast<uint32_t>(rng() % 101);
      g.push_back(std::move(v));
    }
    Subspace Ip = idealGeneratedBy(R, g);
    // throws internally if the two routes disagree
    Subspace ker = bidualityKernel(R, Ip);
    CHECK(subspaceLeq(Ip, ker));
    CHECK(isIdealSubspace(R, ker));
    ++done;
  }
}

TEST_CASE("structure theory checks on classified examples") {
  {
    Setup s(fromComps({{2, 1}, {1, 2}}));
    CHECK(eq11Check(s.R, s.W));
    CHECK(eq12Check(s.R, s.W));
    CHECK(prop42Necessary(s.comps, 0));
    CHECK(prop42Necessary(s.comps, 1));
    CHECK(prop52Check(s.R, s.comps, condition1Check(s.R, s.W.rep).trace));
    CHECK(prop25Verify(s.R, s.W.rep, 5).ok());
  }
  {
    Setup s(fromComps({{3, 2}, {1, 4}}));  // not almost Gorenstein
    CHECK(!eq11Check(s.R, s.W));
    // the weaker escape-from-m^2 condition still holds here: x*(x^2) and
    // x*(y^2) both land in (J, y^2)
    CHECK(eq12Check(s.R, s.W));
    CHECK(!prop42Necessary(s.comps, 0));
    CHECK(prop52Check(s.R, s.comps, condition1Check(s.R, s.W.rep).trace));
    CHECK(prop25Verify(s.R, s.W.rep, 5).ok());
  }
}

TEST_CASE("condition (2) exhaustive check on small rings") {
  {
    FiniteAlgebra R(fromComps({{2, 2}}), 101);
    auto c2 = condition2Monomial(R);
    CHECK(c2.holds);
    CHECK(c2.exhaustive);
    CHECK(c2.checked == 6);
  }
  {
    FiniteAlgebra R(fromComps({{2, 1}, {1, 2}}), 101);
    auto c2 = condition2Monomial(R);
    CHECK(c2.holds);
    CHECK(c2.exhaustive);
  }
  {
    FiniteAlgebra R(fromComps({{3, 2}, {1, 4}}), 101);
    auto c2 = condition2Monomial(R);
    CHECK(!c2.holds);
    REQUIRE(!c2.witnessGens.empty());
    // replay the witness: 0:(0:I') must escape I':m
    MonomialIdeal Ip = sum(gens(2, c2.witnessGens), R.ideal());
    Subspace img = idealImage(R, Ip);
    Subspace ann2 = annihilator(R, annihilator(R, img));
    Subspace quot = colonSubspace(R, img, maximalIdealSubspace(R));
    CHECK(!subspaceLeq(ann2, quot));
  }
}

TEST_CASE("variable membership implication on three-component ideals") {
  // the implication "x_k J_i inside I:(I:J_i) for all i => x_k in sum I:J_i"
  // is a necessary condition for the biduality condition; it may only fail
  // when the trace test fails too
  std::mt19937_64 rng(44);
  int done = 0, almost = 0;
  while (done < 60) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<IrreducibleComponent> comps;
    for (int i = 0; i < 3; ++i) comps.push_back(randomComponent(rng, n, 4));
    MonomialIdeal I = intersectAll(n, comps);
    auto dec = irreducibleDecomposition(I);
    if (dec.size() != 3 || standardMonomials(I).size() > 60) continue;
    FiniteAlgebra R(I, 101);
    auto W = canonicalModule(R, dec);
    bool c1 = condition1Check(R, W.rep).almostGorenstein;
    if (c1) {
      CHECK(lemma51Check(I, dec).implicationHolds);
      ++almost;
    }
    ++done;
  }
  CHECK(almost > 0);
}
