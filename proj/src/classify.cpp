#include "agt/classify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace agt {

VariableReduction reduceVariables(const std::vector<IrreducibleComponent>& comps) {
  VariableReduction red;
  if (comps.empty()) return red;
  const int n = comps[0].nvars();
  for (int k = 0; k < n; ++k) {
    bool allOne = std::all_of(comps.begin(), comps.end(),
                              [&](const IrreducibleComponent& c) { return c.a[k] == 1; });
    if (allOne)
      red.dropped.push_back(k);
    else
      red.kept.push_back(k);
  }
  red.nvars = static_cast<int>(red.kept.size());
  for (const auto& c : comps) {
    Exps a;
    for (int k : red.kept) a.push_back(c.a[k]);
    red.comps.push_back(IrreducibleComponent{std::move(a)});
  }
  return red;
}

bool typetwoCriterion(const IrreducibleComponent& J1, const IrreducibleComponent& J2) {
  MonomialIdeal s = sum(irreducibleColon(J1, J2), irreducibleColon(J2, J1));
  return s == maximalIdeal(J1.nvars());
}

namespace {

// exactly one positive entry, equal to 1; returns its index
std::optional<int> unitDiffIndex(const Exps& c, const Exps& d) {
  int idx = -1;
  for (size_t k = 0; k < c.size(); ++k) {
    int v = c[k] - d[k];
    if (v <= 0) continue;
    if (v != 1 || idx >= 0) return std::nullopt;
    idx = static_cast<int>(k);
  }
  if (idx < 0) return std::nullopt;
  return idx;
}

std::vector<Monomial> permutedGens(const MonomialIdeal& I, const std::vector<int>& perm) {
  // perm[pos] = source variable for position pos
  std::vector<Monomial> out;
  for (const auto& g : I.gens()) {
    Exps e(perm.size());
    for (size_t pos = 0; pos < perm.size(); ++pos) e[pos] = g.e[perm[pos]];
    out.push_back(Monomial(std::move(e)));
  }
  std::sort(out.begin(), out.end(), gradedLexLess);
  return out;
}

MonomialIdeal teterIdeal(const Exps& t) {
  const int n = static_cast<int>(t.size());
  std::vector<Monomial> g;
  Exps corner(n);
  for (int k = 0; k < n; ++k) {
    Exps e(n, 0);
    e[k] = t[k];
    g.push_back(Monomial(std::move(e)));
    corner[k] = t[k] - 1;
  }
  g.push_back(Monomial(std::move(corner)));
  return MonomialIdeal::make(n, std::move(g));
}

}  // namespace

TypeTwoClassification typetwoClassify(const VariableReduction& red) {
  TypeTwoClassification out;
  if (red.comps.size() != 2) return out;
  const int n = red.nvars;
  const Exps& c = red.comps[0].a;
  const Exps& d = red.comps[1].a;
  if (!typetwoCriterion(red.comps[0], red.comps[1])) return out;
  MonomialIdeal Ired = intersectAll(n, red.comps);

  bool caseA = true;
  for (int k = 0; k < n; ++k)
    if (c[k] != 1 && d[k] != 1) caseA = false;
  if (caseA) out.matches += 'a';

  auto p1 = unitDiffIndex(c, d), p2 = unitDiffIndex(d, c);
  int caseBVar = -1;
  for (auto [diff, dist] : {std::pair(p1, p1 ? *p1 : -1), std::pair(p2, p2 ? *p2 : -1)}) {
    if (!diff || caseBVar >= 0) continue;
    bool rest = true;
    for (int k = 0; k < n; ++k)
      if (k != dist && c[k] != 1 && d[k] != 1) rest = false;
    if (rest) caseBVar = dist;
  }
  if (caseBVar >= 0) out.matches += 'b';

  bool caseC = false;
  if (p1 && p2) {
    // with the criterion true the other variables are forced to exponent 1,
    // hence already reduced away; the ideal is the two-variable Teter ideal
    Exps t(n);
    for (int k = 0; k < n; ++k) t[k] = std::max(c[k], d[k]);
    if (n == 2 && Ired == teterIdeal(t)) caseC = true;
  }
  if (caseC) out.matches += 'c';

  if (out.matches.empty()) return out;
  out.caseLabel = out.matches[0];

  // several component orientations / distinguished-variable choices can be
  // valid; enumerate them and keep the lexicographically smallest normal form
  // so the result is invariant under variable relabeling
  struct Candidate {
    std::vector<Monomial> nf;
    std::vector<int> perm;
    std::map<std::string, int> params;
  };
  std::vector<Candidate> cands;
  auto nfKey = [](const std::vector<Monomial>& nf) {
    std::vector<Exps> key;
    for (const auto& m : nf) key.push_back(m.e);
    return key;
  };
  auto sortedPerm = [&](const Exps& cc, const Exps& dd, int last) {
    std::vector<int> perm;
    for (int k = 0; k < n; ++k)
      if (k != last) perm.push_back(k);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
      return std::tuple(cc[x] != 1, cc[x], dd[x]) < std::tuple(cc[y] != 1, cc[y], dd[y]);
    });
    if (last >= 0) perm.push_back(last);
    return perm;
  };

  if (out.caseLabel == 'a') {
    for (auto [cc, dd] : {std::pair(&c, &d), std::pair(&d, &c)}) {
      Candidate cd;
      cd.perm = sortedPerm(*cc, *dd, -1);
      cd.params["s"] = static_cast<int>(std::count(cc->begin(), cc->end(), 1));
      cd.nf = permutedGens(Ired, cd.perm);
      cands.push_back(std::move(cd));
    }
  } else if (out.caseLabel == 'b') {
    for (auto [cc, dd] : {std::pair(&c, &d), std::pair(&d, &c)}) {
      auto diff = unitDiffIndex(*cc, *dd);
      if (!diff) continue;
      int k = *diff;
      bool rest = true;
      for (int i = 0; i < n; ++i)
        if (i != k && (*cc)[i] != 1 && (*dd)[i] != 1) rest = false;
      if (!rest) continue;
      Candidate cd;
      cd.perm = sortedPerm(*cc, *dd, k);
      cd.params["c"] = std::max(c[k], d[k]);
      cd.nf = permutedGens(Ired, cd.perm);
      cands.push_back(std::move(cd));
    }
  } else {
    Exps t(n);
    for (int k = 0; k < n; ++k) t[k] = std::max(c[k], d[k]);
    for (std::vector<int> perm : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
      Candidate cd;
      cd.perm = perm;
      cd.params["c"] = t[perm[0]];
      cd.params["d"] = t[perm[1]];
      cd.nf = permutedGens(Ired, perm);
      cands.push_back(std::move(cd));
    }
  }
  auto best = std::min_element(cands.begin(), cands.end(),
                               [&](const Candidate& x, const Candidate& y) {
                                 return std::tuple(nfKey(x.nf), x.params) <
                                        std::tuple(nfKey(y.nf), y.params);
                               });
  out.varPerm = best->perm;
  out.params = best->params;
  out.normalForm = best->nf;
  return out;
}

bool prop42Necessary(const std::vector<IrreducibleComponent>& comps, int i) {
  const int n = comps[0].nvars();
  MonomialIdeal total = MonomialIdeal::zero(n);
  for (size_t j = 0; j < comps.size(); ++j)
    if (static_cast<int>(j) != i)
      total = sum(total, irreducibleColon(comps[i], comps[j]));
  MonomialIdeal inter = MonomialIdeal::unit(n);
  for (size_t j = 0; j < comps.size(); ++j)
    inter = intersect(inter, irreducibleColon(comps[j], comps[i]));
  total = sum(total, inter);
  for (int k = 0; k < n; ++k)
    if (!total.contains(variable(n, k))) return false;
  return true;
}

Lemma51Report lemma51Check(const MonomialIdeal& I, const std::vector<IrreducibleComponent>& comps) {
  const int n = I.nvars();
  Lemma51Report rep;
  std::vector<MonomialIdeal> colonI;  // I : J_i
  for (const auto& c : comps) colonI.push_back(colonIdeal(I, expand(c)));
  MonomialIdeal colonSum = MonomialIdeal::zero(n);
  for (const auto& ci : colonI) colonSum = sum(colonSum, ci);
  for (int k = 0; k < n; ++k) {
    bool ante = true;
    for (size_t i = 0; i < comps.size() && ante; ++i) {
      MonomialIdeal lhs = product(principal(variable(n, k)), expand(comps[i]));
      MonomialIdeal rhs = colonIdeal(I, colonI[i]);
      if (!rhs.containsIdeal(lhs)) ante = false;
    }
    bool cons = colonSum.contains(variable(n, k));
    rep.antecedent.push_back(ante);
    rep.consequent.push_back(cons);
    if (ante && !cons) rep.implicationHolds = false;
  }
  return rep;
}

namespace {

using Poly = std::map<Exps, uint32_t>;

// u (coefficients over the standard basis of R) times the monomial f, reduced
// modulo the monomial ideal mod
Poly mulReduce(const FiniteAlgebra& R, const FpVec& u, const Monomial& f,
               const MonomialIdeal& mod) {
  Poly out;
  for (int m = 0; m < R.dim(); ++m) {
    if (!u[m]) continue;
    Monomial t = R.basis()[m] * f;
    if (!mod.contains(t)) out[t.e] = (out[t.e] + u[m]) % R.p();
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

Lemma53Result lemma53Build(const FiniteAlgebra& R, const CanonicalModule& W,
                           const std::vector<FpVec>& u) {
  Lemma53Result res;
  MonomialIdeal Jideal = expand(W.J);
  const int nf = static_cast<int>(W.f.size());
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j)
      if (mulReduce(R, u[i], W.f[j], Jideal) != mulReduce(R, u[j], W.f[i], Jideal)) {
        res.badI = i;
        res.badJ = j;
        return res;
      }
  res.ok = true;

  const int dw = W.rep.dim;
  res.phi = FpMat(R.p(), R.dim(), dw);
  for (int w = 0; w < dw; ++w) {
    int i = 0;
    while (i < nf && !W.f[i].divides(W.wbasis[w])) ++i;
    if (i == nf) throw std::logic_error("canonical basis element not divisible by any f_i");
    Monomial q = colonQuot(W.wbasis[w], W.f[i]);
    for (int m = 0; m < R.dim(); ++m) {
      if (!u[i][m]) continue;
      int t = R.indexOf(q * R.basis()[m]);
      if (t >= 0) res.phi.at(t, w) = (res.phi.at(t, w) + u[i][m]) % R.p();
    }
  }

  res.linear = true;
  for (int k = 0; k < R.nvars() && res.linear; ++k)
    if (!(matMul(res.phi, W.rep.varAct[k]) == matMul(R.varMatrix(k), res.phi)))
      res.linear = false;

  HomBasis H = homSpace(W.rep, regularModule(R));
  Echelon ech(R.p(), R.dim() * dw);
  for (const FpMat& X : H.maps) ech.add(X.a);
  res.inHomSpan = ech.containsVec(res.phi.a);
  return res;
}

namespace {

struct VarClass {
  int countA = 0, countB = 0, countC = 0, other = 0;
  int varA = -1, varB = -1;
  int paramA = 0, paramB = 0;
};

}  // namespace

TypeThreeClassification typethreeClassify(const VariableReduction& red) {
  TypeThreeClassification out;
  if (red.comps.size() != 3) return out;
  const int n = red.nvars;
  MonomialIdeal Ired = intersectAll(std::max(n, 1), red.comps);

  // case 1: Teter ideal on exactly three essential variables
  if (n == 3) {
    Exps t(n);
    bool big = true;
    for (int k = 0; k < n; ++k) {
      t[k] = std::max({red.comps[0].a[k], red.comps[1].a[k], red.comps[2].a[k]});
      if (t[k] < 2) big = false;
    }
    if (big && Ired == teterIdeal(t)) {
      TypeThreeMatch m;
      m.caseNo = 1;
      m.compPerm = {0, 1, 2};
      for (int k = 0; k < n; ++k) m.params["a" + std::to_string(k + 1)] = t[k];
      out.matches.push_back(std::move(m));
    }
  }

  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int caseNo = 2; caseNo <= 5; ++caseNo) {
    for (auto& pm : perms) {
      const Exps& A1 = red.comps[pm[0]].a;
      const Exps& A2 = red.comps[pm[1]].a;
      const Exps& A3 = red.comps[pm[2]].a;
      TypeThreeMatch m;
      m.caseNo = caseNo;
      m.compPerm = {pm[0], pm[1], pm[2]};
      bool match = false;
      if (caseNo == 2 || caseNo == 3 || caseNo == 4) {
        // shared pattern analysis: one variable (p, p+1, 1); then per case
        int vA = -1, vB = -1, a = 0, b = 0;
        std::vector<int> rest;
        bool bad = false;
        for (int k = 0; k < n && !bad; ++k) {
          int p1 = A1[k], p2 = A2[k], p3 = A3[k];
          if (p2 == p1 + 1 && p3 == 1) {
            if (vA >= 0) bad = true;
            vA = k;
            a = p1;
          } else if (caseNo == 2 && p3 == p1 + 1 && p2 == 1) {
            if (vB >= 0) bad = true;
            vB = k;
            b = p1;
          } else if (caseNo == 3 && p1 == p2 + 1 && p3 == 1) {
            if (vB >= 0) bad = true;
            vB = k;
            b = p2;
          } else {
            rest.push_back(k);
          }
        }
        if (!bad && vA >= 0) {
          if (caseNo == 2) {
            // rest: (c>=2, 1, 1), at least one
            match = vB >= 0 && !rest.empty();
            for (int k : rest)
              if (!(A1[k] >= 2 && A2[k] == 1 && A3[k] == 1)) match = false;
            if (match) {
              m.params["a"] = a;
              m.params["b"] = b;
              m.specialVars = {vA, vB};
              for (int k : rest) m.params["c" + std::to_string(k + 1)] = A1[k];
            }
          } else if (caseNo == 3) {
            // rest: (1, 1, c>=2), at least one
            match = vB >= 0 && !rest.empty();
            for (int k : rest)
              if (!(A1[k] == 1 && A2[k] == 1 && A3[k] >= 2)) match = false;
            if (match) {
              m.params["a"] = a;
              m.params["b"] = b;
              m.specialVars = {vA, vB};
              for (int k : rest) m.params["c" + std::to_string(k + 1)] = A3[k];
            }
          } else {
            // case 4: rest splits into (1,1,c>=2) and (b>=2,1,1), both nonempty
            match = vB < 0;
            int nA = 0, nB = 0;
            for (int k : rest) {
              if (A1[k] == 1 && A2[k] == 1 && A3[k] >= 2)
                ++nA;
              else if (A1[k] >= 2 && A2[k] == 1 && A3[k] == 1)
                ++nB;
              else
                match = false;
            }
            if (nA == 0 || nB == 0) match = false;
            if (match) {
              m.params["a"] = a;
              m.specialVars = {vA};
              for (int k : rest) {
                if (A3[k] >= 2)
                  m.params["c" + std::to_string(k + 1)] = A3[k];
                else
                  m.params["b" + std::to_string(k + 1)] = A1[k];
              }
            }
          }
        }
      } else {
        // case 5: three nonempty blocks (1,1,a>=2), (1,b>=2,1), (c>=2,1,1)
        int n1 = 0, n2 = 0, n3 = 0;
        match = n > 0;
        for (int k = 0; k < n && match; ++k) {
          int p1 = A1[k], p2 = A2[k], p3 = A3[k];
          if (p1 == 1 && p2 == 1 && p3 >= 2) {
            ++n1;
            m.params["a" + std::to_string(k + 1)] = p3;
          } else if (p1 == 1 && p2 >= 2 && p3 == 1) {
            ++n2;
            m.params["b" + std::to_string(k + 1)] = p2;
          } else if (p1 >= 2 && p2 == 1 && p3 == 1) {
            ++n3;
            m.params["c" + std::to_string(k + 1)] = p1;
          } else {
            match = false;
          }
        }
        if (n1 == 0 || n2 == 0 || n3 == 0) match = false;
      }
      if (match) out.matches.push_back(std::move(m));
    }
  }
  // symmetric component roles can match the same case with permuted
  // parameters; order so the smallest parameter assignment is reported
  std::sort(out.matches.begin(), out.matches.end(),
            [](const TypeThreeMatch& x, const TypeThreeMatch& y) {
              return std::tie(x.caseNo, x.params, x.compPerm) <
                     std::tie(y.caseNo, y.params, y.compPerm);
            });
  if (!out.matches.empty()) out.caseNo = out.matches[0].caseNo;
  return out;
}

namespace {

struct UpsetChecker {
  const FiniteAlgebra& R;
  int d;
  std::vector<Bits> mult;  // mult[b] = indices of multiples x_k * b

  explicit UpsetChecker(const FiniteAlgebra& R_) : R(R_), d(R_.dim()) {
    mult.assign(d, Bits(d));
    for (int b = 0; b < d; ++b)
      for (int k = 0; k < R.nvars(); ++k) {
        int t = R.varStep(k, b);
        if (t >= 0) mult[b].set(t);
      }
  }

  // 0:(0:I') subseteq I':m for the monomial ideal given by the index set
  bool holds(const Bits& I) const {
    Bits ann(d);
    for (int b = 0; b < d; ++b)
      if (I.subsetOf(R.kill(b))) ann.set(b);
    for (int b = 0; b < d; ++b) {
      if (!ann.subsetOf(R.kill(b))) continue;  // b in 0:(0:I')
      if (!mult[b].subsetOf(I)) return false;  // b not in I':m
    }
    return true;
  }

  std::vector<Exps> minimalGens(const Bits& I) const {
    std::vector<Exps> gens;
    for (int b = 0; b < d; ++b) {
      if (!I.test(b)) continue;
      bool minimal = true;
      for (int c = 0; c < b && minimal; ++c)
        if (I.test(c) && R.basis()[c].divides(R.basis()[b])) minimal = false;
      if (minimal) gens.push_back(R.basis()[b].e);
    }
    return gens;
  }

  Bits upsetOf(const MonomialIdeal& K) const {
    Bits I(d);
    for (int b = 0; b < d; ++b)
      if (K.contains(R.basis()[b])) I.set(b);
    return I;
  }

  Bits closure(std::vector<int> seeds) const {
    Bits I(d);
    while (!seeds.empty()) {
      int b = seeds.back();
      seeds.pop_back();
      if (I.test(b)) continue;
      I.set(b);
      for (int k = 0; k < R.nvars(); ++k) {
        int t = R.varStep(k, b);
        if (t >= 0 && !I.test(t)) seeds.push_back(t);
      }
    }
    return I;
  }
};

}  // namespace

Condition2Result condition2Monomial(const FiniteAlgebra& R, uint64_t cap, uint64_t seed,
                                    int randomSamples) {
  Condition2Result res;
  res.cap = cap;
  const int d = R.dim();
  UpsetChecker chk(R);

  auto fail = [&](const Bits& I) {
    res.holds = false;
    res.witnessGens = chk.minimalGens(I);
  };

  // exhaustive enumeration of up-closed subsets, elements decided from the
  // top of the divisibility order down; abandoned when the cap is hit
  bool capped = false;
  Bits cur(d);
  std::function<bool(int)> dfs = [&](int b) -> bool {  // false = stop entirely
    if (b < 0) {
      ++res.checked;
      if (res.checked > cap) {
        capped = true;
        return false;
      }
      if (!chk.holds(cur)) {
        fail(cur);
        return false;
      }
      return true;
    }
    if (!dfs(b - 1)) return false;  // b excluded
    if (chk.mult[b].subsetOf(cur)) {
      cur.set(b);
      bool cont = dfs(b - 1);
      cur.reset(b);
      if (!cont) return false;
    }
    return true;
  };
  dfs(d - 1);
  if (!res.holds) return res;
  if (!capped) {
    res.exhaustive = true;
    return res;
  }

  // sampled mode: deterministic lattice candidates first
  res.checked = 0;
  auto trial = [&](const Bits& I) {
    ++res.sampledMonomial;
    if (res.holds && !chk.holds(I)) fail(I);
  };
  for (int b = 0; b < d && res.holds; ++b) trial(chk.closure({b}));
  for (int b1 = 0; b1 < d && res.holds; ++b1)
    for (int b2 = b1 + 1; b2 < d && res.holds; ++b2) trial(chk.closure({b1, b2}));
  {
    auto comps = irreducibleDecomposition(R.ideal());
    MonomialIdeal m = maximalIdeal(R.nvars());
    MonomialIdeal mp = m;
    for (int j = 0; j < 8 && res.holds; ++j) {
      trial(chk.upsetOf(mp));
      mp = product(mp, m);
    }
    for (const auto& c : comps) {
      if (!res.holds) break;
      trial(chk.upsetOf(expand(c)));
      trial(chk.upsetOf(colonIdeal(R.ideal(), expand(c))));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::uniform_int_distribution<int> count(1, 3);
  for (int s = 0; s < randomSamples && res.holds; ++s) {
    std::vector<int> seeds;
    int c = count(rng);
    for (int t = 0; t < c; ++t) seeds.push_back(pick(rng));
    trial(chk.closure(std::move(seeds)));
  }

  // random general (non-monomial) ideals via linear algebra
  Subspace mSub = maximalIdealSubspace(R);
  std::uniform_int_distribution<uint32_t> coef(0, R.p() - 1);
  for (int s = 0; s < randomSamples / 4 && res.holds; ++s) {
    std::vector<FpVec> gens;
    int c = 1 + (s % 2);
    for (int t = 0; t < c; ++t) {
      FpVec v(d, 0);
      for (int i = 0; i < d; ++i) v[i] = coef(rng);
      gens.push_back(std::move(v));
    }
    Subspace Ip = idealGeneratedBy(R, gens);
    ++res.sampledSubspace;
    Subspace ann2 = annihilator(R, annihilator(R, Ip));
    Subspace Im = colonSubspace(R, Ip, mSub);
    if (!subspaceLeq(ann2, Im)) {
      res.holds = false;
      res.subspaceWitness = true;
    }
  }
  return res;
}

Prop25Report prop25Verify(const FiniteAlgebra& R, const ModuleRep& omega,
                          uint64_t seed, int randomMaps) {
  Prop25Report rep;
  HomBasis H = homSpace(omega, regularModule(R));
  const int dw = omega.dim, dR = R.dim();
  const uint32_t p = R.p();
  std::vector<FpMat> acts = basisActions(omega);

  auto annInOmega = [&](const Subspace& Jf) {
    FpMat stacked(p, 0, dw);
    for (int r = 0; r < Jf.basis.rows; ++r) {
      FpMat A(p, dw, dw);
      for (int m = 0; m < dR; ++m) {
        uint32_t c = Jf.basis.at(r, m);
        if (!c) continue;
        for (int row = 0; row < dw; ++row) fpk::axpy(A.row(row), acts[m].row(row), dw, c, p);
      }
      for (int row = 0; row < dw; ++row)
        stacked.appendRow(std::span<const uint32_t>(A.row(row), dw));
    }
    if (stacked.rows == 0) return fullSubspace(p, dw);
    return Subspace{nullspaceRows(stacked)};
  };
  auto columnSpan = [&](const FpMat& X) {
    FpMat Xt = X.transpose();
    return spanRows(std::move(Xt));
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> coef(0, p - 1);
  Echelon Iech(p, dR), Jech(p, dR);
  std::vector<FpMat> maps = H.maps;
  for (int s = 0; s < randomMaps; ++s) {
    FpMat f(p, dR, dw);
    for (const FpMat& B : H.maps) {
      uint32_t c = coef(rng);
      if (c)
        for (size_t t = 0; t < f.a.size(); ++t)
          f.a[t] = static_cast<uint32_t>((f.a[t] + static_cast<uint64_t>(c) * B.a[t]) % p);
    }
    maps.push_back(std::move(f));
  }
  for (const FpMat& f : maps) {
    auto ft = tilde(omega, f);
    if (!ft) {
      rep.involution = false;
      continue;
    }
    auto ftt = tilde(omega, *ft);
    if (!ftt || !(*ftt == f)) rep.involution = false;
    Subspace If = columnSpan(f), Jf = columnSpan(*ft);
    if (If.dim() != Jf.dim()) rep.equalImageDims = false;
    Subspace kerf{nullspaceRows(f)};
    if (!(kerf == annInOmega(Jf))) rep.kernelFormula = false;
    for (int r = 0; r < If.basis.rows; ++r)
      Iech.add(FpVec(If.basis.row(r), If.basis.row(r) + dR));
    for (int r = 0; r < Jf.basis.rows; ++r)
      Jech.add(FpVec(Jf.basis.row(r), Jf.basis.row(r) + dR));
  }
  Subspace trace = traceIdeal(R, omega);
  rep.traceBothWays = Iech.toSubspace() == trace && Jech.toSubspace() == trace;

  // matrix of the tilde map in the Hom basis must be invertible
  if (!H.maps.empty()) {
    FpMat B(p, H.dim(), dR * dw);
    for (int i = 0; i < H.dim(); ++i)
      std::copy(H.maps[i].a.begin(), H.maps[i].a.end(), B.row(i));
    FpMat Bt = B.transpose();
    FpMat Phi(p, H.dim(), H.dim());
    for (int i = 0; i < H.dim(); ++i) {
      auto ft = tilde(omega, H.maps[i]);
      if (!ft) {
        rep.phiInvertible = false;
        break;
      }
      auto sol = solve(Bt, ft->a);
      if (!sol) {
        rep.phiInvertible = false;  // tilde left the Hom space: broken
        break;
      }
      for (int j = 0; j < H.dim(); ++j) Phi.at(j, i) = (*sol)[j];
    }
    if (rep.phiInvertible && rank(Phi) != H.dim()) rep.phiInvertible = false;
  }
  return rep;
}

bool prop52Check(const FiniteAlgebra& R, const std::vector<IrreducibleComponent>& comps,
                 const Subspace& trace) {
  MonomialIdeal s = MonomialIdeal::zero(R.nvars());
  for (const auto& c : comps) s = sum(s, colonIdeal(R.ideal(), expand(c)));
  return subspaceLeq(trace, idealImage(R, s));
}

bool eq11Check(const FiniteAlgebra& R, const CanonicalModule& W) {
  // (f_i):K is an ideal of the Gorenstein ambient S/J, so the colon is taken
  // with J added to the principal ideal
  const int n = R.nvars();
  MonomialIdeal Jid = expand(W.J);
  MonomialIdeal total = Jid;
  for (const auto& fi : W.f)
    total = sum(total, colonIdeal(sum(principal(fi), Jid), W.K));
  for (int k = 0; k < n; ++k)
    if (!total.contains(variable(n, k))) return false;
  return true;
}

bool eq12Check(const FiniteAlgebra& R, const CanonicalModule& W) {
  // (f_i):K escapes m^2 in S/J: a generator of degree 0, or of degree 1 that
  // is not already zero in S/J
  MonomialIdeal Jid = expand(W.J);
  for (const auto& fi : W.f) {
    MonomialIdeal c = colonIdeal(sum(principal(fi), Jid), W.K);
    for (const auto& g : c.gens()) {
      if (g.degree() == 0) return true;
      if (g.degree() == 1 && !Jid.contains(g)) return true;
    }
  }
  (void)R;
  return false;
}

}  // namespace agt
