#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "agt/cover.hpp"
#include "agt/module.hpp"

// Combinatorial almost-Gorenstein criteria: the type-two sum-of-colons test
// with its case analysis, the five type-three exponent templates, the
// necessary conditions on colon sums, and the exhaustive/sampled check of the
// biduality condition over all ideals of R.

namespace agt {

// Variables whose exponent is 1 in every component are quotiented away before
// classification; `kept` maps reduced variable indices back to the original.
struct VariableReduction {
  int nvars = 0;  // reduced count
  std::vector<int> kept;
  std::vector<int> dropped;
  std::vector<IrreducibleComponent> comps;  // reduced components
};
VariableReduction reduceVariables(const std::vector<IrreducibleComponent>& comps);

// J1:J2 + J2:J1 = m
bool typetwoCriterion(const IrreducibleComponent& J1, const IrreducibleComponent& J2);

struct TypeTwoClassification {
  char caseLabel = 0;  // 'a', 'b', 'c', or 0 for none
  std::string matches;  // every matching case letter, in order
  std::vector<int> varPerm;  // reduced-variable relabeling used for the normal form
  std::map<std::string, int> params;
  std::vector<Monomial> normalForm;  // generators of I after relabeling
};
TypeTwoClassification typetwoClassify(const VariableReduction& red);

// Sum_{j != i} (J_i:J_j) + Intersection_j (J_j:J_i) contains m
bool prop42Necessary(const std::vector<IrreducibleComponent>& comps, int i);

struct Lemma51Report {
  // one entry per variable: does x_k*J_i sit in I:(I:J_i) for all i, and is
  // x_k in (I:J_1)+(I:J_2)+(I:J_3)
  std::vector<bool> antecedent;
  std::vector<bool> consequent;
  bool implicationHolds = true;  // antecedent => consequent for every variable
};
Lemma51Report lemma51Check(const MonomialIdeal& I, const std::vector<IrreducibleComponent>& comps);

struct Lemma53Result {
  bool ok = false;
  int badI = -1, badJ = -1;  // violated congruence pair when !ok
  FpMat phi;                 // dim R x dim omega
  bool linear = false;       // phi intertwines all variable actions
  bool inHomSpan = false;    // phi lies in the span of hom_space(omega, R)
};
// u[i]: element of R (coefficients over the standard basis) meant as phi(f_i).
Lemma53Result lemma53Build(const FiniteAlgebra& R, const CanonicalModule& W,
                           const std::vector<FpVec>& u);

struct TypeThreeMatch {
  int caseNo = 0;
  std::vector<int> compPerm;  // components reordered as (J1,J2,J3) = comps[perm]
  std::map<std::string, int> params;
  std::vector<int> specialVars;  // distinguished variables, reduced indices
};
struct TypeThreeClassification {
  int caseNo = 0;  // 0 = none; otherwise lowest matching case number
  std::vector<TypeThreeMatch> matches;  // all matches, ordered by case number
};
TypeThreeClassification typethreeClassify(const VariableReduction& red);

struct Condition2Result {
  bool holds = true;
  bool exhaustive = false;
  uint64_t checked = 0;        // monomial ideals examined
  uint64_t cap = 0;
  uint64_t sampledMonomial = 0;
  uint64_t sampledSubspace = 0;
  std::vector<Exps> witnessGens;  // generators of a violating monomial ideal
  bool subspaceWitness = false;   // violation found only as a general subspace
};
// Checks 0:(0:I') subseteq I':m over ideals I' of R: exhaustively over
// monomial ideals when their count fits the cap, otherwise deterministic
// lattice samples plus seeded random monomial and general-subspace ideals.
Condition2Result condition2Monomial(const FiniteAlgebra& R, uint64_t cap = 2000000,
                                    uint64_t seed = 1, int randomSamples = 200);

struct Prop25Report {
  bool involution = true;      // tilde(tilde(f)) = f
  bool kernelFormula = true;   // ker f = 0 :_omega image(tilde f)
  bool equalImageDims = true;  // dim f(omega) = dim ftilde(omega)
  bool phiInvertible = true;   // tilde is invertible on the Hom basis
  bool traceBothWays = true;   // sum of f-images = sum of ftilde-images = trace
  bool ok() const {
    return involution && kernelFormula && equalImageDims && phiInvertible && traceBothWays;
  }
};
Prop25Report prop25Verify(const FiniteAlgebra& R, const ModuleRep& omega,
                          uint64_t seed, int randomMaps = 5);

// trace(omega) inside the image of I:J_1 + ... + I:J_n
bool prop52Check(const FiniteAlgebra& R, const std::vector<IrreducibleComponent>& comps,
                 const Subspace& trace);
// sum_i (f_i):K together with J contains every variable
bool eq11Check(const FiniteAlgebra& R, const CanonicalModule& W);
// some (f_i):K has a minimal generator of degree <= 1
bool eq12Check(const FiniteAlgebra& R, const CanonicalModule& W);

}  // namespace agt
