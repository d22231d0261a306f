#pragma once

#include <optional>
#include <vector>

#include "agt/algebra.hpp"

// Finite R-modules with explicit variable actions. Modules whose basis is
// labelled by distinct monomials (R itself, its ideals, the canonical module)
// get a fast multigraded Hom computation; a dense intertwiner solver serves as
// reference and handles unlabelled modules.

namespace agt {

struct ModuleRep {
  const FiniteAlgebra* R = nullptr;
  int dim = 0;
  std::vector<FpMat> varAct;       // action of x_k
  std::vector<int> generators;     // indices generating the module over R
  std::vector<Exps> labels;        // multidegrees; empty if not graded
  bool graded = false;
  // step[k][i] = j if x_k sends basis i to basis j with coefficient 1, -1 if
  // to zero (graded modules only)
  std::vector<std::vector<int>> step;
};

ModuleRep regularModule(const FiniteAlgebra& R);
ModuleRep maximalIdealModule(const FiniteAlgebra& R);

// Action matrices of every basis element of R on the module, in basis order.
std::vector<FpMat> basisActions(const ModuleRep& M);
// Action of an arbitrary ring element.
FpMat actElement(const ModuleRep& M, std::span<const uint32_t> r);

struct QuotientModule {
  ModuleRep rep;
  FpMat proj;  // dim(Q) x dim(R): coordinates of a coset
  FpMat lift;  // dim(R) x dim(Q): a section of proj
};
// R/I' for an ideal subspace I' of R (not necessarily monomial).
QuotientModule quotientModule(const FiniteAlgebra& R, const Subspace& Iprime);

// The canonical module omega = (J : I)/J, with J the irreducible ideal
// enclosing I built from the componentwise-maximal exponents.
struct CanonicalModule {
  ModuleRep rep;
  IrreducibleComponent J;
  std::vector<Monomial> f;     // J : f_i carves out the i-th component
  MonomialIdeal K;             // J : I
  std::vector<Monomial> wbasis;  // monomial labels of the basis
  std::vector<int> findex;     // positions of the f_i in wbasis
};
CanonicalModule canonicalModule(const FiniteAlgebra& R,
                                const std::vector<IrreducibleComponent>& comps);

// Basis of Hom_R(M, N); each map is a dim(N) x dim(M) matrix.
struct HomBasis {
  std::vector<FpMat> maps;
  int dim() const { return static_cast<int>(maps.size()); }
};
HomBasis homDense(const ModuleRep& M, const ModuleRep& N);
HomBasis homGraded(const ModuleRep& M, const ModuleRep& N);
HomBasis homSpace(const ModuleRep& M, const ModuleRep& N);

// Trace of omega in R: the ideal generated by all images of maps omega -> R.
Subspace traceIdeal(const FiniteAlgebra& R, const ModuleRep& omega);

struct Condition1Result {
  Subspace trace;
  bool gorenstein = false;       // trace is all of R
  bool almostGorenstein = false; // trace contains the maximal ideal
};
Condition1Result condition1Check(const FiniteAlgebra& R, const ModuleRep& omega);

// For f in Hom(omega, R), the unique ftilde with f(x)y = ftilde(y)x.
std::optional<FpMat> tilde(const ModuleRep& omega, const FpMat& f);

// Kernel of R/I' -> (R/I')** (duals into R), returned as its preimage in R
// (a subspace containing I'). Computed two independent ways; throws if the
// annihilator route and the Hom route disagree.
Subspace bidualityKernel(const FiniteAlgebra& R, const Subspace& Iprime);

}  // namespace agt
