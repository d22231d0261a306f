#pragma once

#include <cstdint>
#include <string>

#include "agt/module.hpp"

// Decides whether R is a quotient of a Gorenstein Artinian ring by its socle
// (for odd p, socle inside m^2: equivalent to a surjection omega -> m) and,
// on success, builds that Gorenstein ring S = k (+) omega explicitly with the
// multiplication (a,x)(b,y) = (ab, ay + bx + h(x)y/2) and verifies the ring
// axioms and the quotient isomorphism.

namespace agt {

struct Cover {
  uint32_t p = 0;
  int dim = 0;  // 1 + dim omega; basis: e0 = identity, then omega basis
  // mul[i][j]: coordinates of w_i * w_j in the omega block (no e0 component)
  std::vector<std::vector<FpVec>> mul;
};

struct CoverVerification {
  bool dimOk = false;          // dim S = dim R + 1
  bool commutative = false;
  bool associative = false;
  int socleDim = -1;
  bool projRingHom = false;    // (a,x) -> a + h(x)/2 respects products
  bool projKernelIsSocle = false;
  bool quotientIso = false;    // the projection hits all of R
  bool ok() const {
    return dimOk && commutative && associative && socleDim == 1 && projRingHom &&
           projKernelIsSocle && quotientIso;
  }
};

enum class TeterStatus { Found, NotFound, SocleNotInM2 };

struct TeterResult {
  TeterStatus status = TeterStatus::NotFound;
  bool specialM2 = false;      // R = k[X]/m^2; fixture cover used
  FpMat f;                     // surjection omega -> m (when found by search)
  FpMat h;                     // symmetric map used for the cover
  int samples = 0;
  // log2 of the false-negative probability bound (N * log2(dim R / p));
  // meaningful only for NotFound
  double log2FailureBound = 0.0;
};

TeterResult teterTest(const FiniteAlgebra& R, const ModuleRep& omega,
                      uint64_t seed, int samples = 24);

// Cover from a symmetric surjection h (h(x)y = h(y)x, rank dim R - 1).
Cover buildCover(const FiniteAlgebra& R, const ModuleRep& omega, const FpMat& h);
// Fixture cover k[X]/(X_i X_j, X_i^2 - X_j^2) for R = k[X]/m^2; also covers
// R = k (n irrelevant) by k[e]/(e^2).
Cover specialM2Cover(const FiniteAlgebra& R);

// proj columns: image in R of each cover basis element.
FpMat coverProjection(const FiniteAlgebra& R, const ModuleRep& omega, const FpMat& h);
FpMat specialM2Projection(const FiniteAlgebra& R);

CoverVerification verifyCover(const FiniteAlgebra& R, const Cover& S, const FpMat& proj);

}  // namespace agt
