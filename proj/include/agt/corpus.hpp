#pragma once

#include <cstdint>
#include <string>

#include "agt/classify.hpp"

// Seeded random corpora of m-primary monomial ideals with a prescribed number
// of irreducible components, deduplicated up to variable permutation, and the
// discrepancy hunt comparing the trace-ideal test against the biduality
// condition over all proper ideals.

namespace agt {

struct CorpusSpec {
  int nVars = 2;
  int maxExp = 4;
  int targetType = 0;  // number of components; 0 = unconstrained (1..4)
  int count = 10;
  uint64_t seed = 1;
  int dimCap = FiniteAlgebra::kDefaultDimCap;
};

// Throws std::runtime_error when the spec cannot be met after bounded retries.
std::vector<MonomialIdeal> generateCorpus(const CorpusSpec& spec);

struct HuntResult {
  MonomialIdeal ideal;
  int type = 0;
  bool c1 = false;             // trace contains the maximal ideal
  Condition2Result c2;
  std::string verdict;         // "consistent" | "candidate-counterexample"
};

// candidate-counterexample: condition (2) exhaustively true but the trace
// misses the maximal ideal, or a definite condition-(2) witness despite the
// trace test passing. Neither may occur with three or fewer components.
std::vector<HuntResult> hunt(const std::vector<MonomialIdeal>& corpus, uint32_t p,
                             uint64_t cap, uint64_t seed, int samples);

}  // namespace agt
