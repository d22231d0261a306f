#include "agt/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "agt/module.hpp"

namespace agt {

namespace {

// canonical form under variable permutation: the smallest sorted component
// list over all relabelings
std::vector<Exps> canonicalKey(const std::vector<IrreducibleComponent>& comps, int n) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::vector<Exps> best;
  do {
    std::vector<Exps> cur;
    for (const auto& c : comps) {
      Exps e(n);
      for (int k = 0; k < n; ++k) e[k] = c.a[perm[k]];
      cur.push_back(std::move(e));
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<MonomialIdeal> generateCorpus(const CorpusSpec& spec) {
  if (spec.nVars < 1 || spec.maxExp < 1 || spec.count < 0)
    throw std::runtime_error("invalid corpus spec");
  std::mt19937_64 rng(spec.seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

  std::vector<MonomialIdeal> out;
  std::set<std::vector<Exps>> seen;
  const long retries = 4000L * std::max(spec.count, 1);
  for (long t = 0; t < retries && static_cast<int>(out.size()) < spec.count; ++t) {
    int type = spec.targetType > 0 ? spec.targetType : draw(1, 4);
    std::vector<IrreducibleComponent> comps;
    for (int i = 0; i < type; ++i) {
      Exps a(spec.nVars);
      for (int k = 0; k < spec.nVars; ++k) a[k] = draw(1, spec.maxExp);
      comps.push_back(IrreducibleComponent{std::move(a)});
    }
    MonomialIdeal I = intersectAll(spec.nVars, comps);
    auto dec = irreducibleDecomposition(I);
    if (static_cast<int>(dec.size()) != type) continue;  // redundant draw
    if (static_cast<int>(standardMonomials(I).size()) > spec.dimCap) continue;
    auto key = canonicalKey(dec, spec.nVars);
    if (!seen.insert(std::move(key)).second) continue;
    out.push_back(std::move(I));
  }
  if (static_cast<int>(out.size()) < spec.count)
    throw std::runtime_error("corpus spec infeasible: only " + std::to_string(out.size()) +
                             " of " + std::to_string(spec.count) + " ideals after retries");
  return out;
}

std::vector<HuntResult> hunt(const std::vector<MonomialIdeal>& corpus, uint32_t p,
                             uint64_t cap, uint64_t seed, int samples) {
  std::vector<HuntResult> out;
  for (const auto& I : corpus) {
    HuntResult r;
    r.ideal = I;
    auto comps = irreducibleDecomposition(I);
    r.type = static_cast<int>(comps.size());
    FiniteAlgebra R(I, p);
    auto W = canonicalModule(R, comps);
    r.c1 = condition1Check(R, W.rep).almostGorenstein;
    r.c2 = condition2Monomial(R, cap, seed, samples);
    bool missedByTrace = r.c2.holds && r.c2.exhaustive && !r.c1;
    bool definiteWitness = r.c1 && !r.c2.holds;
    r.verdict = (missedByTrace || definiteWitness) ? "candidate-counterexample" : "consistent";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace agt
