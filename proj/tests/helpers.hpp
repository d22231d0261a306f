#pragma once

#include <random>

#include "agt/monomial.hpp"

// Shared test helpers: box-enumeration membership oracles that recompute
// ideal operations from first principles, and seeded random ideals.

namespace agt::testing {

inline MonomialIdeal fromComps(std::vector<Exps> cs) {
  std::vector<IrreducibleComponent> comps;
  for (auto& c : cs) comps.push_back(IrreducibleComponent{std::move(c)});
  return intersectAll(comps[0].nvars(), comps);
}

inline MonomialIdeal gens(int n, std::vector<Exps> es) {
  std::vector<Monomial> g;
  for (auto& e : es) g.push_back(Monomial(std::move(e)));
  return MonomialIdeal::make(n, std::move(g));
}

// every monomial with exponents < bound, as a flat enumeration
inline std::vector<Monomial> box(int n, int bound) {
  std::vector<Monomial> out;
  Exps e(n, 0);
  while (true) {
    out.push_back(Monomial(e));
    int k = 0;
    while (k < n && ++e[k] == bound) e[k++] = 0;
    if (k == n) return out;
  }
}

// m in I:J iff m*g in I for every generator g of J
inline bool colonMember(const MonomialIdeal& I, const MonomialIdeal& J, const Monomial& m) {
  if (J.isZero()) return true;  // I : (0) = (1)
  for (const auto& g : J.gens())
    if (!I.contains(m * g)) return false;
  return true;
}

inline IrreducibleComponent randomComponent(std::mt19937_64& rng, int n, int maxExp) {
  Exps a(n);
  for (int k = 0; k < n; ++k) a[k] = 1 + static_cast<int>(rng() % maxExp);
  return IrreducibleComponent{std::move(a)};
}

inline MonomialIdeal randomIdeal(std::mt19937_64& rng, int n, int maxExp, int maxComps) {
  int c = 1 + static_cast<int>(rng() % maxComps);
  std::vector<IrreducibleComponent> comps;
  for (int i = 0; i < c; ++i) comps.push_back(randomComponent(rng, n, maxExp));
  return intersectAll(n, comps);
}

}  // namespace agt::testing
