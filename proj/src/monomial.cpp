#include "agt/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace agt {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::isOne() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (e.size() != other.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

Monomial colonQuot(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i] - b.e[i], 0);
  return r;
}

Monomial one(int nvars) { return Monomial(Exps(nvars, 0)); }

Monomial variable(int nvars, int k) {
  Exps e(nvars, 0);
  e[k] = 1;
  return Monomial(std::move(e));
}

bool gradedLexLess(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e > b.e;  // x_1 before x_2 within a degree
}

std::string describe(const Monomial& m) {
  if (m.isOne()) return "1";
  std::string s;
  for (int k = 0; k < m.nvars(); ++k) {
    if (m.e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k + 1);
    if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
  }
  return s;
}

std::string describe(const MonomialIdeal& I) {
  if (I.isZero()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < I.gens().size(); ++i) {
    if (i) s += ", ";
    s += describe(I.gens()[i]);
  }
  return s + ")";
}

MonomialIdeal MonomialIdeal::zero(int nvars) {
  MonomialIdeal I;
  I.n_ = nvars;
  return I;
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return make(nvars, {one(nvars)});
}

MonomialIdeal MonomialIdeal::make(int nvars, std::vector<Monomial> gens) {
  if (nvars < 1) throw std::invalid_argument("ideal needs at least one variable");
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw std::invalid_argument("generator arity mismatch");
  // minimalize: drop any generator divisible by another
  std::sort(gens.begin(), gens.end(), gradedLexLess);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  MonomialIdeal I;
  I.n_ = nvars;
  I.gens_ = std::move(kept);
  return I;
}

bool MonomialIdeal::isUnit() const { return gens_.size() == 1 && gens_[0].isOne(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::containsIdeal(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  auto key = [](const MonomialIdeal& I) {
    std::vector<Exps> v;
    for (const auto& g : I.gens()) v.push_back(g.e);
    return v;
  };
  return key(*this) < key(o);
}

namespace {
void requireSameVars(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw std::invalid_argument("variable count mismatch");
}
}  // namespace

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameVars(I, J);
  std::vector<Monomial> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::make(I.nvars(), std::move(g));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameVars(I, J);
  if (I.isZero() || J.isZero()) return MonomialIdeal::zero(I.nvars());
  std::vector<Monomial> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(lcm(a, b));
  return MonomialIdeal::make(I.nvars(), std::move(g));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameVars(I, J);
  std::vector<Monomial> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a * b);
  return MonomialIdeal::make(I.nvars(), std::move(g));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  std::vector<Monomial> g;
  for (const auto& a : I.gens()) g.push_back(colonQuot(a, m));
  return MonomialIdeal::make(I.nvars(), std::move(g));
}

MonomialIdeal colonIdeal(const MonomialIdeal& I, const MonomialIdeal& J) {
  requireSameVars(I, J);
  if (J.isZero()) return MonomialIdeal::unit(I.nvars());
  MonomialIdeal r = colon(I, J.gens()[0]);
  for (size_t i = 1; i < J.gens().size(); ++i) r = intersect(r, colon(I, J.gens()[i]));
  return r;
}

MonomialIdeal maximalIdeal(int nvars) {
  std::vector<Monomial> g;
  for (int k = 0; k < nvars; ++k) g.push_back(variable(nvars, k));
  return MonomialIdeal::make(nvars, std::move(g));
}

MonomialIdeal principal(const Monomial& m) {
  return MonomialIdeal::make(m.nvars(), {m});
}

MonomialIdeal expand(const IrreducibleComponent& c) {
  std::vector<Monomial> g;
  for (int k = 0; k < c.nvars(); ++k) {
    Exps e(c.nvars(), 0);
    e[k] = c.a[k];
    g.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(c.nvars(), std::move(g));
}

MonomialIdeal irreducibleColon(const IrreducibleComponent& Ji, const IrreducibleComponent& Jj) {
  if (Ji.nvars() != Jj.nvars()) throw std::invalid_argument("variable count mismatch");
  Exps diff(Ji.nvars(), 0);
  for (int k = 0; k < Ji.nvars(); ++k)
    if (Ji.a[k] > Jj.a[k]) diff[k] = Ji.a[k] - Jj.a[k];
  std::vector<Monomial> g = expand(Ji).gens();
  g.push_back(Monomial(std::move(diff)));  // may be 1: unit ideal
  return MonomialIdeal::make(Ji.nvars(), std::move(g));
}

bool isMPrimary(const MonomialIdeal& I) {
  for (int k = 0; k < I.nvars(); ++k) {
    bool purePower = false;
    for (const auto& g : I.gens()) {
      bool pure = g.e[k] > 0;
      for (int l = 0; pure && l < I.nvars(); ++l)
        if (l != k && g.e[l] != 0) pure = false;
      if (pure) {
        purePower = true;
        break;
      }
    }
    if (!purePower && !I.isUnit()) return false;
  }
  return !I.isZero();
}

MonomialIdeal intersectAll(int nvars, const std::vector<IrreducibleComponent>& comps) {
  if (comps.empty()) return MonomialIdeal::unit(nvars);
  MonomialIdeal r = expand(comps[0]);
  for (size_t i = 1; i < comps.size(); ++i) r = intersect(r, expand(comps[i]));
  return r;
}

namespace {

// Leaf of the splitting recursion: all generators are pure powers.
IrreducibleComponent leafComponent(const MonomialIdeal& I) {
  Exps a(I.nvars(), 0);
  for (const auto& g : I.gens())
    for (int k = 0; k < I.nvars(); ++k)
      if (g.e[k] > 0) a[k] = g.e[k];
  for (int k = 0; k < I.nvars(); ++k)
    if (a[k] == 0) throw std::logic_error("leaf ideal not m-primary");
  return IrreducibleComponent{std::move(a)};
}

void decomposeRec(const MonomialIdeal& I, std::set<MonomialIdeal>& seen,
                  std::set<Exps>& out) {
  if (seen.count(I)) return;
  seen.insert(I);
  // find a generator with at least two variables in its support
  for (const auto& g : I.gens()) {
    int firstVar = -1, supportSize = 0;
    for (int k = 0; k < I.nvars(); ++k)
      if (g.e[k] > 0) {
        if (firstVar < 0) firstVar = k;
        ++supportSize;
      }
    if (supportSize < 2) continue;
    Exps u(I.nvars(), 0), v = g.e;
    u[firstVar] = g.e[firstVar];
    v[firstVar] = 0;
    std::vector<Monomial> g1 = I.gens(), g2 = I.gens();
    g1.push_back(Monomial(std::move(u)));
    g2.push_back(Monomial(std::move(v)));
    decomposeRec(MonomialIdeal::make(I.nvars(), std::move(g1)), seen, out);
    decomposeRec(MonomialIdeal::make(I.nvars(), std::move(g2)), seen, out);
    return;
  }
  out.insert(leafComponent(I).a);
}

}  // namespace

std::vector<IrreducibleComponent> irreducibleDecomposition(const MonomialIdeal& I) {
  if (!isMPrimary(I)) throw std::invalid_argument("irreducibleDecomposition: ideal not m-primary");
  std::set<MonomialIdeal> seen;
  std::set<Exps> collected;
  decomposeRec(I, seen, collected);
  std::vector<IrreducibleComponent> comps;
  for (const auto& a : collected) comps.push_back(IrreducibleComponent{a});
  // prune to an irredundant set, certified by re-intersection
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < comps.size(); ++i) {
      std::vector<IrreducibleComponent> rest;
      for (size_t j = 0; j < comps.size(); ++j)
        if (j != i) rest.push_back(comps[j]);
      if (intersectAll(I.nvars(), rest) == I) {
        comps = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  if (intersectAll(I.nvars(), comps) != I)
    throw std::logic_error("decomposition does not re-intersect to the input");
  return comps;
}

EnclosingIrreducible enclosingIrreducible(const MonomialIdeal& I,
                                          const std::vector<IrreducibleComponent>& comps) {
  const int n = I.nvars();
  Exps t(n, 1);
  for (const auto& c : comps)
    for (int k = 0; k < n; ++k) t[k] = std::max(t[k], c.a[k]);
  EnclosingIrreducible enc;
  enc.J = IrreducibleComponent{t};
  MonomialIdeal Jideal = expand(enc.J);
  for (const auto& c : comps) {
    Exps fe(n, 0);
    for (int k = 0; k < n; ++k) fe[k] = t[k] - c.a[k];
    Monomial fi(std::move(fe));
    if (colon(Jideal, fi) != expand(c))
      throw std::logic_error("enclosing irreducible: J : f_i != J_i");
    enc.f.push_back(std::move(fi));
  }
  return enc;
}

std::vector<Monomial> standardMonomials(const MonomialIdeal& I) {
  if (!isMPrimary(I)) throw std::invalid_argument("standardMonomials: ideal not m-primary");
  const int n = I.nvars();
  Exps bound(n, 0);
  for (int k = 0; k < n; ++k) {
    int b = -1;
    for (const auto& g : I.gens()) {
      bool pure = g.e[k] > 0;
      for (int l = 0; pure && l < n; ++l)
        if (l != k && g.e[l] != 0) pure = false;
      if (pure) b = (b < 0) ? g.e[k] : std::min(b, g.e[k]);
    }
    if (b < 0) throw std::logic_error("no pure power bound");
    bound[k] = b;
  }
  std::vector<Monomial> out;
  Exps cur(n, 0);
  // enumerate the box below the pure-power bounds
  while (true) {
    Monomial m(cur);
    if (!I.contains(m)) out.push_back(std::move(m));
    int k = n - 1;
    while (k >= 0) {
      if (++cur[k] < bound[k]) break;
      cur[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(), gradedLexLess);
  return out;
}

std::vector<int> hilbertFunction(const MonomialIdeal& I) {
  std::vector<int> hf;
  for (const auto& m : standardMonomials(I)) {
    int d = m.degree();
    if (static_cast<int>(hf.size()) <= d) hf.resize(d + 1, 0);
    ++hf[d];
  }
  while (!hf.empty() && hf.back() == 0) hf.pop_back();
  return hf;
}

}  // namespace agt
