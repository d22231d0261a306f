#include "agt/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace agt {

ModuleRep regularModule(const FiniteAlgebra& R) {
  ModuleRep M;
  M.R = &R;
  M.dim = R.dim();
  for (int k = 0; k < R.nvars(); ++k) M.varAct.push_back(R.varMatrix(k));
  M.generators = {0};  // basis is graded-lex sorted, so index 0 is 1
  M.graded = true;
  for (const auto& b : R.basis()) M.labels.push_back(b.e);
  M.step.assign(R.nvars(), std::vector<int>(R.dim(), -1));
  for (int k = 0; k < R.nvars(); ++k)
    for (int j = 0; j < R.dim(); ++j) M.step[k][j] = R.varStep(k, j);
  return M;
}

namespace {

// Module spanned by the R-basis monomials listed in keep (an up-set under
// multiplication within the standard monomials).
ModuleRep monomialSubmodule(const FiniteAlgebra& R, const std::vector<int>& keep) {
  ModuleRep M;
  M.R = &R;
  M.dim = static_cast<int>(keep.size());
  std::vector<int> pos(R.dim(), -1);
  for (int i = 0; i < M.dim; ++i) pos[keep[i]] = i;
  M.graded = true;
  for (int i : keep) M.labels.push_back(R.basis()[i].e);
  M.step.assign(R.nvars(), std::vector<int>(M.dim, -1));
  for (int k = 0; k < R.nvars(); ++k) {
    FpMat A(R.p(), M.dim, M.dim);
    for (int i = 0; i < M.dim; ++i) {
      int t = R.varStep(k, keep[i]);
      if (t >= 0 && pos[t] >= 0) {
        M.step[k][i] = pos[t];
        A.at(pos[t], i) = 1;
      }
    }
    M.varAct.push_back(std::move(A));
  }
  // generators: elements not reachable by a variable step from inside
  std::vector<char> hit(M.dim, 0);
  for (int k = 0; k < R.nvars(); ++k)
    for (int i = 0; i < M.dim; ++i)
      if (M.step[k][i] >= 0) hit[M.step[k][i]] = 1;
  for (int i = 0; i < M.dim; ++i)
    if (!hit[i]) M.generators.push_back(i);
  return M;
}

}  // namespace

ModuleRep maximalIdealModule(const FiniteAlgebra& R) {
  std::vector<int> keep;
  for (int i = 0; i < R.dim(); ++i)
    if (R.degrees()[i] > 0) keep.push_back(i);
  return monomialSubmodule(R, keep);
}

std::vector<FpMat> basisActions(const ModuleRep& M) {
  const FiniteAlgebra& R = *M.R;
  std::vector<FpMat> acts(R.dim());
  acts[0] = FpMat::identity(R.p(), M.dim);
  for (int i = 1; i < R.dim(); ++i) {
    const Exps& e = R.basis()[i].e;
    int k = 0;
    while (e[k] == 0) ++k;
    Exps prev = e;
    --prev[k];
    int ip = R.indexOf(Monomial(prev));
    acts[i] = matMul(M.varAct[k], acts[ip]);
  }
  return acts;
}

FpMat actElement(const ModuleRep& M, std::span<const uint32_t> r) {
  auto acts = basisActions(M);
  FpMat A(M.R->p(), M.dim, M.dim);
  for (int i = 0; i < M.R->dim(); ++i)
    if (r[i])
      for (int row = 0; row < M.dim; ++row)
        fpk::axpy(A.row(row), acts[i].row(row), M.dim, r[i], A.p);
  return A;
}

QuotientModule quotientModule(const FiniteAlgebra& R, const Subspace& Iprime) {
  const int d = R.dim();
  const uint32_t p = R.p();
  const FpMat& B = Iprime.basis;
  std::vector<int> pivots;
  {
    FpMat tmp = B;
    rrefInPlace(tmp, &pivots);  // B is already RREF; this just reads pivots
  }
  std::vector<char> isPivot(d, 0);
  for (int c : pivots) isPivot[c] = 1;
  std::vector<int> free;
  for (int c = 0; c < d; ++c)
    if (!isPivot[c]) free.push_back(c);
  const int q = static_cast<int>(free.size());

  QuotientModule Q;
  Q.proj = FpMat(p, q, d);
  for (int a = 0; a < q; ++a) {
    Q.proj.at(a, free[a]) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      uint32_t coef = B.at(static_cast<int>(r), free[a]);
      if (coef) Q.proj.at(a, pivots[r]) = p - coef;
    }
  }
  Q.lift = FpMat(p, d, q);
  for (int a = 0; a < q; ++a) Q.lift.at(free[a], a) = 1;

  Q.rep.R = &R;
  Q.rep.dim = q;
  Q.rep.graded = false;
  for (int k = 0; k < R.nvars(); ++k)
    Q.rep.varAct.push_back(matMul(Q.proj, matMul(R.varMatrix(k), Q.lift)));
  return Q;
}

CanonicalModule canonicalModule(const FiniteAlgebra& R,
                                const std::vector<IrreducibleComponent>& comps) {
  CanonicalModule W;
  EnclosingIrreducible enc = enclosingIrreducible(R.ideal(), comps);
  W.J = enc.J;
  W.f = enc.f;
  MonomialIdeal Jideal = expand(W.J);
  W.K = colonIdeal(Jideal, R.ideal());
  {
    std::vector<Monomial> g = Jideal.gens();
    g.insert(g.end(), W.f.begin(), W.f.end());
    if (MonomialIdeal::make(R.nvars(), std::move(g)) != W.K)
      throw std::logic_error("canonical module: J + (f_1..f_n) != J : I");
  }
  for (const auto& m : standardMonomials(Jideal))
    if (W.K.contains(m)) W.wbasis.push_back(m);
  if (static_cast<int>(W.wbasis.size()) != R.dim())
    throw std::logic_error("canonical module dimension differs from dim R");

  std::map<Exps, int> pos;
  for (size_t i = 0; i < W.wbasis.size(); ++i) pos[W.wbasis[i].e] = static_cast<int>(i);
  ModuleRep& M = W.rep;
  M.R = &R;
  M.dim = R.dim();
  M.graded = true;
  for (const auto& m : W.wbasis) M.labels.push_back(m.e);
  M.step.assign(R.nvars(), std::vector<int>(M.dim, -1));
  for (int k = 0; k < R.nvars(); ++k) {
    FpMat A(R.p(), M.dim, M.dim);
    for (int i = 0; i < M.dim; ++i) {
      Monomial t = variable(R.nvars(), k) * W.wbasis[i];
      if (!Jideal.contains(t)) {
        auto it = pos.find(t.e);
        if (it == pos.end()) throw std::logic_error("canonical module basis not closed");
        M.step[k][i] = it->second;
        A.at(it->second, i) = 1;
      }
    }
    M.varAct.push_back(std::move(A));
  }
  for (const auto& fi : W.f) {
    auto it = pos.find(fi.e);
    if (it == pos.end()) throw std::logic_error("f_i not a basis element of the canonical module");
    W.findex.push_back(it->second);
    M.generators.push_back(it->second);
  }
  return W;
}

HomBasis homDense(const ModuleRep& M, const ModuleRep& N) {
  const uint32_t p = M.R->p();
  const int dm = M.dim, dn = N.dim, n = M.R->nvars();
  const int unknowns = dm * dn;  // X[j][c] at index j*dm + c, X: M -> N
  FpMat C(p, 0, unknowns);
  FpVec row(unknowns, 0);
  for (int k = 0; k < n; ++k) {
    const FpMat& AN = N.varAct[k];
    const FpMat& AM = M.varAct[k];
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        std::fill(row.begin(), row.end(), 0);
        for (int j = 0; j < dn; ++j)
          if (AN.at(r, j)) row[j * dm + c] = AN.at(r, j);
        for (int j = 0; j < dm; ++j)
          if (AM.at(j, c)) {
            size_t idx = static_cast<size_t>(r) * dm + j;
            row[idx] = (row[idx] + p - AM.at(j, c)) % p;
          }
        bool nonzero = std::any_of(row.begin(), row.end(), [](uint32_t x) { return x != 0; });
        if (nonzero) C.appendRow(row);
      }
  }
  HomBasis H;
  FpMat NS = C.rows ? nullspaceRows(C) : FpMat::identity(p, unknowns);
  for (int r = 0; r < NS.rows; ++r) {
    FpMat X(p, dn, dm);
    std::copy(NS.row(r), NS.row(r) + unknowns, X.a.begin());
    H.maps.push_back(std::move(X));
  }
  return H;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<char> zero;
  explicit UnionFind(int n) : parent(n), zero(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    if (zero[b]) zero[a] = 1;
  }
  void markZero(int a) { zero[find(a)] = 1; }
};

}  // namespace

HomBasis homGraded(const ModuleRep& M, const ModuleRep& N) {
  if (!M.graded || !N.graded) throw std::invalid_argument("homGraded needs graded modules");
  const uint32_t p = M.R->p();
  const int dm = M.dim, dn = N.dim, n = M.R->nvars();
  std::map<Exps, int> npos;
  for (int j = 0; j < dn; ++j) {
    if (!npos.emplace(N.labels[j], j).second)
      throw std::invalid_argument("homGraded needs distinct labels");
  }
  {
    std::set<Exps> seen(M.labels.begin(), M.labels.end());
    if (static_cast<int>(seen.size()) != dm)
      throw std::invalid_argument("homGraded needs distinct labels");
  }
  // candidate shifts: generator of M must land on some basis label of N
  std::set<Exps> shifts;
  for (int g : M.generators)
    for (int j = 0; j < dn; ++j) {
      Exps d(n);
      for (int k = 0; k < n; ++k) d[k] = N.labels[j][k] - M.labels[g][k];
      shifts.insert(std::move(d));
    }
  HomBasis H;
  for (const Exps& delta : shifts) {
    std::vector<int> sigma(dm, -1);
    for (int i = 0; i < dm; ++i) {
      Exps t(n);
      for (int k = 0; k < n; ++k) t[k] = M.labels[i][k] + delta[k];
      auto it = npos.find(t);
      if (it != npos.end()) sigma[i] = it->second;
    }
    UnionFind uf(dm);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < dm; ++i) {
        int ip = M.step[k][i];
        int jp = sigma[i] >= 0 ? N.step[k][sigma[i]] : -1;
        if (ip >= 0) {
          if (sigma[i] >= 0 && jp >= 0) {
            // sigma[ip] is exactly jp by the label arithmetic
            uf.unite(i, ip);
          } else if (sigma[ip] >= 0) {
            uf.markZero(ip);
          }
        } else if (sigma[i] >= 0 && jp >= 0) {
          uf.markZero(i);  // x_k kills m_i but not its image
        }
      }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < dm; ++i) {
      if (sigma[i] < 0) continue;
      int r = uf.find(i);
      if (!uf.zero[r]) classes[r].push_back(i);
    }
    for (const auto& [root, members] : classes) {
      FpMat X(p, dn, dm);
      for (int i : members) X.at(sigma[i], i) = 1;
      H.maps.push_back(std::move(X));
    }
  }
  return H;
}

namespace {

bool gradedEligible(const ModuleRep& M) {
  if (!M.graded || M.generators.empty()) return false;
  std::set<Exps> seen(M.labels.begin(), M.labels.end());
  return static_cast<int>(seen.size()) == M.dim;
}

}  // namespace

HomBasis homSpace(const ModuleRep& M, const ModuleRep& N) {
  if (gradedEligible(M) && gradedEligible(N)) return homGraded(M, N);
  return homDense(M, N);
}

Subspace traceIdeal(const FiniteAlgebra& R, const ModuleRep& omega) {
  HomBasis H = homSpace(omega, regularModule(R));
  Echelon ech(R.p(), R.dim());
  for (const FpMat& X : H.maps) {
    FpMat Xt = X.transpose();
    for (int c = 0; c < Xt.rows; ++c)
      ech.add(FpVec(Xt.row(c), Xt.row(c) + Xt.cols));
  }
  Subspace tr = ech.toSubspace();
  if (!isIdealSubspace(R, tr)) throw std::logic_error("trace is not an ideal");
  return tr;
}

Condition1Result condition1Check(const FiniteAlgebra& R, const ModuleRep& omega) {
  Condition1Result res;
  res.trace = traceIdeal(R, omega);
  res.gorenstein = res.trace.dim() == R.dim();
  res.almostGorenstein =
      res.gorenstein || subspaceLeq(maximalIdealSubspace(R), res.trace);
  return res;
}

std::optional<FpMat> tilde(const ModuleRep& omega, const FpMat& f) {
  const FiniteAlgebra& R = *omega.R;
  const int dw = omega.dim, dr = R.dim();
  const uint32_t p = R.p();
  std::vector<FpMat> acts = basisActions(omega);
  // unknown r in R with r * x_i = f(x_i) * y for every basis x_i of omega;
  // the coefficient matrix (rows: pairs (i, coordinate), cols: r_m) is shared
  // across all columns y of the answer
  FpMat A(p, dw * dw, dr);
  for (int m = 0; m < dr; ++m)
    for (int i = 0; i < dw; ++i)
      for (int t = 0; t < dw; ++t) A.at(i * dw + t, m) = acts[m].at(t, i);
  FpMat ftilde(p, dr, dw);
  for (int j = 0; j < dw; ++j) {
    FpVec b(dw * dw, 0);
    for (int i = 0; i < dw; ++i) {
      // f(x_i) acting on y_j
      for (int m = 0; m < dr; ++m) {
        uint32_t coef = f.at(m, i);
        if (!coef) continue;
        for (int t = 0; t < dw; ++t) {
          uint32_t a = acts[m].at(t, j);
          if (a)
            b[i * dw + t] =
                (b[i * dw + t] + static_cast<uint64_t>(coef) * a) % p;
        }
      }
    }
    auto sol = solve(A, b);
    if (!sol) return std::nullopt;
    for (int m = 0; m < dr; ++m) ftilde.at(m, j) = (*sol)[m];
  }
  return ftilde;
}

Subspace bidualityKernel(const FiniteAlgebra& R, const Subspace& Iprime) {
  Subspace viaAnn = annihilator(R, annihilator(R, Iprime));

  QuotientModule Q = quotientModule(R, Iprime);
  HomBasis H = homDense(Q.rep, regularModule(R));
  FpMat stacked(R.p(), 0, Q.rep.dim);
  for (const FpMat& X : H.maps)
    for (int r = 0; r < X.rows; ++r)
      stacked.appendRow(std::span<const uint32_t>(X.row(r), X.cols));
  FpMat ker = stacked.rows ? nullspaceRows(stacked) : FpMat::identity(R.p(), Q.rep.dim);
  FpMat up(R.p(), 0, R.dim());
  for (int r = 0; r < Iprime.basis.rows; ++r)
    up.appendRow(std::span<const uint32_t>(Iprime.basis.row(r), R.dim()));
  for (int r = 0; r < ker.rows; ++r) {
    FpVec lifted = matVec(Q.lift, std::span<const uint32_t>(ker.row(r), ker.cols));
    up.appendRow(lifted);
  }
  Subspace viaHom = spanRows(std::move(up));

  if (!(viaAnn == viaHom))
    throw std::logic_error("biduality kernel: annihilator and Hom routes disagree");
  return viaAnn;
}

}  // namespace agt
