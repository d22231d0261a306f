#include "agt/cover.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace agt {

namespace {

// action matrices of the ring elements h(e_i) on omega, one per omega basis
std::vector<FpMat> columnActions(const ModuleRep& omega, const FpMat& h) {
  const FiniteAlgebra& R = *omega.R;
  std::vector<FpMat> acts = basisActions(omega);
  std::vector<FpMat> out;
  for (int i = 0; i < omega.dim; ++i) {
    FpMat A(R.p(), omega.dim, omega.dim);
    for (int m = 0; m < R.dim(); ++m) {
      uint32_t c = h.at(m, i);
      if (!c)
        continue;
      for (int r = 0; r < omega.dim; ++r)
        fpk::axpy(A.row(r), acts[m].row(r), omega.dim, c, A.p);
    }
    out.push_back(std::move(A));
  }
  return out;
}

bool isSymmetricPairing(const ModuleRep& omega, const std::vector<FpMat>& hAct) {
  for (int i = 0; i < omega.dim; ++i)
    for (int j = i + 1; j < omega.dim; ++j)
      for (int t = 0; t < omega.dim; ++t)
        if (hAct[i].at(t, j) != hAct[j].at(t, i)) return false;
  return true;
}

Subspace m2Subspace(const FiniteAlgebra& R) {
  Echelon ech(R.p(), R.dim());
  for (int i = 0; i < R.dim(); ++i)
    if (R.degrees()[i] >= 2) {
      FpVec v(R.dim(), 0);
      v[i] = 1;
      ech.add(std::move(v));
    }
  return ech.toSubspace();
}

}  // namespace

TeterResult teterTest(const FiniteAlgebra& R, const ModuleRep& omega,
                      uint64_t seed, int samples) {
  if (R.p() == 2) throw std::invalid_argument("teterTest requires an odd prime");
  const int dR = R.dim();
  const uint32_t p = R.p();
  TeterResult res;
  res.samples = 0;

  MonomialIdeal m2 = product(maximalIdeal(R.nvars()), maximalIdeal(R.nvars()));
  if (dR > 1 && R.ideal() == m2) {
    res.status = TeterStatus::Found;
    res.specialM2 = true;
    return res;
  }
  if (dR > 1 && !subspaceLeq(socle(R), m2Subspace(R))) {
    res.status = TeterStatus::SocleNotInM2;
    return res;
  }

  ModuleRep mMod = maximalIdealModule(R);
  HomBasis homs = homSpace(omega, mMod);
  // embed maps omega -> m as maps omega -> R
  std::vector<int> keep;
  for (int i = 0; i < dR; ++i)
    if (R.degrees()[i] > 0) keep.push_back(i);
  std::vector<FpMat> maps;
  for (const FpMat& X : homs.maps) {
    FpMat F(p, dR, omega.dim);
    for (int r = 0; r < X.rows; ++r)
      std::copy(X.row(r), X.row(r) + X.cols, F.row(keep[r]));
    maps.push_back(std::move(F));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> coef(0, p - 1);
  for (int s = 0; s < samples; ++s) {
    ++res.samples;
    FpMat f(p, dR, omega.dim);
    for (const FpMat& F : maps) {
      uint32_t c = coef(rng);
      if (!c) continue;
      for (int r = 0; r < dR; ++r) fpk::axpy(f.row(r), F.row(r), f.cols, c, p);
    }
    if (rank(f) != dR - 1) continue;
    auto ft = tilde(omega, f);
    if (!ft) throw std::logic_error("tilde does not exist for a module map");
    FpMat h(p, dR, omega.dim);
    for (size_t t = 0; t < h.a.size(); ++t) h.a[t] = (f.a[t] + ft->a[t]) % p;
    if (rank(h) != dR - 1) continue;
    if (!isSymmetricPairing(omega, columnActions(omega, h))) continue;
    res.status = TeterStatus::Found;
    res.f = std::move(f);
    res.h = std::move(h);
    return res;
  }
  res.status = TeterStatus::NotFound;
  res.log2FailureBound =
      res.samples * (std::log2(static_cast<double>(dR)) - std::log2(static_cast<double>(p)));
  return res;
}

Cover buildCover(const FiniteAlgebra& R, const ModuleRep& omega, const FpMat& h) {
  const uint32_t p = R.p();
  const uint32_t inv2 = fpk::inv_mod(2 % p, p);
  std::vector<FpMat> hAct = columnActions(omega, h);
  Cover S;
  S.p = p;
  S.dim = omega.dim + 1;
  S.mul.assign(omega.dim, std::vector<FpVec>(omega.dim));
  for (int i = 0; i < omega.dim; ++i)
    for (int j = 0; j < omega.dim; ++j) {
      FpVec v(omega.dim, 0);
      for (int t = 0; t < omega.dim; ++t)
        v[t] = static_cast<uint32_t>(static_cast<uint64_t>(hAct[i].at(t, j)) * inv2 % p);
      S.mul[i][j] = std::move(v);
    }
  return S;
}

FpMat coverProjection(const FiniteAlgebra& R, const ModuleRep& omega, const FpMat& h) {
  const uint32_t p = R.p();
  const uint32_t inv2 = fpk::inv_mod(2 % p, p);
  FpMat P(p, R.dim(), omega.dim + 1);
  P.at(0, 0) = 1;  // identity of the cover maps to 1 (basis index 0 of R)
  for (int i = 0; i < omega.dim; ++i)
    for (int m = 0; m < R.dim(); ++m)
      P.at(m, 1 + i) = static_cast<uint32_t>(static_cast<uint64_t>(h.at(m, i)) * inv2 % p);
  return P;
}

Cover specialM2Cover(const FiniteAlgebra& R) {
  const int n = R.nvars();
  Cover S;
  S.p = R.p();
  S.dim = n + 2;  // 1, X_1..X_n, delta
  S.mul.assign(n + 1, std::vector<FpVec>(n + 1, FpVec(n + 1, 0)));
  for (int i = 0; i < n; ++i) S.mul[i][i][n] = 1;  // X_i^2 = delta
  return S;
}

FpMat specialM2Projection(const FiniteAlgebra& R) {
  const int n = R.nvars();
  FpMat P(R.p(), R.dim(), n + 2);
  P.at(0, 0) = 1;
  for (int k = 0; k < n; ++k) {
    int idx = R.indexOf(variable(n, k));
    P.at(idx, 1 + k) = 1;
  }
  return P;  // delta column stays zero
}

CoverVerification verifyCover(const FiniteAlgebra& R, const Cover& S, const FpMat& proj) {
  CoverVerification V;
  const uint32_t p = S.p;
  const int d = S.dim - 1;  // size of the non-unit block
  V.dimOk = S.dim == R.dim() + 1;

  V.commutative = true;
  for (int i = 0; i < d && V.commutative; ++i)
    for (int j = i + 1; j < d; ++j)
      if (S.mul[i][j] != S.mul[j][i]) {
        V.commutative = false;
        break;
      }

  // left-multiplication matrices on the non-unit block; with commutativity,
  // associativity on all basis triples is exactly pairwise commutation
  std::vector<FpMat> L(d, FpMat(p, d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int t = 0; t < d; ++t) L[i].at(t, j) = S.mul[i][j][t];
  V.associative = V.commutative;
  for (int a = 0; a < d && V.associative; ++a)
    for (int c = a + 1; c < d; ++c)
      if (!(matMul(L[a], L[c]) == matMul(L[c], L[a]))) {
        V.associative = false;
        break;
      }

  // socle of S: annihilator of the non-unit block, in full coordinates
  FpMat stacked(p, 0, S.dim);
  FpVec row(S.dim, 0);
  for (int j = 0; j < d; ++j)
    for (int t = 0; t < d; ++t) {
      std::fill(row.begin(), row.end(), 0);
      row[0] = (t == j) ? 1 : 0;  // e0 * w_j contributes w_j
      for (int i = 0; i < d; ++i) row[1 + i] = S.mul[i][j][t];
      stacked.appendRow(row);
    }
  Subspace soc{nullspaceRows(stacked)};
  V.socleDim = soc.dim();

  // projection is a ring map: proj(w_i w_j) = proj(w_i) proj(w_j) in R
  V.projRingHom = true;
  for (int i = 0; i < d && V.projRingHom; ++i) {
    FpVec pi(proj.rows);
    for (int r = 0; r < proj.rows; ++r) pi[r] = proj.at(r, 1 + i);
    for (int j = i; j < d; ++j) {
      FpVec pj(proj.rows);
      for (int r = 0; r < proj.rows; ++r) pj[r] = proj.at(r, 1 + j);
      FpVec lhs(proj.rows, 0);
      for (int t = 0; t < d; ++t) {
        uint32_t c = S.mul[i][j][t];
        if (c)
          for (int r = 0; r < proj.rows; ++r)
            lhs[r] = static_cast<uint32_t>((lhs[r] + static_cast<uint64_t>(c) * proj.at(r, 1 + t)) % p);
      }
      if (!(lhs == R.mulVec(pi, pj))) {
        V.projRingHom = false;
        break;
      }
    }
  }

  Subspace kerP{nullspaceRows(proj)};
  V.projKernelIsSocle = kerP == soc && soc.dim() == 1;
  V.quotientIso = rank(proj) == R.dim();
  return V;
}

}  // namespace agt
