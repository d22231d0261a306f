#include "agt/algebra.hpp"

#include <bit>
#include <stdexcept>

namespace agt {

int Bits::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

Bits& Bits::operator|=(const Bits& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

FiniteAlgebra::FiniteAlgebra(MonomialIdeal I, uint32_t p, int dimCap) : I_(std::move(I)), p_(p) {
  if (!fpk::is_prime(p) || p > fpk::kMaxPrime)
    throw std::invalid_argument("p must be a prime at most " + std::to_string(fpk::kMaxPrime));
  if (!isMPrimary(I_)) throw std::invalid_argument("quotient is not Artinian: ideal not m-primary");
  basis_ = standardMonomials(I_);
  const int d = dim();
  if (d > dimCap)
    throw std::invalid_argument("quotient dimension " + std::to_string(d) +
                                " exceeds cap " + std::to_string(dimCap));
  for (int i = 0; i < d; ++i) {
    degrees_.push_back(basis_[i].degree());
    index_[basis_[i].e] = i;
  }
  mulTable_.assign(static_cast<size_t>(d) * d, -1);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      int t = indexOf(basis_[i] * basis_[j]);
      mulTable_[static_cast<size_t>(i) * d + j] = t;
      mulTable_[static_cast<size_t>(j) * d + i] = t;
    }
  const int n = nvars();
  varStep_.assign(n, std::vector<int32_t>(d, -1));
  varMat_.assign(n, FpMat(p_, d, d));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < d; ++j) {
      int t = indexOf(variable(n, k) * basis_[j]);
      varStep_[k][j] = t;
      if (t >= 0) varMat_[k].at(t, j) = 1;
    }
  kill_.assign(d, Bits(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (mul(i, j) < 0) kill_[i].set(j);
}

int FiniteAlgebra::indexOf(const Monomial& m) const {
  auto it = index_.find(m.e);
  return it == index_.end() ? -1 : it->second;
}

FpVec FiniteAlgebra::vecOf(const Monomial& m) const {
  int i = indexOf(m);
  if (i < 0) throw std::invalid_argument("monomial lies in the ideal");
  FpVec v(dim(), 0);
  v[i] = 1;
  return v;
}

FpVec FiniteAlgebra::mulVec(std::span<const uint32_t> u, std::span<const uint32_t> v) const {
  const int d = dim();
  std::vector<uint64_t> acc(d, 0);
  for (int i = 0; i < d; ++i) {
    if (!u[i]) continue;
    const uint64_t ui = u[i];
    const int32_t* ti = mulTable_.data() + static_cast<size_t>(i) * d;
    for (int j = 0; j < d; ++j)
      if (v[j] && ti[j] >= 0) acc[ti[j]] += ui * v[j];
  }
  FpVec r(d);
  for (int t = 0; t < d; ++t) r[t] = static_cast<uint32_t>(acc[t] % p_);
  return r;
}

FpMat FiniteAlgebra::multMatrix(std::span<const uint32_t> u) const {
  const int d = dim();
  FpMat M(p_, d, d);
  for (int i = 0; i < d; ++i) {
    if (!u[i]) continue;
    const int32_t* ti = mulTable_.data() + static_cast<size_t>(i) * d;
    for (int j = 0; j < d; ++j)
      if (ti[j] >= 0) M.at(ti[j], j) = (M.at(ti[j], j) + u[i]) % p_;
  }
  return M;
}

std::vector<int> FiniteAlgebra::hilbert() const {
  std::vector<int> hf;
  for (int deg : degrees_) {
    if (static_cast<int>(hf.size()) <= deg) hf.resize(deg + 1, 0);
    ++hf[deg];
  }
  return hf;
}

Subspace idealGeneratedBy(const FiniteAlgebra& R, const std::vector<FpVec>& gens) {
  const int d = R.dim();
  Echelon ech(R.p(), d);
  std::vector<FpVec> frontier;
  for (const auto& g : gens)
    if (ech.add(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<FpVec> next;
    for (const auto& v : frontier)
      for (int k = 0; k < R.nvars(); ++k) {
        FpVec w(d, 0);
        for (int j = 0; j < d; ++j) {
          int t = R.varStep(k, j);
          if (v[j] && t >= 0) w[t] = (w[t] + v[j]) % R.p();
        }
        if (ech.add(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return ech.toSubspace();
}

Subspace idealImage(const FiniteAlgebra& R, const MonomialIdeal& K) {
  Echelon ech(R.p(), R.dim());
  for (int i = 0; i < R.dim(); ++i)
    if (K.contains(R.basis()[i])) {
      FpVec v(R.dim(), 0);
      v[i] = 1;
      ech.add(std::move(v));
    }
  return ech.toSubspace();
}

Subspace annihilator(const FiniteAlgebra& R, const Subspace& B) {
  const int d = R.dim();
  FpMat stacked(R.p(), 0, d);
  for (int r = 0; r < B.basis.rows; ++r) {
    FpMat M = R.multMatrix(std::span<const uint32_t>(B.basis.row(r), d));
    for (int i = 0; i < d; ++i) stacked.appendRow(std::span<const uint32_t>(M.row(i), d));
  }
  if (stacked.rows == 0) return fullSubspace(R.p(), d);
  return Subspace{nullspaceRows(stacked)};
}

Subspace colonSubspace(const FiniteAlgebra& R, const Subspace& B, const Subspace& C) {
  const int d = R.dim();
  // r*c in B  <=>  N_B * (M_c * r) = 0, where the rows of N_B span the
  // orthogonal complement of B (functionals vanishing exactly on B)
  FpMat NB = nullspaceRows(B.basis);
  FpMat stacked(R.p(), 0, d);
  for (int r = 0; r < C.basis.rows; ++r) {
    FpMat Mc = R.multMatrix(std::span<const uint32_t>(C.basis.row(r), d));
    FpMat rows = matMul(NB, Mc);
    for (int i = 0; i < rows.rows; ++i)
      stacked.appendRow(std::span<const uint32_t>(rows.row(i), d));
  }
  if (stacked.rows == 0) return fullSubspace(R.p(), d);
  return Subspace{nullspaceRows(stacked)};
}

Subspace socle(const FiniteAlgebra& R) {
  const int d = R.dim();
  FpMat stacked(R.p(), 0, d);
  for (int k = 0; k < R.nvars(); ++k)
    for (int i = 0; i < d; ++i)
      stacked.appendRow(std::span<const uint32_t>(R.varMatrix(k).row(i), d));
  return Subspace{nullspaceRows(stacked)};
}

int cmType(const FiniteAlgebra& R) { return socle(R).dim(); }

Subspace maximalIdealSubspace(const FiniteAlgebra& R) {
  Echelon ech(R.p(), R.dim());
  for (int i = 0; i < R.dim(); ++i)
    if (R.degrees()[i] > 0) {
      FpVec v(R.dim(), 0);
      v[i] = 1;
      ech.add(std::move(v));
    }
  return ech.toSubspace();
}

bool isIdealSubspace(const FiniteAlgebra& R, const Subspace& B) {
  const int d = R.dim();
  for (int r = 0; r < B.basis.rows; ++r)
    for (int k = 0; k < R.nvars(); ++k) {
      FpVec w = matVec(R.varMatrix(k), std::span<const uint32_t>(B.basis.row(r), d));
      if (!contains(B, w)) return false;
    }
  return true;
}

}  // namespace agt
