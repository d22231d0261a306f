#include "agt/fp_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace agt {

FpMat FpMat::identity(uint32_t p, int n) {
  FpMat I(p, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

void FpMat::appendRow(std::span<const uint32_t> v) {
  assert(static_cast<int>(v.size()) == cols);
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

FpMat FpMat::transpose() const {
  FpMat T(p, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
  return T;
}

FpMat matMul(const FpMat& A, const FpMat& B) {
  assert(A.cols == B.rows && A.p == B.p);
  FpMat C(A.p, A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    uint32_t* ci = C.row(i);
    for (int k = 0; k < A.cols; ++k) {
      uint32_t f = A.at(i, k);
      if (f) fpk::axpy(ci, B.row(k), B.cols, f, A.p);
    }
  }
  return C;
}

FpVec matVec(const FpMat& A, std::span<const uint32_t> v) {
  assert(static_cast<int>(v.size()) == A.cols);
  FpVec r(A.rows, 0);
  for (int i = 0; i < A.rows; ++i) r[i] = fpk::dot(A.row(i), v.data(), A.cols, A.p);
  return r;
}

int rrefInPlace(FpMat& A, std::vector<int>* pivots) {
  const uint32_t p = A.p;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      std::swap_ranges(A.row(piv), A.row(piv) + A.cols, A.row(r));
    uint32_t inv = fpk::inv_mod(A.at(r, c), p);
    if (inv != 1) fpk::scale(A.row(r) + c, A.cols - c, inv, p);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      uint32_t f = A.at(i, c);
      if (f) fpk::axpy(A.row(i) + c, A.row(r) + c, A.cols - c, p - f, p);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

FpMat nullspaceRows(const FpMat& A) {
  FpMat R = A;
  std::vector<int> pivots;
  int rk = rrefInPlace(R, &pivots);
  std::vector<char> isPivot(A.cols, 0);
  for (int c : pivots) isPivot[c] = 1;
  FpMat N(A.p, A.cols - rk, A.cols);
  int out = 0;
  for (int c = 0; c < A.cols; ++c) {
    if (isPivot[c]) continue;
    uint32_t* v = N.row(out++);
    v[c] = 1;
    for (int r = 0; r < rk; ++r) {
      uint32_t coef = R.at(r, c);
      if (coef) v[pivots[r]] = A.p - coef;
    }
  }
  // rows are already independent; put them in canonical RREF order
  rrefInPlace(N);
  return N;
}

std::optional<FpVec> solve(const FpMat& A, std::span<const uint32_t> b) {
  assert(static_cast<int>(b.size()) == A.rows);
  FpMat Aug(A.p, A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    std::copy(A.row(i), A.row(i) + A.cols, Aug.row(i));
    Aug.at(i, A.cols) = b[i];
  }
  std::vector<int> pivots;
  int rk = rrefInPlace(Aug, &pivots);
  for (int r = 0; r < rk; ++r)
    if (pivots[r] == A.cols) return std::nullopt;  // inconsistent
  FpVec x(A.cols, 0);
  for (int r = 0; r < rk; ++r) x[pivots[r]] = Aug.at(r, A.cols);
  return x;
}

int rank(FpMat A) { return rrefInPlace(A); }

Subspace spanRows(FpMat rows) {
  int rk = rrefInPlace(rows);
  FpMat B(rows.p, rk, rows.cols);
  std::copy(rows.a.begin(), rows.a.begin() + static_cast<size_t>(rk) * rows.cols, B.a.begin());
  return Subspace{std::move(B)};
}

Subspace zeroSubspace(uint32_t p, int ambient) { return Subspace{FpMat(p, 0, ambient)}; }

Subspace fullSubspace(uint32_t p, int ambient) { return Subspace{FpMat::identity(p, ambient)}; }

bool contains(const Subspace& S, std::span<const uint32_t> v) {
  FpVec w(v.begin(), v.end());
  const uint32_t p = S.basis.p;
  for (int r = 0; r < S.basis.rows; ++r) {
    // pivot of RREF row r is its first nonzero entry
    const uint32_t* br = S.basis.row(r);
    int c = 0;
    while (c < S.basis.cols && !br[c]) ++c;
    if (c == S.basis.cols) continue;
    if (w[c]) fpk::axpy(w.data(), br, S.basis.cols, p - w[c], p);
  }
  return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

bool subspaceLeq(const Subspace& A, const Subspace& B) {
  for (int r = 0; r < A.basis.rows; ++r)
    if (!contains(B, std::span<const uint32_t>(A.basis.row(r), A.basis.cols))) return false;
  return true;
}

Subspace subspaceSum(const Subspace& A, const Subspace& B) {
  FpMat S(A.basis.p, A.basis.rows + B.basis.rows, A.basis.cols);
  std::copy(A.basis.a.begin(), A.basis.a.end(), S.a.begin());
  std::copy(B.basis.a.begin(), B.basis.a.end(),
            S.a.begin() + static_cast<size_t>(A.basis.rows) * A.basis.cols);
  return spanRows(std::move(S));
}

Subspace subspaceIntersect(const Subspace& A, const Subspace& B) {
  // Zassenhaus: rref of [A|A ; B|0]; rows with zero left half carry an
  // intersection basis in the right half.
  const int d = A.basis.cols;
  FpMat Z(A.basis.p, A.basis.rows + B.basis.rows, 2 * d);
  for (int i = 0; i < A.basis.rows; ++i) {
    std::copy(A.basis.row(i), A.basis.row(i) + d, Z.row(i));
    std::copy(A.basis.row(i), A.basis.row(i) + d, Z.row(i) + d);
  }
  for (int i = 0; i < B.basis.rows; ++i)
    std::copy(B.basis.row(i), B.basis.row(i) + d, Z.row(A.basis.rows + i));
  int rk = rrefInPlace(Z);
  FpMat out(A.basis.p, 0, d);
  for (int i = 0; i < rk; ++i) {
    bool leftZero = std::all_of(Z.row(i), Z.row(i) + d, [](uint32_t x) { return x == 0; });
    if (leftZero) out.appendRow(std::span<const uint32_t>(Z.row(i) + d, d));
  }
  return spanRows(std::move(out));
}

void Echelon::reduce(FpVec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t f = v[pivots_[r]];
    if (f) fpk::axpy(v.data(), rows_[r].data(), cols_, p_ - f, p_);
  }
}

bool Echelon::add(FpVec v) {
  reduce(v);
  int piv = -1;
  for (int c = 0; c < cols_; ++c)
    if (v[c]) {
      piv = c;
      break;
    }
  if (piv < 0) return false;
  uint32_t inv = fpk::inv_mod(v[piv], p_);
  if (inv != 1) fpk::scale(v.data(), cols_, inv, p_);
  // back-substitute into existing rows to keep the basis reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t f = rows_[r][piv];
    if (f) fpk::axpy(rows_[r].data(), v.data(), cols_, p_ - f, p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool Echelon::containsVec(std::span<const uint32_t> v) const {
  FpVec w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

Subspace Echelon::toSubspace() const {
  std::vector<int> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] < pivots_[b]; });
  FpMat B(p_, static_cast<int>(rows_.size()), cols_);
  for (size_t i = 0; i < order.size(); ++i)
    std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), B.row(static_cast<int>(i)));
  return Subspace{std::move(B)};
}

}  // namespace agt
