#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agt/fp_kernels.hpp"

// Dense exact linear algebra over a prime field F_p. Subspaces of F_p^d are
// represented by their reduced row echelon basis, which is canonical.

namespace agt {

using FpVec = std::vector<uint32_t>;

struct FpMat {
  uint32_t p = 101;
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;  // row-major

  FpMat() = default;
  FpMat(uint32_t p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint32_t* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const uint32_t* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
  uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FpMat identity(uint32_t p, int n);
  void appendRow(std::span<const uint32_t> v);
  FpMat transpose() const;

  bool operator==(const FpMat&) const = default;
};

// A * B
FpMat matMul(const FpMat& A, const FpMat& B);
// A * v  (v as column)
FpVec matVec(const FpMat& A, std::span<const uint32_t> v);

// In-place reduced row echelon form; returns rank, fills pivot columns.
int rrefInPlace(FpMat& A, std::vector<int>* pivots = nullptr);

// Row basis (RREF) of {x : A x = 0}.
FpMat nullspaceRows(const FpMat& A);

// One solution x of A x = b, if consistent.
std::optional<FpVec> solve(const FpMat& A, std::span<const uint32_t> b);

int rank(FpMat A);

// --- subspaces as canonical RREF row bases ---

struct Subspace {
  FpMat basis;  // RREF rows, zero rows dropped

  int dim() const { return basis.rows; }
  int ambient() const { return basis.cols; }
  bool operator==(const Subspace&) const = default;
};

Subspace spanRows(FpMat rows);
Subspace zeroSubspace(uint32_t p, int ambient);
Subspace fullSubspace(uint32_t p, int ambient);
bool contains(const Subspace& S, std::span<const uint32_t> v);
bool subspaceLeq(const Subspace& A, const Subspace& B);  // A subset of B
Subspace subspaceSum(const Subspace& A, const Subspace& B);
Subspace subspaceIntersect(const Subspace& A, const Subspace& B);  // Zassenhaus

// Incremental echelon basis, for closure computations.
class Echelon {
 public:
  Echelon(uint32_t p, int cols) : p_(p), cols_(cols) {}
  // Returns true if v was independent of the current span.
  bool add(FpVec v);
  bool containsVec(std::span<const uint32_t> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  Subspace toSubspace() const;  // canonical RREF

 private:
  uint32_t p_;
  int cols_;
  std::vector<FpVec> rows_;   // each normalized, leading 1
  std::vector<int> pivots_;   // pivot column per row
  void reduce(FpVec& v) const;
};

}  // namespace agt
