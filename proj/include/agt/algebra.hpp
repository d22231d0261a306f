#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "agt/fp_matrix.hpp"
#include "agt/monomial.hpp"

// The Artinian quotient R = k[x_1..x_n]/I as an explicit F_p-algebra on the
// standard-monomial basis, with multiplication tables and the ideal-theoretic
// operations (annihilator, colon, socle) done by exact linear algebra.

namespace agt {

// Small fixed-capacity bitset over basis indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}
  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool subsetOf(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  int count() const;
  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  bool operator==(const Bits&) const = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

class FiniteAlgebra {
 public:
  static constexpr int kDefaultDimCap = 512;

  FiniteAlgebra(MonomialIdeal I, uint32_t p, int dimCap = kDefaultDimCap);

  uint32_t p() const { return p_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const MonomialIdeal& ideal() const { return I_; }
  int nvars() const { return I_.nvars(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<int>& degrees() const { return degrees_; }

  // index of a monomial in the basis, or -1 if it lies in I
  int indexOf(const Monomial& m) const;
  // product of basis elements i, j as a basis index, or -1 if zero in R
  int mul(int i, int j) const { return mulTable_[static_cast<size_t>(i) * dim() + j]; }
  // index of x_k * basis_j, or -1
  int varStep(int k, int j) const { return varStep_[k][j]; }
  // {j : basis_i * basis_j = 0 in R}
  const Bits& kill(int i) const { return kill_[i]; }

  FpVec vecOf(const Monomial& m) const;  // unit vector (m must be standard)
  FpVec mulVec(std::span<const uint32_t> u, std::span<const uint32_t> v) const;
  // matrix of r -> u*r in the standard basis
  FpMat multMatrix(std::span<const uint32_t> u) const;
  // matrix of r -> x_k * r
  const FpMat& varMatrix(int k) const { return varMat_[k]; }

  std::vector<int> hilbert() const;

 private:
  MonomialIdeal I_;
  uint32_t p_;
  std::vector<Monomial> basis_;
  std::vector<int> degrees_;
  std::map<Exps, int> index_;
  std::vector<int32_t> mulTable_;       // dim x dim
  std::vector<std::vector<int32_t>> varStep_;
  std::vector<FpMat> varMat_;
  std::vector<Bits> kill_;
};

// Ideal of R generated by the given coefficient vectors: closure under
// multiplication by the variables.
Subspace idealGeneratedBy(const FiniteAlgebra& R, const std::vector<FpVec>& gens);
// Image of a monomial ideal of S in R, as a subspace (span of its standard
// monomials that survive).
Subspace idealImage(const FiniteAlgebra& R, const MonomialIdeal& K);

// 0 :_R B = {r : r*b = 0 for all b in B}
Subspace annihilator(const FiniteAlgebra& R, const Subspace& B);
// B :_R C = {r : r*C inside B}; B should be an ideal subspace
Subspace colonSubspace(const FiniteAlgebra& R, const Subspace& B, const Subspace& C);
Subspace socle(const FiniteAlgebra& R);
int cmType(const FiniteAlgebra& R);
// the image of m = (x_1..x_n) in R
Subspace maximalIdealSubspace(const FiniteAlgebra& R);

bool isIdealSubspace(const FiniteAlgebra& R, const Subspace& B);

}  // namespace agt
