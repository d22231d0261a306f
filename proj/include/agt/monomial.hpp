#pragma once

#include <string>
#include <vector>

// Exact combinatorics of monomials and m-primary monomial ideals in
// k[x_1,...,x_n]. Ideals always carry a minimal generating set, sorted in
// graded-lex order, so equal ideals compare equal structurally.

namespace agt {

using Exps = std::vector<int>;

struct Monomial {
  Exps e;

  Monomial() = default;
  explicit Monomial(Exps exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool isOne() const;
  bool divides(const Monomial& other) const;  // componentwise <=

  bool operator==(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// componentwise max(a - b, 0): the generator of (a):(b)
Monomial colonQuot(const Monomial& a, const Monomial& b);
Monomial one(int nvars);
Monomial variable(int nvars, int k);

// graded-lex: lower total degree first; ties broken so that x_1 < x_2 < ...
// comes out as x_1 first (lexicographically larger exponent vector first)
bool gradedLexLess(const Monomial& a, const Monomial& b);

std::string describe(const Monomial& m);

struct IrreducibleComponent {
  Exps a;  // all entries >= 1; represents (x_1^{a_1}, ..., x_n^{a_n})

  int nvars() const { return static_cast<int>(a.size()); }
  bool operator==(const IrreducibleComponent&) const = default;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit(int nvars);
  // minimalizes; all generators must have length nvars
  static MonomialIdeal make(int nvars, std::vector<Monomial> gens);

  int nvars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool isZero() const { return gens_.empty(); }
  bool isUnit() const;
  bool contains(const Monomial& m) const;
  bool containsIdeal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;
  bool operator<(const MonomialIdeal&) const;  // for ordered containers

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;  // minimal, graded-lex sorted
};

std::string describe(const MonomialIdeal& I);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal colonIdeal(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal maximalIdeal(int nvars);                 // (x_1, ..., x_n)
MonomialIdeal principal(const Monomial& m);
MonomialIdeal expand(const IrreducibleComponent& c);   // as a MonomialIdeal
// J_i : J_j = J_i + (x^{a_i - a_j}); unit ideal when no coordinate exceeds
MonomialIdeal irreducibleColon(const IrreducibleComponent& Ji, const IrreducibleComponent& Jj);

bool isMPrimary(const MonomialIdeal& I);

// Irredundant irreducible decomposition (m-primary input required).
std::vector<IrreducibleComponent> irreducibleDecomposition(const MonomialIdeal& I);
MonomialIdeal intersectAll(int nvars, const std::vector<IrreducibleComponent>& comps);

struct EnclosingIrreducible {
  IrreducibleComponent J;   // t_k = max_i a_{ik}
  std::vector<Monomial> f;  // f_i with J : f_i = J_i
};
EnclosingIrreducible enclosingIrreducible(const MonomialIdeal& I,
                                          const std::vector<IrreducibleComponent>& comps);

// All monomials outside I, graded-lex order. Requires m-primary I.
std::vector<Monomial> standardMonomials(const MonomialIdeal& I);
std::vector<int> hilbertFunction(const MonomialIdeal& I);

}  // namespace agt
