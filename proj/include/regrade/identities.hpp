#pragma once

#include <map>
#include <string>
#include <vector>

#include "regrade/commfun.hpp"
#include "regrade/envelopes.hpp"

namespace regrade {

// Strongly homogeneous multilinear polynomial
//   f = sum_s lambda_s x_{g_s(0), s(0)} ... x_{g_s(n-1), s(n-1)}
// in the variables x_{g_i, i}, i = 0..n-1. Every s satisfies
// g_s(0) ... g_s(n-1) = g_0 ... g_{n-1}.
class MultilinearPolynomial {
 public:
  MultilinearPolynomial(GroupPtr group, std::vector<int> signature, int order);

  const GroupPtr& group() const { return group_; }
  const std::vector<int>& signature() const { return signature_; }
  int degree() const { return static_cast<int>(signature_.size()); }
  int order() const { return order_; }
  const std::map<std::vector<int>, CycNumber>& terms() const { return terms_; }

  // Adds c to the coefficient of the monomial for perm.
  void add_term(const std::vector<int>& perm, const CycNumber& c);
  void add_term(const std::vector<int>& perm, const RootOfUnity& r) {
    add_term(perm, CycNumber::from_root(r, lcm_int(order_, r.order())));
  }
  CycNumber coefficient(const std::vector<int>& perm) const;
  bool is_zero() const { return terms_.empty(); }
  MultilinearPolynomial lifted(int order) const;
  std::string to_string() const;

 private:
  GroupPtr group_;
  std::vector<int> signature_;
  int order_;
  std::map<std::vector<int>, CycNumber> terms_;
};

bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b);

// All s in Sym(n) with g_s(0) ... g_s(n-1) = g_0 ... g_{n-1}, in lexicographic order.
std::vector<std::vector<int>> admissible_permutations(const FiniteGroup& g,
                                                      const std::vector<int>& signature);

// Coefficients lambda_s theta(g, s)^{-1}.
MultilinearPolynomial f_theta(const MultilinearPolynomial& f, const CommutationFunction& theta);

// A monomial in graded variables x_{degree, index}.
struct Variable {
  int degree;
  int index;
};

struct NormalForm {
  RootOfUnity scalar;
  std::vector<Variable> monomial;
};
// Sorts by (degree, index); m = scalar * sorted holds modulo the binomial
// identities of theta. Abelian groups only.
NormalForm normal_form(const std::vector<Variable>& m, const CommutationFunction& theta);

struct IdentityVerdict {
  bool identity = false;
  bool vacuous = false;  // some variable has an empty component
};

// Decides membership of strongly homogeneous multilinear polynomials in
// Id_G(A). For each signature the evaluations of the admissible monomials on
// all basis tuples are collected as linear constraints on the coefficient
// vector; f is an identity iff its coefficients satisfy all of them.
class IdentityEvaluator {
 public:
  explicit IdentityEvaluator(const GradedAlgebra& a) : a_(a) {}
  IdentityVerdict check(const MultilinearPolynomial& f);
  // Number of independent constraints for a signature.
  int constraint_rank(const std::vector<int>& signature);
  // Basis of the identities with this signature, as coefficient vectors
  // over admissible_permutations.
  std::vector<CycRow> identity_basis(const std::vector<int>& signature);

 private:
  struct Entry {
    std::vector<std::vector<int>> perms;
    CycEchelon echelon;
    bool vacuous;
  };
  const Entry& entry(const std::vector<int>& signature, int order);

  const GradedAlgebra& a_;
  std::map<std::pair<std::vector<int>, int>, Entry> cache_;
};

IdentityVerdict is_graded_identity(const MultilinearPolynomial& f, const GradedAlgebra& a);
// Evaluates f on every basis tuple; no caching. Used as a cross-check.
IdentityVerdict is_graded_identity_direct(const MultilinearPolynomial& f, const GradedAlgebra& a);

}  // namespace regrade
