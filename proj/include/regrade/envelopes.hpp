#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regrade/cocycles.hpp"
#include "regrade/cyclo.hpp"
#include "regrade/groups.hpp"

namespace regrade {

// Sparse vector over the basis, sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, CycNumber>>;

// Finite-dimensional G-graded algebra given by structure constants on a
// homogeneous basis. Coefficients live in Z[zeta_order].
class GradedAlgebra {
 public:
  // mult[i][j] is the product of basis elements i and j. Checks that every
  // product lies in the component of degree deg(i) deg(j).
  GradedAlgebra(GroupPtr group, int order, std::vector<int> degrees,
                std::vector<std::vector<SparseVec>> mult, std::string name,
                std::vector<std::string> labels = {});

  const GroupPtr& group() const { return group_; }
  int order() const { return order_; }
  int dim() const { return static_cast<int>(degrees_.size()); }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  // Basis indices of A_g.
  const std::vector<int>& component(int g) const { return components_[g]; }
  const SparseVec& product(int i, int j) const { return mult_[i][j]; }
  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[i]; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  // Product of basis elements b_{w_0} ... b_{w_{n-1}}.
  SparseVec basis_product(const std::vector<int>& w) const;
  // Exhaustive check on basis triples.
  bool is_associative() const;
  // Coefficients lifted to a multiple of the current order.
  GradedAlgebra lifted(int order) const;

 private:
  GroupPtr group_;
  int order_;
  std::vector<int> degrees_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<std::vector<int>> components_;
  std::string name_;
  std::vector<std::string> labels_;
};

SparseVec sparse_basis(int i, int order);
SparseVec sparse_scaled(const SparseVec& v, const CycNumber& c);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
bool sparse_equal(const SparseVec& a, const SparseVec& b);

// E^(k) graded by C2 = {e, g}: basis e_S for S a subset of {1..k} (index = bit
// mask of S), degree the parity of |S|.
GradedAlgebra truncated_grassmann(int k);
// Sign of e_S e_T = sign e_{S u T} for disjoint S, T; 0 if they overlap.
int grassmann_product_sign(unsigned s, unsigned t);
// M_n(F) with basis X^i Y^j (index i + n j) over Z_n x Z_n, where X^n = Y^n = 1
// and Y X = zeta_n X Y.
GradedAlgebra symbol_algebra(int n);
// F[x]/(x^n - c) graded by Z_n with A_k = F x^k.
GradedAlgebra cyclic_quotient(int n, const CycNumber& c);
GradedAlgebra twisted_algebra(const Cocycle& c);

GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b);
// (A (x^) B)_g = A_g (x) B_g.
GradedAlgebra hat_tensor(const GradedAlgebra& a, const GradedAlgebra& b);
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);
// Coarsening along a homomorphism: new degree of basis element i is
// phi[deg(i)].
GradedAlgebra regrade_by(const GradedAlgebra& a, GroupPtr target, const std::vector<int>& phi);
// E(A)_g = E_0 (x) A_g for g in H and E_1 (x) A_g otherwise, with E = E^(k).
GradedAlgebra grassmann_envelope(const GradedAlgebra& a, const Subgroup& h, int k);

struct RegularityReport {
  bool regular = false;
  bool condition1 = false;  // every degree word of length <= L has a nonzero product
  bool condition2 = false;  // a single scalar theta_{g,h} on each commuting pair
  int max_length = 0;
  std::vector<int> failing_word;      // first degree word with only zero products
  std::pair<int, int> failing_pair{-1, -1};
  // theta_{g,h} at g * |G| + h; empty for noncommuting or undetermined pairs.
  std::vector<std::optional<RootOfUnity>> theta;
};
RegularityReport check_regularity(const GradedAlgebra& a, int max_length);

}  // namespace regrade
