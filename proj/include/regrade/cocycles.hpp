#pragma once

#include <span>
#include <vector>

#include "regrade/bicharacter.hpp"
#include "regrade/cyclo.hpp"
#include "regrade/groups.hpp"

namespace regrade {

// alpha: G x G -> mu_N with U_g U_h = alpha(g,h) U_gh. Stored as a full table
// of exponents, normalized so that alpha(e, .) = alpha(., e) = 1.
class Cocycle {
 public:
  // Validates the cocycle identity; normalizes by a constant coboundary.
  Cocycle(GroupPtr group, int order, std::vector<int> table);
  static Cocycle trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  int order() const { return order_; }
  const std::vector<int>& table() const { return table_; }

  RootOfUnity operator()(int g, int h) const { return RootOfUnity(order_, at(g, h)); }
  int at(int g, int h) const { return table_[g * group_->order() + h]; }

  // alpha(g,h) / alpha(h,g).
  RootOfUnity commutator(int g, int h) const;
  // Scalar with U_g^{-1} = s U_{g^{-1}}, i.e. alpha(g, g^{-1})^{-1}.
  RootOfUnity inverse_scalar(int g) const { return (*this)(g, group_->inverse(g)).inverse(); }

 private:
  GroupPtr group_;
  int order_;
  std::vector<int> table_;
};

// Cocycle identity and normalization on a raw exponent table.
bool validate_cocycle(const FiniteGroup& g, int order, const std::vector<int>& table);
bool validate_cocycle(const Cocycle& c);

// alpha(a,b) = prod_{i>j} theta(e_i,e_j)^{a_i b_j}; requires theta(g,g) = 1.
Cocycle scheunert_cocycle(const Bicharacter& theta);

struct WordScalar {
  RootOfUnity scalar;
  int product;
};
// U_{g_1} ... U_{g_n} = scalar * U_product.
WordScalar word_scalar(const Cocycle& c, std::span<const int> word);

// The D8 cocycle from the nonsplit extension Q16 -> D8 with section
// x^a y^b -> u^a v^b and kernel {1, u^4} identified with {1, -1}.
Cocycle d8_q16_cocycle();

Cocycle tensor_cocycle(const Cocycle& a, const Cocycle& b);
// Cocycle on subgroup_as_group(G, s).
Cocycle restrict_cocycle(const Cocycle& c, const Subgroup& s);
Cocycle pointwise_product(const Cocycle& a, const Cocycle& b);
// Cocycle from exponents in a possibly larger order.
Cocycle with_order(const Cocycle& c, int order);

// K = {e, x^2, y, x^2 y} in D8.
Subgroup d8_klein_subgroup();

}  // namespace regrade
