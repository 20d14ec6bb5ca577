#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "regrade/cyclo.hpp"
#include "regrade/groups.hpp"

namespace regrade {

// Skew-symmetric bicharacter on an abelian group, given by its values on a
// basis. Values are stored as exponents of zeta_N.
class Bicharacter {
 public:
  // gen_table[i][j] is the exponent of theta(e_i, e_j) for the basis
  // abelian_basis(*group).
  Bicharacter(GroupPtr group, int order, std::vector<std::vector<int>> gen_table);
  // From values on all pairs; checks the bicharacter property.
  static Bicharacter from_function(GroupPtr group, int order,
                                   const std::function<RootOfUnity(int, int)>& f);
  static Bicharacter trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  int order() const { return order_; }
  const AbelianBasis& basis() const { return basis_; }
  const std::vector<std::vector<int>>& gen_table() const { return gen_; }

  RootOfUnity operator()(int g, int h) const { return RootOfUnity(order_, table_[g * n_ + h]); }
  int exponent(int g, int h) const { return table_[g * n_ + h]; }

  // Smallest g != e pairing trivially with everything, if any.
  std::optional<int> degeneracy_witness() const;
  bool is_nondegenerate() const { return !degeneracy_witness().has_value(); }
  // theta(g, g) = 1 for all g.
  bool is_alternating() const;
  // Same values on every pair.
  bool same_values(const Bicharacter& o) const;

 private:
  GroupPtr group_;
  int order_;
  int n_;
  AbelianBasis basis_;
  std::vector<std::vector<int>> gen_;
  std::vector<int> table_;
};

Bicharacter tensor(const Bicharacter& a, const Bicharacter& b);
Bicharacter restrict_to(const Bicharacter& t, const Subgroup& s);
Bicharacter hat_product(const Bicharacter& a, const Bicharacter& b);
Bicharacter power(const Bicharacter& t, int k);
// Values lifted to a larger order.
Bicharacter with_order(const Bicharacter& t, int order);

struct Minimalization {
  Subgroup radical;
  Quotient quotient;
  Bicharacter theta;
};
Minimalization radical_and_minimalize(const Bicharacter& t);

}  // namespace regrade
