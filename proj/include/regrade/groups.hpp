#pragma once

#include <memory>
#include <string>
#include <vector>

namespace regrade {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Sorted element indices; the identity (index 0) comes first.
using Subgroup = std::vector<int>;

// Elements are indices 0..order-1 with 0 the identity. Every group keeps a
// full Cayley table; abelian presentations use the mixed-radix index
// a_1 + n_1 (a_2 + n_2 (...)).
class FiniteGroup {
 public:
  enum class Kind { Abelian, Table };

  static GroupPtr abelian(std::vector<int> moduli);
  static GroupPtr cyclic(int n) { return abelian({n}); }
  static GroupPtr trivial() { return abelian({}); }
  static GroupPtr klein() { return abelian({2, 2}); }
  // Validates identity, inverses and associativity.
  static GroupPtr from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> labels = {});
  // x^a y^b at index a + 4b, with y x y^-1 = x^3.
  static GroupPtr dihedral8();
  // u^a v^b at index a + 8b, with v u v^-1 = u^3 and v^2 = u^4.
  static GroupPtr quaternion16();
  static GroupPtr symmetric3();
  // (g, h) at index g + |G| h.
  static GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
  // "d8", "q16", "s3", "klein", "z<n>", "trivial".
  static GroupPtr builtin(const std::string& name);

  Kind kind() const { return kind_; }
  int order() const { return n_; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  const std::string& name() const { return name_; }

  int mul(int g, int h) const { return table_[g * n_ + h]; }
  int inverse(int g) const { return inv_[g]; }
  static constexpr int identity() { return 0; }
  int element_order(int g) const { return elt_order_[g]; }
  int power(int g, long long k) const;
  int conjugate(int t, int g) const { return mul(mul(t, g), inv_[t]); }
  int commutator(int g, int h) const { return mul(mul(g, h), mul(inv_[g], inv_[h])); }
  bool commute(int g, int h) const { return mul(g, h) == mul(h, g); }
  int product(const std::vector<int>& word) const;

  // Abelian kind only.
  const std::vector<int>& moduli() const { return moduli_; }
  std::vector<int> residues(int g) const;
  int from_residues(const std::vector<int>& r) const;

  std::string label(int g) const;
  void check_element(int g) const;

 private:
  FiniteGroup() = default;
  void finish();

  Kind kind_ = Kind::Table;
  int n_ = 1;
  int exponent_ = 1;
  bool abelian_ = true;
  std::string name_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
  std::vector<int> moduli_;
  std::vector<std::string> labels_;
};

Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup center(const FiniteGroup& g);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
// Smallest index in each left coset tS, ordered by that index.
std::vector<int> coset_reps(const FiniteGroup& g, const Subgroup& s);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
std::vector<Subgroup> index2_subgroups(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
// Same order and same multiplication table.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// Group on the elements of s; new index i corresponds to s[i].
GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& s);
// Quotient of an abelian group; coset i is represented by reps[i].
struct Quotient {
  GroupPtr group;
  std::vector<int> reps;
  std::vector<int> projection;  // element -> coset index
};
Quotient abelian_quotient(const FiniteGroup& g, const Subgroup& s);

// Basis of an abelian group: every element is prod g_i^{c_i} uniquely with
// 0 <= c_i < orders[i].
struct AbelianBasis {
  std::vector<int> generators;
  std::vector<int> orders;
  std::vector<std::vector<int>> coords;  // element -> exponent vector
  int element(const std::vector<int>& c, const FiniteGroup& g) const;
};
AbelianBasis abelian_basis(const FiniteGroup& g);
// Invariant factors n_1 | n_2 | ... (trivial factors omitted).
std::vector<int> invariant_factors(const FiniteGroup& g);

}  // namespace regrade
