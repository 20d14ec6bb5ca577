#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regrade/cocycles.hpp"

namespace regrade {

// F^alpha G is identified with its cocycle.
using AlgebraPtr = std::shared_ptr<const Cocycle>;
AlgebraPtr make_algebra(Cocycle c);

// Sparse element sum c_g U_g with coefficients in Z[zeta_order]. The
// coefficient order is a multiple of the cocycle order.
class TGAElement {
 public:
  TGAElement(AlgebraPtr alg, int order);
  static TGAElement zero(const AlgebraPtr& alg) { return TGAElement(alg, alg->order()); }
  static TGAElement basis(const AlgebraPtr& alg, int g);
  static TGAElement monomial(const AlgebraPtr& alg, int g, const RootOfUnity& s);
  static TGAElement monomial(const AlgebraPtr& alg, int g, const CycNumber& c);
  // U_g^{-1} = alpha(g, g^{-1})^{-1} U_{g^{-1}}.
  static TGAElement monomial_inverse(const AlgebraPtr& alg, int g);

  const AlgebraPtr& algebra() const { return alg_; }
  int order() const { return order_; }
  const std::map<int, CycNumber>& terms() const { return terms_; }
  CycNumber coefficient(int g) const;
  bool is_zero() const { return terms_.empty(); }
  // If this is s U_g for a root of unity s.
  std::optional<std::pair<RootOfUnity, int>> as_monomial() const;

  TGAElement lifted(int order) const;
  TGAElement& operator+=(const TGAElement& o);
  TGAElement& operator-=(const TGAElement& o);
  TGAElement scaled(const CycNumber& c) const;
  TGAElement scaled(const RootOfUnity& s) const;

  std::string to_string() const;

 private:
  void add_term(int g, const CycNumber& c);

  AlgebraPtr alg_;
  int order_;
  std::map<int, CycNumber> terms_;
};

TGAElement operator+(TGAElement a, const TGAElement& b);
TGAElement operator-(TGAElement a, const TGAElement& b);
TGAElement operator*(const TGAElement& a, const TGAElement& b);
bool operator==(const TGAElement& a, const TGAElement& b);

bool same_algebra(const Cocycle& a, const Cocycle& b);

struct RayClass {
  std::vector<int> elements;
  bool is_ray = false;
  std::optional<TGAElement> ray_element;
};

struct RayReport {
  std::vector<RayClass> classes;
  int center_dim = 0;
};

// [g] is a ray class iff U_g commutes with U_h for all h in C_G(g); its ray
// element sum_i U_{t_i} U_g U_{t_i}^{-1} is checked to be central.
RayReport ray_classes(const AlgebraPtr& alg);
// Dimension of {z : z U_g = U_g z for all g} from the linear system.
int center_dim_oracle(const AlgebraPtr& alg);
// Dimension of the central elements supported on the given elements.
int central_dim_on_support(const AlgebraPtr& alg, const std::vector<int>& support);

struct Simplicity {
  bool simple = false;
  int size = 0;  // sqrt |G| when simple
};
Simplicity is_simple(const AlgebraPtr& alg);

struct Z2Simplicity {
  bool z2_simple = false;
  bool vacuous = false;  // H = {e}
};
// For every e != h in H some g in C_G(h) has U_h U_g != U_g U_h.
Z2Simplicity is_z2_simple(const AlgebraPtr& alg, const Subgroup& h);
// Graded ideals of the semisimple algebra B correspond to idempotents of the
// even part of its center, so B is Z2-simple iff that part is one-dimensional.
bool z2_simple_oracle(const AlgebraPtr& alg, const Subgroup& h);
// Dimension of the two-sided ideal generated by x (span closure).
int generated_ideal_dim(const TGAElement& x);

enum class AlgebraType { Type1 = 1, Type2 = 2, Type3 = 3 };
struct TypeReport {
  AlgebraType type;
  int param;  // n for Type1 and Type3, m for Type2
};
// Throws ValidationError if B is not Z2-simple with respect to H.
TypeReport algebra_type(const AlgebraPtr& alg, const Subgroup& h);

// Exact integer square root, or -1.
int exact_sqrt(long long n);

}  // namespace regrade
