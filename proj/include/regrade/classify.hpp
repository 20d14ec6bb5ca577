#pragma once

#include <string>
#include <vector>

#include "regrade/bicharacter.hpp"
#include "regrade/commfun.hpp"

namespace regrade {

// Irreducible nondegenerate skew-symmetric bicharacters:
//   Tau          on C2, tau(t, t) = -1
//   Eta(p, m)    on Z_q x Z_q, q = p^m: theta(a,a) = theta(b,b) = 1, theta(a,b) = zeta_q
//   Epsilon(m)   on Z_q x Z_q, q = 2^m: theta(a,a) = 1, theta(b,b) = -1, theta(a,b) = zeta_q
struct BasicFactor {
  enum class Kind { Tau, Eta, Epsilon };
  Kind kind = Kind::Tau;
  int p = 2;
  int m = 1;
  // Witnesses in the ambient group: {t} for Tau, {a, b} otherwise. Empty when
  // the factor is only a kind.
  std::vector<int> generators;

  int q() const;  // p^m, or 2 for Tau
  std::string name() const;
  static BasicFactor tau() { return {Kind::Tau, 2, 1, {}}; }
  static BasicFactor eta(int p, int m) { return {Kind::Eta, p, m, {}}; }
  static BasicFactor epsilon(int m) { return {Kind::Epsilon, 2, m, {}}; }
};

// Kind-only comparison, used for sorting canonical forms.
bool same_kind(const BasicFactor& a, const BasicFactor& b);
bool kind_less(const BasicFactor& a, const BasicFactor& b);

struct CanonicalForm {
  std::vector<BasicFactor> factors;  // sorted by (p, kind, m)
  // Number of Tau or Epsilon factors; at most one in canonical form.
  int exceptional() const;
  std::vector<std::string> names() const;
  std::string to_string() const;
};
bool operator==(const CanonicalForm& a, const CanonicalForm& b);

// The three isomorphisms between products of basic factors, applied until
// at most one Tau or Epsilon is left. Generators are dropped.
std::vector<BasicFactor> rewrite_canonical(std::vector<BasicFactor> factors);

// Model of a basic factor on Z_2 or Z_q x Z_q.
Bicharacter basic_bicharacter(const BasicFactor& f);
// Tensor product of the models, on the product of their groups.
Bicharacter recompose(const std::vector<BasicFactor>& factors);

// Splits theta by primes, peels off orthogonal pairs, normalizes roots and
// rewrites to canonical form. The generator witnesses are checked to give an
// isometry from recompose(factors) onto theta.
CanonicalForm canonical_decomposition(const Bicharacter& theta);

// Exhaustive search for a group isomorphism carrying theta1 to theta2.
bool isomorphic_by_search(const Bicharacter& t1, const Bicharacter& t2);
// Equal canonical forms for nondegenerate inputs; the search otherwise or
// when oracle is set.
bool bicharacters_isomorphic(const Bicharacter& t1, const Bicharacter& t2, bool oracle = false);

// One group per isomorphism type of abelian group with order <= max_order,
// given by invariant factors, ordered by (order, factors).
std::vector<GroupPtr> abelian_groups_up_to(int max_order);
// Every skew-symmetric bicharacter on an abelian group, via its values on the
// basis; with alternating set, only those with theta(g,g) = 1.
std::vector<Bicharacter> enumerate_skew_bicharacters(const GroupPtr& g, bool alternating);

struct PiClassReport {
  int exp = 0;
  std::string pi_class;  // "M_n(F)", "M_{2m,m}(E)" or "M_n(E)"
  int param = 0;         // n, m or n
  int type = 0;
  std::string to_string() const;
};
// Requires a nondegenerate theta.
PiClassReport pi_class_and_exponent(const CommutationFunction& theta);

}  // namespace regrade
