#pragma once

#include <optional>
#include <span>
#include <vector>

#include "regrade/bicharacter.hpp"
#include "regrade/cocycles.hpp"

namespace regrade {

// theta in realized form: a cocycle alpha of the twisted algebra B and a sign
// character psi. For a word g and permutation s,
//   theta(g, s) = ws(g) / ws(g^s) * (-1)^{inversions of s among psi-odd letters}
// where g^s = (g_{s(0)}, ..., g_{s(n-1)}).
class CommutationFunction {
 public:
  CommutationFunction(Cocycle cocycle, std::vector<int> psi);
  // Splits off psi(g) = theta(g,g) and realizes theta * tau(psi, psi) by a
  // Scheunert cocycle.
  static CommutationFunction from_bicharacter(const Bicharacter& theta);
  // tau on C2.
  static CommutationFunction grassmann();
  static CommutationFunction trivial(GroupPtr group);

  const Cocycle& cocycle() const { return cocycle_; }
  const GroupPtr& group() const { return cocycle_.group(); }
  const std::vector<int>& psi() const { return psi_; }
  int psi(int g) const { return psi_[g]; }
  bool psi_trivial() const;
  Subgroup kernel() const;
  // Order N' such that every value lies in mu_N'.
  int value_order() const;

  RootOfUnity theta(std::span<const int> word, std::span<const int> perm) const;
  // theta for the swap of a commuting pair: a_g a_h = pair(g,h) a_h a_g.
  RootOfUnity pair(int g, int h) const;

 private:
  Cocycle cocycle_;
  std::vector<int> psi_;
};

// Sign of reordering anticommuting letters: parities[i] = 1 marks odd letters.
int grassmann_sign(std::span<const int> parities, std::span<const int> perm);

struct PsiReport {
  std::vector<int> psi;
  Subgroup kernel;
};
// psi(g) = theta_{g,g}; checked to be a homomorphism with index <= 2 kernel.
PsiReport psi_and_kernel(const CommutationFunction& t);

struct Nondegeneracy {
  bool nondegenerate = true;
  std::optional<int> witness;  // smallest g != e pairing trivially on C_G(g)
  std::vector<int> partner;    // g -> some h in C_G(g) with theta_{g,h} != 1, or -1
};
Nondegeneracy is_nondegenerate(const CommutationFunction& t);

// Abelian groups only.
Bicharacter as_bicharacter(const CommutationFunction& t);

CommutationFunction tensor(const CommutationFunction& a, const CommutationFunction& b);
CommutationFunction restrict_to(const CommutationFunction& t, const Subgroup& s);
CommutationFunction hat_product(const CommutationFunction& a, const CommutationFunction& b);
CommutationFunction hat_power(const CommutationFunction& t, int k);
// A (+) B carries the common theta; differing thetas are rejected.
CommutationFunction direct_sum(const CommutationFunction& a, const CommutationFunction& b);

// Equal psi and equal values on every word of length <= max_len.
bool same_commutation(const CommutationFunction& a, const CommutationFunction& b,
                      int max_len = 3);

}  // namespace regrade
