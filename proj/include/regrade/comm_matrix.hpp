#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regrade/commfun.hpp"
#include "regrade/twisted.hpp"

namespace regrade {

// Entry scalar * U_commutator of F^alpha G.
struct MatrixEntry {
  RootOfUnity scalar;
  int commutator = 0;
};

// (M)_{g,h} = tau_{psi(g),psi(h)} U_g U_h U_g^{-1} U_h^{-1}.
class CommutationMatrix {
 public:
  explicit CommutationMatrix(CommutationFunction theta);

  const CommutationFunction& theta() const { return theta_; }
  const AlgebraPtr& algebra() const { return alg_; }
  int size() const { return n_; }
  const MatrixEntry& at(int g, int h) const { return entries_[g * n_ + h]; }
  TGAElement element(int g, int h) const;
  // All commutators trivial.
  bool is_scalar() const;
  // Scalar entries as a cyclotomic matrix in the value order.
  CycMatrix scalar_matrix() const;

 private:
  CommutationFunction theta_;
  AlgebraPtr alg_;
  int n_;
  std::vector<MatrixEntry> entries_;
};

CommutationMatrix build_matrix(const CommutationFunction& theta);

// Row-major |G| x |G| product over F^alpha G.
std::vector<TGAElement> matrix_square(const CommutationMatrix& m);
bool verify_square(const CommutationMatrix& m);

using IntPoly = std::vector<Integer>;  // lowest degree first
std::string poly_to_string(const IntPoly& p);

struct SpectrumReport {
  int n = 0;
  long long trace = 0;
  int alpha_plus = 0;
  int alpha_minus = 0;
  IntPoly char_poly;
  IntPoly min_poly;
  // (-1)^{alpha_minus} n^{n/2}
  Integer predicted_det;
};

// Requires verify_square; trace is sum psi(g).
SpectrumReport trace_and_multiplicities(const CommutationMatrix& m);

struct PolyReport {
  IntPoly char_poly;
  IntPoly min_poly;
  bool conjugate = false;
};
// Char/min polynomial of m1, and whether m1 and m2 are conjugate (same n and
// trace, both satisfying M^2 = nI).
PolyReport polys_and_conjugacy(const CommutationMatrix& m1, const CommutationMatrix& m2);

// Bareiss determinant of a scalar (abelian) matrix.
CycNumber exact_determinant(const CommutationMatrix& m);

// rho(U_g) for every g.
struct Representation {
  int dim = 0;
  int order = 1;
  std::vector<CycMatrix> images;
  std::string name;
};
bool is_representation(const Representation& rep, const Cocycle& c);
// rho(U_k) e_h = alpha(k,h) e_{kh}.
Representation regular_representation(const Cocycle& c);
// Explicit irrep of a nondegenerate cocycle on Z_r x Z_r built from the clock
// and shift matrices X = diag(1, z, ..., z^{r-1}) and Y e_i = e_{i-1}.
Representation clock_shift_representation(const Cocycle& c);
// Clock and shift matrices over Z[zeta_r]: Y X = zeta X Y.
std::pair<CycMatrix, CycMatrix> clock_shift(int r);
// Determinant of the block matrix (scalar * rho(U_commutator)).
CycNumber embedded_determinant(const CommutationMatrix& m, const Representation& rep);

struct KernelVector {
  int witness = 0;
  std::optional<RootOfUnity> root;  // c with (U_w - c) y = 0
  std::vector<TGAElement> v;
  std::string route;  // "central-witness" or "linear-system"
};
// Nonzero v with M v = 0; throws ValidationError when theta is nondegenerate.
KernelVector degenerate_kernel(const CommutationMatrix& m);
std::vector<TGAElement> apply_matrix(const CommutationMatrix& m, const std::vector<TGAElement>& v);

}  // namespace regrade
