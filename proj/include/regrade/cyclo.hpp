#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace regrade {

using Integer = boost::multiprecision::cpp_int;

int lcm_int(int a, int b);

// zeta_N^k with 0 <= k < N.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(int order, long long exponent);

  static RootOfUnity one(int order = 1) { return RootOfUnity(order, 0); }
  static RootOfUnity minus_one() { return RootOfUnity(2, 1); }
  static RootOfUnity sign(int s);

  int order() const { return order_; }
  int exponent() const { return exponent_; }

  bool is_one() const { return exponent_ == 0; }
  // Order of this element in the multiplicative group.
  int element_order() const;
  // +1/-1 if the value is real, 0 otherwise.
  int as_sign() const;

  RootOfUnity inverse() const { return RootOfUnity(order_, -exponent_); }
  RootOfUnity pow(long long k) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  int order_ = 1;
  int exponent_ = 0;
};

// Value equality; orders may differ.
bool operator==(const RootOfUnity& a, const RootOfUnity& b);

// Same-order product. Throws ValidationError("order mismatch") otherwise.
RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b);
// Product in the lcm order.
RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b);

// Requires a.order() | order.
RootOfUnity change_order(const RootOfUnity& a, int order);

// Element of Z[zeta_N], stored as a vector in Z[x]/(x^N - 1).
class CycNumber {
 public:
  explicit CycNumber(int order = 1);
  CycNumber(int order, std::vector<Integer> coeffs);
  static CycNumber from_int(int order, const Integer& v);
  static CycNumber from_root(const RootOfUnity& r);
  static CycNumber from_root(const RootOfUnity& r, int order);

  int order() const { return order_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator*=(const Integer& k);
  CycNumber operator-() const;

  // Multiplication by a root of unity is a cyclic shift.
  CycNumber times(const RootOfUnity& r) const;
  // Galois conjugate x -> x^k, gcd(k, N) = 1.
  CycNumber galois(int k) const;

  bool is_zero() const;
  // Remainder modulo Phi_N, padded to length N. Canonical representative.
  CycNumber reduced() const;
  // The integer value if this is a rational integer.
  std::optional<Integer> as_integer() const;
  // The root of unity if this is one.
  std::optional<RootOfUnity> as_root() const;

  Integer norm() const;
  // Exact quotient; throws ValidationError if d does not divide.
  CycNumber exact_div(const CycNumber& d) const;
  // gcd of the reduced coefficients.
  Integer content() const;
  CycNumber div_integer(const Integer& k) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  int order_;
  std::vector<Integer> coeffs_;
};

CycNumber operator+(CycNumber a, const CycNumber& b);
CycNumber operator-(CycNumber a, const CycNumber& b);
CycNumber operator*(const CycNumber& a, const CycNumber& b);
bool operator==(const CycNumber& a, const CycNumber& b);

// Requires x.order() | order.
CycNumber change_order(const CycNumber& x, int order);
bool cyc_is_zero(const CycNumber& x);

// Coefficients of Phi_n, lowest degree first. Cached per n.
const std::vector<Integer>& cyclotomic_polynomial(int n);

using CycRow = std::vector<CycNumber>;
using CycMatrix = std::vector<CycRow>;

CycMatrix cyc_matrix(int rows, int cols, int order);
CycMatrix cyc_identity(int n, int order);
CycMatrix cyc_matmul(const CycMatrix& a, const CycMatrix& b);
CycMatrix cyc_kronecker(const CycMatrix& a, const CycMatrix& b);
bool cyc_equal(const CycMatrix& a, const CycMatrix& b);

// Fraction-free elimination over Z[zeta_N]; all entries must share the order.
CycNumber cyc_det(const CycMatrix& m);

// Incremental row echelon form over Z[zeta_N]. Rows are kept with distinct
// leading columns and divided by their integer content.
class CycEchelon {
 public:
  CycEchelon(int order, std::size_t cols);

  // Returns true if the row was independent of the stored ones.
  bool insert(CycRow row);
  // Reduces v against the stored rows; the result is zero iff v is in the span.
  CycRow reduce(CycRow v) const;
  bool in_span(const CycRow& v) const;
  // True if sum_j r_j v_j = 0 for every stored row r.
  bool annihilates(const CycRow& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }
  const std::vector<CycRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Basis of the solution space of rows * x = 0.
  std::vector<CycRow> kernel() const;

 private:
  int order_;
  std::size_t cols_;
  std::vector<CycRow> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t cyc_rank(const CycMatrix& m, int order);
std::vector<CycRow> cyc_kernel(const CycMatrix& m, int order);

}  // namespace regrade
