#include "regrade/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of p by a monic divisor d; the remainder must vanish.
Poly divide_monic(const Poly& p, const Poly& d) {
  Poly r = p;
  std::size_t dd = d.size() - 1;
  Poly q(r.size() >= d.size() ? r.size() - dd : 0);
  for (std::size_t i = r.size(); i-- > dd;) {
    Integer c = r[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= c * d[j];
  }
  trim(r);
  ensure(r.empty(), "cyclotomic division left a remainder");
  return q;
}

// In-place remainder modulo a monic polynomial.
void remainder_monic(Poly& r, const Poly& d) {
  std::size_t dd = d.size() - 1;
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i] == 0) continue;
    Integer c = r[i];
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= c * d[j];
  }
}

Integer int_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void check_same(const CycNumber& a, const CycNumber& b) {
  if (a.order() != b.order())
    throw ValidationError("order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
}

}  // namespace

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

// ---- RootOfUnity -----------------------------------------------------------

RootOfUnity::RootOfUnity(int order, long long exponent) : order_(order) {
  require(order > 0, "root of unity order must be positive");
  exponent_ = static_cast<int>(mod(exponent, order));
}

RootOfUnity RootOfUnity::sign(int s) {
  require(s == 1 || s == -1, "sign must be +1 or -1");
  return s == 1 ? RootOfUnity(2, 0) : RootOfUnity(2, 1);
}

int RootOfUnity::element_order() const { return order_ / std::gcd(order_, exponent_); }

int RootOfUnity::as_sign() const {
  if (exponent_ == 0) return 1;
  if (2 * exponent_ == order_) return -1;
  return 0;
}

RootOfUnity RootOfUnity::pow(long long k) const {
  long long e = mod(static_cast<long long>(exponent_) * mod(k, order_), order_);
  return RootOfUnity(order_, e);
}

std::complex<double> RootOfUnity::to_complex() const {
  double t = 2.0 * M_PI * exponent_ / order_;
  return {std::cos(t), std::sin(t)};
}

std::string RootOfUnity::to_string() const {
  switch (as_sign()) {
    case 1: return "1";
    case -1: return "-1";
    default: break;
  }
  int g = std::gcd(order_, exponent_);
  return "z" + std::to_string(order_ / g) + "^" + std::to_string(exponent_ / g);
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  return static_cast<long long>(a.exponent()) * b.order() ==
         static_cast<long long>(b.exponent()) * a.order();
}

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.order() != b.order()) throw ValidationError("order mismatch");
  return RootOfUnity(a.order(), a.exponent() + b.exponent());
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  int n = lcm_int(a.order(), b.order());
  return root_mul(change_order(a, n), change_order(b, n));
}

RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }

RootOfUnity change_order(const RootOfUnity& a, int order) {
  require(order > 0 && order % a.order() == 0,
          "change_order: " + std::to_string(a.order()) + " does not divide " +
              std::to_string(order));
  return RootOfUnity(order, static_cast<long long>(a.exponent()) * (order / a.order()));
}

// ---- cyclotomic polynomials ------------------------------------------------

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  require(n > 0, "cyclotomic index must be positive");
  static std::mutex lock;
  static std::map<int, Poly> cache;
  {
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> g(lock);
  return cache.emplace(n, std::move(p)).first->second;
}

// ---- CycNumber -------------------------------------------------------------

CycNumber::CycNumber(int order) : order_(order), coeffs_(order) {
  require(order > 0, "cyclotomic order must be positive");
}

CycNumber::CycNumber(int order, std::vector<Integer> coeffs) : order_(order) {
  require(order > 0, "cyclotomic order must be positive");
  coeffs_.assign(order, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i % order] += coeffs[i];
}

CycNumber CycNumber::from_int(int order, const Integer& v) {
  CycNumber x(order);
  x.coeffs_[0] = v;
  return x;
}

CycNumber CycNumber::from_root(const RootOfUnity& r) { return from_root(r, r.order()); }

CycNumber CycNumber::from_root(const RootOfUnity& r, int order) {
  RootOfUnity s = change_order(r, order);
  CycNumber x(order);
  x.coeffs_[s.exponent()] = 1;
  return x;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  check_same(*this, o);
  for (int i = 0; i < order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  check_same(*this, o);
  for (int i = 0; i < order_; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  *this = *this * o;
  return *this;
}

CycNumber& CycNumber::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber CycNumber::times(const RootOfUnity& r) const {
  RootOfUnity s = change_order(r, order_);
  CycNumber out(order_);
  for (int i = 0; i < order_; ++i) out.coeffs_[(i + s.exponent()) % order_] = coeffs_[i];
  return out;
}

CycNumber CycNumber::galois(int k) const {
  require(std::gcd(k, order_) == 1, "galois: exponent not coprime to order");
  CycNumber out(order_);
  for (int i = 0; i < order_; ++i) out.coeffs_[mod(1LL * i * k, order_)] += coeffs_[i];
  return out;
}

CycNumber CycNumber::reduced() const {
  Poly r = coeffs_;
  remainder_monic(r, cyclotomic_polynomial(order_));
  CycNumber out(order_);
  std::size_t deg = cyclotomic_polynomial(order_).size() - 1;
  for (std::size_t i = 0; i < deg; ++i) out.coeffs_[i] = r[i];
  return out;
}

bool CycNumber::is_zero() const {
  bool all = true;
  for (const auto& c : coeffs_)
    if (c != 0) { all = false; break; }
  if (all) return true;
  for (const auto& c : reduced().coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Integer> CycNumber::as_integer() const {
  CycNumber r = reduced();
  for (int i = 1; i < order_; ++i)
    if (r.coeffs_[i] != 0) return std::nullopt;
  return r.coeffs_[0];
}

std::optional<RootOfUnity> CycNumber::as_root() const {
  CycNumber r = reduced();
  for (int k = 0; k < order_; ++k) {
    if ((r - CycNumber::from_root(RootOfUnity(order_, k))).is_zero()) return RootOfUnity(order_, k);
  }
  return std::nullopt;
}

Integer CycNumber::norm() const {
  CycNumber p = *this;
  for (int k = 2; k < order_; ++k)
    if (std::gcd(k, order_) == 1) p = (p * galois(k)).reduced();
  auto v = p.as_integer();
  ensure(v.has_value(), "norm is not rational");
  return *v;
}

CycNumber CycNumber::exact_div(const CycNumber& d) const {
  check_same(*this, d);
  if (d.is_zero()) throw ValidationError("division by zero");
  CycNumber adj = CycNumber::from_int(order_, 1);
  for (int k = 2; k < order_; ++k)
    if (std::gcd(k, order_) == 1) adj = (adj * d.galois(k)).reduced();
  auto nd = (d * adj).as_integer();
  ensure(nd.has_value() && *nd != 0, "norm is not a nonzero integer");
  CycNumber q = (*this * adj).reduced();
  for (auto& c : q.coeffs_) {
    if (c % *nd != 0) throw ValidationError("exact_div: not divisible");
    c /= *nd;
  }
  return q;
}

Integer CycNumber::content() const {
  Integer g = 0;
  for (const auto& c : reduced().coeffs_) g = int_gcd(g, c);
  return g;
}

CycNumber CycNumber::div_integer(const Integer& k) const {
  require(k != 0, "division by zero");
  CycNumber out(*this);
  for (auto& c : out.coeffs_) {
    if (c % k != 0) throw ValidationError("div_integer: not divisible");
    c /= k;
  }
  return out;
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> s = 0;
  for (int i = 0; i < order_; ++i)
    s += coeffs_[i].convert_to<double>() * RootOfUnity(order_, i).to_complex();
  return s;
}

std::string CycNumber::to_string() const {
  if (auto v = as_integer()) return v->str();
  CycNumber r = reduced();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < order_; ++i) {
    const Integer& c = r.coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Integer a = c < 0 ? Integer(-c) : c;
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << order_ << "^" << i;
    }
    first = false;
  }
  return os.str();
}

CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  check_same(a, b);
  int n = a.order();
  std::vector<Integer> out(n);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      int k = i + j;
      if (k >= n) k -= n;
      out[k] += x[i] * y[j];
    }
  }
  return CycNumber(n, std::move(out));
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  int n = lcm_int(a.order(), b.order());
  return (change_order(a, n) - change_order(b, n)).is_zero();
}

CycNumber change_order(const CycNumber& x, int order) {
  require(order > 0 && order % x.order() == 0,
          "change_order: " + std::to_string(x.order()) + " does not divide " +
              std::to_string(order));
  if (order == x.order()) return x;
  int step = order / x.order();
  std::vector<Integer> c(order);
  for (int i = 0; i < x.order(); ++i) c[i * step] = x.coeffs()[i];
  return CycNumber(order, std::move(c));
}

bool cyc_is_zero(const CycNumber& x) { return x.is_zero(); }

// ---- matrices --------------------------------------------------------------

CycMatrix cyc_matrix(int rows, int cols, int order) {
  return CycMatrix(rows, CycRow(cols, CycNumber(order)));
}

CycMatrix cyc_identity(int n, int order) {
  CycMatrix m = cyc_matrix(n, n, order);
  for (int i = 0; i < n; ++i) m[i][i] = CycNumber::from_int(order, 1);
  return m;
}

CycMatrix cyc_matmul(const CycMatrix& a, const CycMatrix& b) {
  require(!a.empty() && !b.empty() && a[0].size() == b.size(), "matmul: shape mismatch");
  int order = a[0][0].order();
  CycMatrix c = cyc_matrix(static_cast<int>(a.size()), static_cast<int>(b[0].size()), order);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      bool zero = true;
      for (const auto& v : a[i][k].coeffs())
        if (v != 0) { zero = false; break; }
      if (zero) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  for (auto& row : c)
    for (auto& x : row) x = x.reduced();
  return c;
}

CycMatrix cyc_kronecker(const CycMatrix& a, const CycMatrix& b) {
  std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  CycMatrix c(ar * br, CycRow(ac * bc, CycNumber(a[0][0].order())));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) c[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return c;
}

bool cyc_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

CycNumber cyc_det(const CycMatrix& input) {
  std::size_t n = input.size();
  if (n == 0) return CycNumber::from_int(1, 1);
  int order = input[0][0].order();
  CycMatrix m = input;
  for (auto& row : m) {
    require(row.size() == n, "cyc_det: matrix is not square");
    for (auto& x : row) {
      require(x.order() == order, "cyc_det: entries must share one order");
      x = x.reduced();
    }
  }
  bool negate = false;
  CycNumber prev = CycNumber::from_int(order, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return CycNumber(order);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycNumber t = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).reduced();
        m[i][j] = t.exact_div(prev);
      }
      m[i][k] = CycNumber(order);
    }
    prev = m[k][k];
  }
  CycNumber d = m[n - 1][n - 1].reduced();
  return negate ? -d : d;
}

// ---- echelon ---------------------------------------------------------------

CycEchelon::CycEchelon(int order, std::size_t cols) : order_(order), cols_(cols) {}

CycRow CycEchelon::reduce(CycRow v) const {
  require(v.size() == cols_, "echelon: row length mismatch");
  for (auto& x : v) {
    require(x.order() == order_, "echelon: order mismatch");
    x = x.reduced();
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    CycNumber a = rows_[r][p];
    CycNumber b = v[p];
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (a * v[j] - b * rows_[r][j]).reduced();
    Integer g = 0;
    for (const auto& x : v)
      for (const auto& c : x.coeffs()) g = int_gcd(g, c);
    if (g > 1)
      for (auto& x : v) x = x.div_integer(g);
  }
  return v;
}

bool CycEchelon::insert(CycRow row) {
  CycRow v = reduce(std::move(row));
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) { lead = j; break; }
  if (lead == cols_) return false;
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool CycEchelon::in_span(const CycRow& v) const {
  CycRow r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool CycEchelon::annihilates(const CycRow& v) const {
  require(v.size() == cols_, "echelon: vector length mismatch");
  for (const auto& row : rows_) {
    CycNumber s(order_);
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

std::vector<CycRow> CycEchelon::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<CycRow> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    CycRow x(cols_, CycNumber(order_));
    x[f] = CycNumber::from_int(order_, 1);
    for (std::size_t r = rows_.size(); r-- > 0;) {
      std::size_t p = pivots_[r];
      CycNumber s(order_);
      for (std::size_t j = p + 1; j < cols_; ++j) s += rows_[r][j] * x[j];
      s = s.reduced();
      if (s.is_zero()) continue;
      for (auto& e : x) e = (e * rows_[r][p]).reduced();
      x[p] = -s;
    }
    Integer g = 0;
    for (const auto& e : x)
      for (const auto& c : e.coeffs()) g = int_gcd(g, c);
    if (g > 1)
      for (auto& e : x) e = e.div_integer(g);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t cyc_rank(const CycMatrix& m, int order) {
  if (m.empty()) return 0;
  CycEchelon e(order, m[0].size());
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

std::vector<CycRow> cyc_kernel(const CycMatrix& m, int order) {
  require(!m.empty(), "kernel of an empty matrix");
  CycEchelon e(order, m[0].size());
  for (const auto& row : m) e.insert(row);
  return e.kernel();
}

}  // namespace regrade
