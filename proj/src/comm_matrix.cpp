#include "regrade/comm_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly poly_pow(const IntPoly& a, int k) {
  IntPoly r = {1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, a);
  return r;
}

CycMatrix mat_pow(const CycMatrix& m, int k) {
  CycMatrix r = cyc_identity(static_cast<int>(m.size()), m[0][0].order());
  for (int i = 0; i < k; ++i) r = cyc_matmul(r, m);
  return r;
}

CycMatrix mat_scaled(const CycMatrix& m, const CycNumber& s) {
  CycMatrix r = m;
  for (auto& row : r)
    for (auto& x : row) x = (x * s).reduced();
  return r;
}

CycMatrix mat_lift(const CycMatrix& m, int order) {
  CycMatrix r = m;
  for (auto& row : r)
    for (auto& x : row) x = change_order(x, order);
  return r;
}

}  // namespace

// ---- construction ----------------------------------------------------------

CommutationMatrix::CommutationMatrix(CommutationFunction theta)
    : theta_(std::move(theta)), alg_(make_algebra(theta_.cocycle())), n_(theta_.group()->order()) {
  const FiniteGroup& g = *theta_.group();
  const Cocycle& c = theta_.cocycle();
  int order = theta_.value_order();
  entries_.resize(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      int word[4] = {x, y, g.inverse(x), g.inverse(y)};
      WordScalar w = word_scalar(c, word);
      RootOfUnity s = w.scalar * c.inverse_scalar(x) * c.inverse_scalar(y);
      if (theta_.psi(x) == -1 && theta_.psi(y) == -1) s = s * RootOfUnity::minus_one();
      entries_[x * n_ + y] = {change_order(s, order), w.product};
    }
  for (int x = 0; x < n_; ++x)
    ensure(at(x, x).commutator == 0 && at(x, x).scalar.as_sign() == theta_.psi(x),
           "diagonal entry differs from theta_{g,g} U_e");
}

CommutationMatrix build_matrix(const CommutationFunction& theta) { return CommutationMatrix(theta); }

TGAElement CommutationMatrix::element(int g, int h) const {
  const MatrixEntry& e = at(g, h);
  return TGAElement::monomial(alg_, e.commutator, e.scalar);
}

bool CommutationMatrix::is_scalar() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MatrixEntry& e) { return e.commutator == 0; });
}

CycMatrix CommutationMatrix::scalar_matrix() const {
  require(is_scalar(), "commutation matrix has non-scalar entries");
  int order = theta_.value_order();
  CycMatrix m = cyc_matrix(n_, n_, order);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) m[x][y] = CycNumber::from_root(at(x, y).scalar, order);
  return m;
}

std::vector<TGAElement> matrix_square(const CommutationMatrix& m) {
  int n = m.size();
  std::vector<TGAElement> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < n; ++k) {
      TGAElement s(m.algebra(), m.theta().value_order());
      for (int h = 0; h < n; ++h) s += m.element(g, h) * m.element(h, k);
      out.push_back(std::move(s));
    }
  return out;
}

bool verify_square(const CommutationMatrix& m) {
  int n = m.size();
  auto sq = matrix_square(m);
  TGAElement scalar_n = TGAElement::monomial(m.algebra(), 0, CycNumber::from_int(1, n));
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < n; ++k) {
      const TGAElement& x = sq[g * n + k];
      if (g == k ? !(x == scalar_n) : !x.is_zero()) return false;
    }
  return true;
}

// ---- spectrum --------------------------------------------------------------

std::string poly_to_string(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p[i];
    if (c == 0) continue;
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

SpectrumReport trace_and_multiplicities(const CommutationMatrix& m) {
  require(verify_square(m), "trace_and_multiplicities needs M^2 = |G| I");
  SpectrumReport r;
  r.n = m.size();
  for (int g = 0; g < r.n; ++g) r.trace += m.theta().psi(g);
  int s = exact_sqrt(r.n);
  if (r.trace == r.n) {
    ensure(s > 0, "trace |G| with |G| not a square");
    r.alpha_plus = s * (s + 1) / 2;
    r.alpha_minus = s * (s - 1) / 2;
    ensure(r.alpha_plus - r.alpha_minus == s, "multiplicities inconsistent with the trace");
  } else if (r.trace == 0) {
    ensure(r.n % 2 == 0, "trace 0 with odd |G|");
    r.alpha_plus = r.alpha_minus = r.n / 2;
  } else {
    throw InvariantViolation("trace " + std::to_string(r.trace) + " is neither 0 nor |G|");
  }
  if (s > 0) {
    r.char_poly = poly_mul(poly_pow({-s, 1}, r.alpha_plus), poly_pow({s, 1}, r.alpha_minus));
  } else {
    ensure(r.alpha_plus == r.alpha_minus, "irrational eigenvalues with unequal multiplicities");
    r.char_poly = poly_pow({-r.n, 0, 1}, r.alpha_plus);
  }
  if (r.alpha_plus > 0 && r.alpha_minus > 0) r.min_poly = {-r.n, 0, 1};
  else if (r.alpha_plus > 0) r.min_poly = {-s, 1};
  else r.min_poly = {s, 1};
  Integer mag = 1;
  if (s > 0)
    for (int i = 0; i < r.n; ++i) mag *= s;
  else
    for (int i = 0; i < r.n / 2; ++i) mag *= r.n;
  r.predicted_det = r.alpha_minus % 2 ? Integer(-mag) : mag;
  return r;
}

PolyReport polys_and_conjugacy(const CommutationMatrix& m1, const CommutationMatrix& m2) {
  SpectrumReport a = trace_and_multiplicities(m1);
  SpectrumReport b = trace_and_multiplicities(m2);
  // Both are diagonalizable (M^2 = nI), so equal spectra mean conjugate.
  return {a.char_poly, a.min_poly, a.n == b.n && a.trace == b.trace};
}

CycNumber exact_determinant(const CommutationMatrix& m) { return cyc_det(m.scalar_matrix()); }

// ---- representations -------------------------------------------------------

bool is_representation(const Representation& rep, const Cocycle& c) {
  const FiniteGroup& g = *c.group();
  if (static_cast<int>(rep.images.size()) != g.order()) return false;
  if (rep.order % c.order() != 0) return false;
  if (!cyc_equal(rep.images[0], cyc_identity(rep.dim, rep.order))) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      CycMatrix lhs = cyc_matmul(rep.images[x], rep.images[y]);
      CycMatrix rhs = mat_scaled(rep.images[g.mul(x, y)], CycNumber::from_root(c(x, y), rep.order));
      if (!cyc_equal(lhs, rhs)) return false;
    }
  return true;
}

Representation regular_representation(const Cocycle& c) {
  const FiniteGroup& g = *c.group();
  int n = g.order();
  Representation rep;
  rep.dim = n;
  rep.order = c.order();
  rep.name = "regular";
  for (int k = 0; k < n; ++k) {
    CycMatrix m = cyc_matrix(n, n, rep.order);
    for (int h = 0; h < n; ++h) m[g.mul(k, h)][h] = CycNumber::from_root(c(k, h));
    rep.images.push_back(std::move(m));
  }
  return rep;
}

std::pair<CycMatrix, CycMatrix> clock_shift(int r) {
  CycMatrix x = cyc_matrix(r, r, r), y = cyc_matrix(r, r, r);
  for (int i = 0; i < r; ++i) {
    x[i][i] = CycNumber::from_root(RootOfUnity(r, i));
    y[(i + r - 1) % r][i] = CycNumber::from_int(r, 1);
  }
  return {x, y};
}

Representation clock_shift_representation(const Cocycle& c) {
  const FiniteGroup& g = *c.group();
  require(g.is_abelian(), "clock/shift representation needs an abelian group");
  AbelianBasis b = abelian_basis(g);
  require(b.generators.size() == 2 && b.orders[0] == b.orders[1],
          "clock/shift representation needs Z_r x Z_r");
  int r = b.orders[0];
  int e1 = b.generators[0], e2 = b.generators[1];
  RootOfUnity q = c.commutator(e2, e1);
  require(q.element_order() == r, "cocycle is degenerate; no r-dimensional irrep");
  int N = c.order();
  int L = lcm_int(r * N, r);
  // q = zeta_r^k
  int k = change_order(q, lcm_int(q.order(), r)).exponent() / (lcm_int(q.order(), r) / r);
  auto [X0, Y0] = clock_shift(r);
  CycMatrix X = mat_lift(X0, L), Y = mat_pow(mat_lift(Y0, L), k);
  auto rth_root = [&](int gen) {
    std::vector<int> word(r, gen);
    RootOfUnity s = change_order(word_scalar(c, word).scalar, N);
    return RootOfUnity(r * N, s.exponent());
  };
  X = mat_scaled(X, CycNumber::from_root(rth_root(e1), L));
  Y = mat_scaled(Y, CycNumber::from_root(rth_root(e2), L));
  Representation rep;
  rep.dim = r;
  rep.order = L;
  rep.name = "clock-shift";
  rep.images.resize(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int i = b.coords[x][0], j = b.coords[x][1];
    std::vector<int> word;
    word.insert(word.end(), i, e1);
    word.insert(word.end(), j, e2);
    RootOfUnity w = word.empty() ? RootOfUnity::one() : word_scalar(c, word).scalar;
    CycMatrix m = cyc_matmul(mat_pow(X, i), mat_pow(Y, j));
    rep.images[x] = mat_scaled(m, CycNumber::from_root(w.inverse(), L));
  }
  ensure(is_representation(rep, c), "clock/shift images do not represent the cocycle");
  return rep;
}

CycNumber embedded_determinant(const CommutationMatrix& m, const Representation& rep) {
  require(is_representation(rep, m.theta().cocycle()), "not a representation of the cocycle");
  int n = m.size(), d = rep.dim;
  int L = lcm_int(rep.order, m.theta().value_order());
  CycMatrix big = cyc_matrix(n * d, n * d, L);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const MatrixEntry& e = m.at(g, h);
      CycNumber s = CycNumber::from_root(e.scalar, L);
      const CycMatrix& img = rep.images[e.commutator];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) big[g * d + i][h * d + j] = change_order(img[i][j], L) * s;
    }
  return cyc_det(big);
}

// ---- degenerate kernel -----------------------------------------------------

std::vector<TGAElement> apply_matrix(const CommutationMatrix& m, const std::vector<TGAElement>& v) {
  int n = m.size();
  require(static_cast<int>(v.size()) == n, "vector length differs from matrix size");
  std::vector<TGAElement> out;
  for (int g = 0; g < n; ++g) {
    TGAElement s = TGAElement::zero(m.algebra());
    for (int h = 0; h < n; ++h) s += m.element(g, h) * v[h];
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

bool all_zero(const std::vector<TGAElement>& v) {
  return std::all_of(v.begin(), v.end(), [](const TGAElement& x) { return x.is_zero(); });
}

KernelVector kernel_by_linear_system(const CommutationMatrix& m, int witness) {
  const FiniteGroup& g = *m.theta().group();
  const Cocycle& c = m.theta().cocycle();
  int n = g.order(), N = m.theta().value_order();
  CycEchelon e(N, static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    std::vector<CycRow> rows(n, CycRow(static_cast<std::size_t>(n) * n, CycNumber(N)));
    for (int h = 0; h < n; ++h) {
      const MatrixEntry& me = m.at(x, h);
      for (int k = 0; k < n; ++k)
        rows[g.mul(me.commutator, k)][h * n + k] =
            CycNumber::from_root(me.scalar * c(me.commutator, k), N);
    }
    for (auto& r : rows) e.insert(std::move(r));
  }
  auto ker = e.kernel();
  ensure(!ker.empty(), "degenerate commutation matrix has trivial kernel");
  KernelVector kv;
  kv.witness = witness;
  kv.route = "linear-system";
  for (int h = 0; h < n; ++h) {
    TGAElement vh = TGAElement::zero(m.algebra()).lifted(N);
    for (int k = 0; k < n; ++k)
      if (!ker[0][h * n + k].is_zero()) vh += TGAElement::monomial(m.algebra(), k, ker[0][h * n + k]);
    kv.v.push_back(std::move(vh));
  }
  return kv;
}

}  // namespace

KernelVector degenerate_kernel(const CommutationMatrix& m) {
  const CommutationFunction& t = m.theta();
  const FiniteGroup& g = *t.group();
  Nondegeneracy nd = is_nondegenerate(t);
  if (nd.nondegenerate) throw ValidationError("no kernel exists (M^2 = nI)");
  const AlgebraPtr& alg = m.algebra();
  // A witness w central in G makes z = U_w central in B; with z^k = s and
  // c^k = s, y = prod_{c' != c}(z - c') is killed by z - c, and
  // v = (-c y, U_w y) on (e, w) is annihilated by every row.
  std::optional<int> w;
  for (int x = 1; x < g.order() && !w; ++x)
    if (nd.partner[x] < 0 && centralizer(g, x).size() == static_cast<std::size_t>(g.order())) w = x;
  if (!w) {
    KernelVector kv = kernel_by_linear_system(m, *nd.witness);
    ensure(!all_zero(kv.v) && all_zero(apply_matrix(m, kv.v)), "kernel vector check failed");
    return kv;
  }
  int k = g.element_order(*w);
  std::vector<int> word(k, *w);
  RootOfUnity s = change_order(word_scalar(t.cocycle(), word).scalar, t.value_order());
  int big = k * t.value_order();
  TGAElement z = TGAElement::basis(alg, *w).lifted(big);
  std::vector<TGAElement> zp = {TGAElement::monomial(alg, 0, RootOfUnity::one(big))};
  for (int i = 1; i < k; ++i) zp.push_back(zp.back() * z);
  for (int j = 0; j < k; ++j) {
    RootOfUnity c(big, s.exponent() + static_cast<long long>(j) * t.value_order());
    TGAElement y = TGAElement::zero(alg).lifted(big);
    for (int i = 0; i < k; ++i) y += zp[i].scaled(c.pow(k - 1 - i));
    if (y.is_zero()) continue;
    KernelVector kv;
    kv.witness = *w;
    kv.root = c;
    kv.route = "central-witness";
    kv.v.assign(g.order(), TGAElement::zero(alg).lifted(big));
    kv.v[0] = y.scaled(c).scaled(RootOfUnity::minus_one());
    kv.v[*w] = TGAElement::basis(alg, *w) * y;
    ensure(all_zero(apply_matrix(m, kv.v)), "kernel vector check failed");
    return kv;
  }
  throw InvariantViolation("no root of x^k - s leaves a nonzero cofactor");
}

}  // namespace regrade
