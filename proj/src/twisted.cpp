#include "regrade/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "regrade/errors.hpp"

namespace regrade {

AlgebraPtr make_algebra(Cocycle c) { return std::make_shared<const Cocycle>(std::move(c)); }

bool same_algebra(const Cocycle& a, const Cocycle& b) {
  if (&a == &b) return true;
  if (!same_group(*a.group(), *b.group())) return false;
  int n = a.group()->order();
  for (int i = 0; i < n * n; ++i)
    if (!(RootOfUnity(a.order(), a.table()[i]) == RootOfUnity(b.order(), b.table()[i])))
      return false;
  return true;
}

int exact_sqrt(long long n) {
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long long c = std::max(0LL, r - 1); c <= r + 1; ++c)
    if (c * c == n) return static_cast<int>(c);
  return -1;
}

// ---- TGAElement ------------------------------------------------------------

TGAElement::TGAElement(AlgebraPtr alg, int order) : alg_(std::move(alg)), order_(order) {
  require(alg_ != nullptr, "null algebra");
  require(order_ % alg_->order() == 0, "coefficient order must be a multiple of the cocycle order");
}

TGAElement TGAElement::basis(const AlgebraPtr& alg, int g) {
  return monomial(alg, g, RootOfUnity::one(alg->order()));
}

TGAElement TGAElement::monomial(const AlgebraPtr& alg, int g, const RootOfUnity& s) {
  int order = lcm_int(alg->order(), s.order());
  return monomial(alg, g, CycNumber::from_root(s, order));
}

TGAElement TGAElement::monomial(const AlgebraPtr& alg, int g, const CycNumber& c) {
  alg->group()->check_element(g);
  TGAElement x(alg, lcm_int(alg->order(), c.order()));
  x.add_term(g, change_order(c, x.order_));
  return x;
}

TGAElement TGAElement::monomial_inverse(const AlgebraPtr& alg, int g) {
  return monomial(alg, alg->group()->inverse(g), alg->inverse_scalar(g));
}

CycNumber TGAElement::coefficient(int g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? CycNumber(order_) : it->second;
}

std::optional<std::pair<RootOfUnity, int>> TGAElement::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  auto r = terms_.begin()->second.as_root();
  if (!r) return std::nullopt;
  return std::make_pair(*r, terms_.begin()->first);
}

void TGAElement::add_term(int g, const CycNumber& c) {
  auto it = terms_.find(g);
  CycNumber v = it == terms_.end() ? c : it->second + c;
  v = v.reduced();
  if (v.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(g, std::move(v));
  } else {
    it->second = std::move(v);
  }
}

TGAElement TGAElement::lifted(int order) const {
  TGAElement x(alg_, order);
  for (const auto& [g, c] : terms_) x.terms_.emplace(g, change_order(c, order).reduced());
  return x;
}

TGAElement& TGAElement::operator+=(const TGAElement& o) {
  require(same_algebra(*alg_, *o.alg_), "algebra mismatch");
  int order = lcm_int(order_, o.order_);
  if (order != order_) *this = lifted(order);
  for (const auto& [g, c] : o.terms_) add_term(g, change_order(c, order));
  return *this;
}

TGAElement& TGAElement::operator-=(const TGAElement& o) {
  return *this += o.scaled(RootOfUnity::minus_one());
}

TGAElement TGAElement::scaled(const CycNumber& c) const {
  int order = lcm_int(order_, c.order());
  CycNumber k = change_order(c, order);
  TGAElement x(alg_, order);
  for (const auto& [g, v] : terms_) x.add_term(g, change_order(v, order) * k);
  return x;
}

TGAElement TGAElement::scaled(const RootOfUnity& s) const {
  int order = lcm_int(order_, s.order());
  TGAElement x(alg_, order);
  for (const auto& [g, v] : terms_) x.terms_.emplace(g, change_order(v, order).times(s).reduced());
  return x;
}

std::string TGAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")U[" << alg_->group()->label(g) << "]";
  }
  return os.str();
}

TGAElement operator+(TGAElement a, const TGAElement& b) { return a += b; }
TGAElement operator-(TGAElement a, const TGAElement& b) { return a -= b; }

TGAElement operator*(const TGAElement& a, const TGAElement& b) {
  require(same_algebra(*a.algebra(), *b.algebra()), "algebra mismatch");
  const Cocycle& c = *a.algebra();
  const FiniteGroup& g = *c.group();
  int order = lcm_int(a.order(), b.order());
  TGAElement out(a.algebra(), order);
  std::map<int, CycNumber> acc;
  for (const auto& [x, cx] : a.terms()) {
    CycNumber lx = change_order(cx, order);
    for (const auto& [y, cy] : b.terms()) {
      CycNumber t = (lx * change_order(cy, order)).times(c(x, y));
      int xy = g.mul(x, y);
      auto it = acc.find(xy);
      if (it == acc.end()) acc.emplace(xy, std::move(t));
      else it->second += t;
    }
  }
  for (auto& [x, v] : acc) out += TGAElement::monomial(a.algebra(), x, v);
  return out.lifted(order);
}

bool operator==(const TGAElement& a, const TGAElement& b) {
  if (!same_algebra(*a.algebra(), *b.algebra())) return false;
  return (a - b).is_zero();
}

// ---- center ----------------------------------------------------------------

namespace {

bool monomials_commute(const Cocycle& c, int g, int h) { return c(g, h) == c(h, g); }

// Rows of z U_h - U_h z = 0 restricted to coefficients on `support`.
CycEchelon centrality_system(const AlgebraPtr& alg, const std::vector<int>& support) {
  const FiniteGroup& g = *alg->group();
  int n = g.order(), N = alg->order();
  CycEchelon e(N, support.size());
  for (int h = 0; h < n; ++h) {
    std::vector<CycRow> rows(n, CycRow(support.size(), CycNumber(N)));
    for (std::size_t j = 0; j < support.size(); ++j) {
      int k = support[j];
      rows[g.mul(k, h)][j] += CycNumber::from_root((*alg)(k, h));
      rows[g.mul(h, k)][j] -= CycNumber::from_root((*alg)(h, k));
    }
    for (auto& r : rows) e.insert(std::move(r));
  }
  return e;
}

}  // namespace

RayReport ray_classes(const AlgebraPtr& alg) {
  const FiniteGroup& g = *alg->group();
  RayReport r;
  for (auto& cls : conjugacy_classes(g)) {
    RayClass rc;
    rc.elements = cls;
    int x = cls.front();
    rc.is_ray = true;
    for (int h : centralizer(g, x))
      if (!monomials_commute(*alg, x, h)) {
        rc.is_ray = false;
        break;
      }
    if (rc.is_ray) {
      TGAElement a = TGAElement::zero(alg);
      TGAElement ux = TGAElement::basis(alg, x);
      for (int t : coset_reps(g, centralizer(g, x)))
        a += TGAElement::basis(alg, t) * ux * TGAElement::monomial_inverse(alg, t);
      for (int h = 0; h < g.order(); ++h) {
        TGAElement uh = TGAElement::basis(alg, h);
        ensure(a * uh == uh * a, "ray element is not central");
      }
      ensure(!a.is_zero(), "ray element vanishes");
      rc.ray_element = a;
      ++r.center_dim;
    }
    r.classes.push_back(std::move(rc));
  }
  return r;
}

int center_dim_oracle(const AlgebraPtr& alg) {
  return static_cast<int>(alg->group()->order()) -
         static_cast<int>(centrality_system(alg, whole_group(*alg->group())).rank());
}

int central_dim_on_support(const AlgebraPtr& alg, const std::vector<int>& support) {
  return static_cast<int>(support.size()) -
         static_cast<int>(centrality_system(alg, support).rank());
}

Simplicity is_simple(const AlgebraPtr& alg) {
  Simplicity s;
  s.simple = ray_classes(alg).center_dim == 1;
  if (s.simple) {
    s.size = exact_sqrt(alg->group()->order());
    ensure(s.size > 0, "simple twisted group algebra of non-square dimension");
  }
  return s;
}

namespace {

void check_index2(const FiniteGroup& g, const Subgroup& h) {
  require(is_subgroup(g, h), "H is not a subgroup");
  require(2 * h.size() == static_cast<std::size_t>(g.order()), "H must have index 2");
}

}  // namespace

Z2Simplicity is_z2_simple(const AlgebraPtr& alg, const Subgroup& h) {
  const FiniteGroup& g = *alg->group();
  check_index2(g, h);
  Z2Simplicity r;
  r.vacuous = h.size() == 1;
  r.z2_simple = true;
  for (int x : h) {
    if (x == 0) continue;
    bool found = false;
    for (int y : centralizer(g, x))
      if (!monomials_commute(*alg, x, y)) {
        found = true;
        break;
      }
    if (!found) {
      r.z2_simple = false;
      break;
    }
  }
  return r;
}

bool z2_simple_oracle(const AlgebraPtr& alg, const Subgroup& h) {
  check_index2(*alg->group(), h);
  return central_dim_on_support(alg, h) == 1;
}

int generated_ideal_dim(const TGAElement& x) {
  const AlgebraPtr& alg = x.algebra();
  int n = alg->group()->order();
  CycEchelon e(x.order(), n);
  for (int a = 0; a < n && static_cast<int>(e.rank()) < n; ++a) {
    TGAElement left = TGAElement::basis(alg, a) * x;
    for (int b = 0; b < n; ++b) {
      TGAElement y = (left * TGAElement::basis(alg, b)).lifted(x.order());
      CycRow row(n, CycNumber(x.order()));
      for (const auto& [k, c] : y.terms()) row[k] = c;
      e.insert(std::move(row));
    }
  }
  return static_cast<int>(e.rank());
}

TypeReport algebra_type(const AlgebraPtr& alg, const Subgroup& h) {
  const FiniteGroup& g = *alg->group();
  int n = g.order();
  int center = ray_classes(alg).center_dim;
  if (static_cast<int>(h.size()) == n) {
    require(center == 1, "B is not simple (so not Z2-simple for H = G)");
    int s = exact_sqrt(n);
    ensure(s > 0, "simple twisted group algebra of non-square dimension");
    return {AlgebraType::Type1, s};
  }
  Z2Simplicity z = is_z2_simple(alg, h);
  ensure(z.z2_simple == z2_simple_oracle(alg, h),
         "Z2-simplicity criterion disagrees with the even-center oracle");
  require(z.z2_simple, "B is not Z2-simple with respect to H");
  if (center == 1) {
    int s = exact_sqrt(n);
    ensure(s > 0 && s % 2 == 0, "type 2 needs |G| = (2m)^2");
    return {AlgebraType::Type2, s / 2};
  }
  if (center == 2) {
    int s = exact_sqrt(n / 2);
    ensure(n % 2 == 0 && s > 0, "type 3 needs |G| = 2n^2");
    return {AlgebraType::Type3, s};
  }
  throw InvariantViolation("Z2-simple algebra with center of dimension " + std::to_string(center));
}

}  // namespace regrade
