#include "regrade/envelopes.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

std::string default_label(int i) { return "b" + std::to_string(i); }

}  // namespace

SparseVec sparse_basis(int i, int order) { return {{i, CycNumber::from_int(order, 1)}}; }

SparseVec sparse_scaled(const SparseVec& v, const CycNumber& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : v) {
    CycNumber y = (x * c).reduced();
    if (!y.is_zero()) out.emplace_back(k, std::move(y));
  }
  return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      CycNumber s = (a[i].second + b[j].second).reduced();
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

GradedAlgebra::GradedAlgebra(GroupPtr group, int order, std::vector<int> degrees,
                             std::vector<std::vector<SparseVec>> mult, std::string name,
                             std::vector<std::string> labels)
    : group_(std::move(group)),
      order_(order),
      degrees_(std::move(degrees)),
      mult_(std::move(mult)),
      name_(std::move(name)),
      labels_(std::move(labels)) {
  require(order_ >= 1, "algebra: order must be positive");
  const int d = dim();
  require(static_cast<int>(mult_.size()) == d, "algebra: structure table has wrong size");
  components_.assign(group_->order(), {});
  for (int i = 0; i < d; ++i) {
    group_->check_element(degrees_[i]);
    components_[degrees_[i]].push_back(i);
  }
  if (labels_.empty())
    for (int i = 0; i < d; ++i) labels_.push_back(default_label(i));
  require(static_cast<int>(labels_.size()) == d, "algebra: wrong number of labels");
  for (int i = 0; i < d; ++i) {
    require(static_cast<int>(mult_[i].size()) == d, "algebra: structure table has wrong size");
    for (int j = 0; j < d; ++j) {
      SparseVec& p = mult_[i][j];
      int target = group_->mul(degrees_[i], degrees_[j]);
      int last = -1;
      SparseVec clean;
      for (auto& [k, c] : p) {
        require(k > last && k < d, "algebra: product entries must be sorted basis indices");
        last = k;
        require(c.order() == order_, "algebra: coefficient order mismatch");
        CycNumber r = c.reduced();
        if (r.is_zero()) continue;
        require(degrees_[k] == target, "algebra: product " + labels_[i] + " * " + labels_[j] +
                                           " leaves the component of its degree");
        clean.emplace_back(k, std::move(r));
      }
      p = std::move(clean);
    }
  }
}

SparseVec GradedAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const SparseVec& p = mult_[i][j];
      if (p.empty()) continue;
      out = sparse_add(out, sparse_scaled(p, x * y));
    }
  return out;
}

SparseVec GradedAlgebra::basis_product(const std::vector<int>& w) const {
  require(!w.empty(), "basis_product: empty word");
  SparseVec v = sparse_basis(w[0], order_);
  for (std::size_t t = 1; t < w.size() && !v.empty(); ++t) {
    SparseVec next;
    for (const auto& [k, x] : v) {
      const SparseVec& p = mult_[k][w[t]];
      if (!p.empty()) next = sparse_add(next, sparse_scaled(p, x));
    }
    v = std::move(next);
  }
  return v;
}

bool GradedAlgebra::is_associative() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        SparseVec left = multiply(mult_[i][j], sparse_basis(k, order_));
        SparseVec right = multiply(sparse_basis(i, order_), mult_[j][k]);
        if (!sparse_equal(left, right)) return false;
      }
  return true;
}

GradedAlgebra GradedAlgebra::lifted(int order) const {
  require(order % order_ == 0, "algebra: lifted order must be a multiple");
  if (order == order_) return *this;
  auto mult = mult_;
  for (auto& row : mult)
    for (auto& p : row)
      for (auto& [k, c] : p) c = change_order(c, order);
  return GradedAlgebra(group_, order, degrees_, std::move(mult), name_, labels_);
}

int grassmann_product_sign(unsigned s, unsigned t) {
  if (s & t) return 0;
  // Each generator of T passes the generators of S above it.
  int swaps = 0;
  for (unsigned rest = t; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(s >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

GradedAlgebra truncated_grassmann(int k) {
  require(k >= 0 && k <= 12, "grassmann: rank must be in [0, 12]");
  const int d = 1 << k;
  std::vector<int> degrees(d);
  std::vector<std::string> labels(d);
  for (int s = 0; s < d; ++s) {
    degrees[s] = std::popcount(static_cast<unsigned>(s)) % 2;
    std::string l = "e";
    if (s == 0) l = "1";
    for (int i = 0; i < k; ++i)
      if (s >> i & 1) l += std::to_string(i + 1);
    labels[s] = l;
  }
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) {
      int sign = grassmann_product_sign(s, t);
      if (sign) mult[s][t] = {{s | t, CycNumber::from_int(1, sign)}};
    }
  return GradedAlgebra(FiniteGroup::cyclic(2), 1, degrees, std::move(mult),
                       "E(" + std::to_string(k) + ")", labels);
}

GradedAlgebra symbol_algebra(int n) {
  require(n >= 1, "symbol algebra: n must be positive");
  auto group = FiniteGroup::abelian({n, n});
  const int d = n * n;
  std::vector<int> degrees(d);
  std::vector<std::string> labels(d);
  for (int i = 0; i < d; ++i) {
    degrees[i] = i;
    labels[i] = "X^" + std::to_string(i % n) + "Y^" + std::to_string(i / n);
  }
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      int i = a % n, j = a / n, k = b % n, l = b / n;
      // X^i Y^j X^k Y^l = zeta^{jk} X^{i+k} Y^{j+l}
      int target = (i + k) % n + n * ((j + l) % n);
      mult[a][b] = {{target, CycNumber::from_root(RootOfUnity(n, static_cast<long long>(j) * k))}};
    }
  return GradedAlgebra(group, n, degrees, std::move(mult), "M_" + std::to_string(n) + " symbol",
                       labels);
}

GradedAlgebra cyclic_quotient(int n, const CycNumber& c) {
  require(n >= 1, "cyclic quotient: n must be positive");
  std::vector<int> degrees(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    degrees[i] = i;
    labels[i] = "x^" + std::to_string(i);
  }
  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i + j < n)
        mult[i][j] = {{i + j, CycNumber::from_int(c.order(), 1)}};
      else if (!c.is_zero())
        mult[i][j] = {{i + j - n, c}};
    }
  return GradedAlgebra(FiniteGroup::cyclic(n), c.order(), degrees, std::move(mult),
                       "F[x]/(x^" + std::to_string(n) + " - " + c.to_string() + ")", labels);
}

GradedAlgebra twisted_algebra(const Cocycle& c) {
  const FiniteGroup& g = *c.group();
  const int d = g.order();
  std::vector<int> degrees(d);
  std::vector<std::string> labels(d);
  for (int i = 0; i < d; ++i) {
    degrees[i] = i;
    labels[i] = "U[" + g.label(i) + "]";
  }
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) mult[a][b] = {{g.mul(a, b), CycNumber::from_root(c(a, b))}};
  return GradedAlgebra(c.group(), c.order(), degrees, std::move(mult), "twisted " + g.name(),
                       labels);
}

namespace {

// Tensor on the pairs (i, j) listed in `pairs`, with degrees supplied.
GradedAlgebra tensor_on(const GradedAlgebra& a0, const GradedAlgebra& b0, GroupPtr group,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<int>& degrees, const std::string& name) {
  const int order = lcm_int(a0.order(), b0.order());
  GradedAlgebra a = a0.lifted(order), b = b0.lifted(order);
  std::vector<int> index(a.dim() * b.dim(), -1);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    index[pairs[p].first + a.dim() * pairs[p].second] = static_cast<int>(p);
  const int d = static_cast<int>(pairs.size());
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  std::vector<std::string> labels(d);
  for (int p = 0; p < d; ++p) {
    labels[p] = a.label(pairs[p].first) + "@" + b.label(pairs[p].second);
    for (int q = 0; q < d; ++q) {
      const SparseVec& x = a.product(pairs[p].first, pairs[q].first);
      const SparseVec& y = b.product(pairs[p].second, pairs[q].second);
      SparseVec out;
      for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
          int k = index[i + a.dim() * j];
          ensure(k >= 0, "tensor: product leaves the selected components");
          out.emplace_back(k, (ci * cj).reduced());
        }
      std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
      mult[p][q] = std::move(out);
    }
  }
  return GradedAlgebra(std::move(group), order, degrees, std::move(mult), name, labels);
}

}  // namespace

GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  auto group = FiniteGroup::direct_product(a.group(), b.group());
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> degrees;
  for (int j = 0; j < b.dim(); ++j)
    for (int i = 0; i < a.dim(); ++i) {
      pairs.emplace_back(i, j);
      degrees.push_back(a.degree(i) + a.group()->order() * b.degree(j));
    }
  return tensor_on(a, b, group, pairs, degrees, "(" + a.name() + ") (x) (" + b.name() + ")");
}

GradedAlgebra hat_tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  require(same_group(*a.group(), *b.group()), "hat tensor: groups differ");
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> degrees;
  for (int g = 0; g < a.group()->order(); ++g)
    for (int i : a.component(g))
      for (int j : b.component(g)) {
        pairs.emplace_back(i, j);
        degrees.push_back(g);
      }
  return tensor_on(a, b, a.group(), pairs, degrees, "(" + a.name() + ") (x^) (" + b.name() + ")");
}

GradedAlgebra direct_sum(const GradedAlgebra& a0, const GradedAlgebra& b0) {
  require(same_group(*a0.group(), *b0.group()), "direct sum: groups differ");
  const int order = lcm_int(a0.order(), b0.order());
  GradedAlgebra a = a0.lifted(order), b = b0.lifted(order);
  const int da = a.dim(), d = da + b.dim();
  std::vector<int> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  std::vector<std::string> labels;
  for (int i = 0; i < da; ++i) labels.push_back(a.label(i) + "+0");
  for (int i = 0; i < b.dim(); ++i) labels.push_back("0+" + b.label(i));
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) mult[i][j] = a.product(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      SparseVec p = b.product(i, j);
      for (auto& [k, c] : p) k += da;
      mult[da + i][da + j] = std::move(p);
    }
  return GradedAlgebra(a.group(), order, degrees, std::move(mult),
                       "(" + a.name() + ") (+) (" + b.name() + ")", labels);
}

GradedAlgebra regrade_by(const GradedAlgebra& a, GroupPtr target, const std::vector<int>& phi) {
  const FiniteGroup& g = *a.group();
  require(static_cast<int>(phi.size()) == g.order(), "regrade: map must cover the group");
  for (int x : phi) target->check_element(x);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      require(phi[g.mul(x, y)] == target->mul(phi[x], phi[y]), "regrade: map is not a homomorphism");
  std::vector<int> degrees(a.dim());
  for (int i = 0; i < a.dim(); ++i) degrees[i] = phi[a.degree(i)];
  std::vector<std::vector<SparseVec>> mult(a.dim(), std::vector<SparseVec>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) mult[i][j] = a.product(i, j);
  std::vector<std::string> labels;
  for (int i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
  return GradedAlgebra(std::move(target), a.order(), degrees, std::move(mult),
                       a.name() + " regraded", labels);
}

GradedAlgebra grassmann_envelope(const GradedAlgebra& a, const Subgroup& h, int k) {
  const FiniteGroup& g = *a.group();
  require(is_subgroup(g, h), "envelope: H is not a subgroup");
  require(g.order() == static_cast<int>(h.size()) || g.order() == 2 * static_cast<int>(h.size()),
          "envelope: H must have index 1 or 2");
  GradedAlgebra e = truncated_grassmann(k);
  std::vector<int> parity(g.order(), 1);
  for (int x : h) parity[x] = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> degrees;
  for (int x = 0; x < g.order(); ++x)
    for (int i : e.component(parity[x]))
      for (int j : a.component(x)) {
        pairs.emplace_back(i, j);
        degrees.push_back(x);
      }
  return tensor_on(e, a, a.group(), pairs, degrees, "E(" + a.name() + ")");
}

RegularityReport check_regularity(const GradedAlgebra& a0, int max_length) {
  require(max_length >= 1, "regularity: max length must be positive");
  // The roots of unity in Q(zeta_N) are +-zeta_N^k.
  GradedAlgebra a = a0.lifted(lcm_int(a0.order(), 2));
  const FiniteGroup& g = *a.group();
  const int n = g.order();
  RegularityReport rep;
  rep.max_length = max_length;
  rep.theta.assign(n * n, std::nullopt);

  // Condition (1): depth-first search for a nonzero product per degree word.
  std::function<bool(const std::vector<int>&, std::size_t, const SparseVec&)> nonzero =
      [&](const std::vector<int>& word, std::size_t pos, const SparseVec& prefix) -> bool {
    if (pos == word.size()) return !prefix.empty();
    for (int b : a.component(word[pos])) {
      SparseVec next;
      if (pos == 0) {
        next = sparse_basis(b, a.order());
      } else {
        for (const auto& [k, x] : prefix) {
          const SparseVec& p = a.product(k, b);
          if (!p.empty()) next = sparse_add(next, sparse_scaled(p, x));
        }
        if (next.empty()) continue;
      }
      if (nonzero(word, pos + 1, next)) return true;
    }
    return false;
  };
  rep.condition1 = true;
  for (int len = 1; len <= max_length && rep.condition1; ++len) {
    std::vector<int> word(len, 0);
    while (true) {
      if (!nonzero(word, 0, {})) {
        rep.condition1 = false;
        rep.failing_word = word;
        break;
      }
      int t = 0;
      while (t < len && ++word[t] == n) word[t++] = 0;
      if (t == len) break;
    }
  }

  // Condition (2): one scalar per commuting pair of degrees.
  rep.condition2 = true;
  for (int x = 0; x < n && rep.condition2; ++x)
    for (int y = 0; y < n && rep.condition2; ++y) {
      if (!g.commute(x, y)) continue;
      std::optional<RootOfUnity> theta;
      bool ok = true;
      for (int i : a.component(x)) {
        for (int j : a.component(y)) {
          const SparseVec& ab = a.product(i, j);
          const SparseVec& ba = a.product(j, i);
          if (ab.empty() && ba.empty()) continue;
          if (ab.empty() || ba.empty()) {
            ok = false;
            break;
          }
          if (!theta) {
            try {
              auto r = ab[0].second.exact_div(ba[0].second).as_root();
              if (r) theta = *r;
            } catch (const ValidationError&) {
            }
            if (!theta) {
              ok = false;
              break;
            }
          }
          if (!sparse_equal(ab, sparse_scaled(ba, CycNumber::from_root(*theta, a.order())))) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) {
        rep.condition2 = false;
        rep.failing_pair = {x, y};
      } else {
        rep.theta[x * n + y] = theta;
      }
    }
  rep.regular = rep.condition1 && rep.condition2;
  return rep;
}

}  // namespace regrade
