#include "regrade/cocycles.hpp"

#include <string>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

bool cocycle_identity(const FiniteGroup& g, int order, const std::vector<int>& t) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mod(t[a * n + b] + t[ab * n + c] - t[b * n + c] - t[a * n + g.mul(b, c)], order))
          return false;
    }
  return true;
}

}  // namespace

Cocycle::Cocycle(GroupPtr group, int order, std::vector<int> table)
    : group_(std::move(group)), order_(order), table_(std::move(table)) {
  require(order_ > 0, "cocycle order must be positive");
  int n = group_->order();
  require(static_cast<int>(table_.size()) == n * n,
          "cocycle table must have " + std::to_string(n * n) + " entries");
  for (auto& x : table_) x = mod(x, order_);
  require(cocycle_identity(*group_, order_, table_), "table violates the 2-cocycle identity");
  // The identity forces alpha(e,g) = alpha(g,e) = alpha(e,e); dividing by
  // that constant is a coboundary shift.
  int c = table_[0];
  if (c)
    for (auto& x : table_) x = mod(x - c, order_);
}

Cocycle Cocycle::trivial(GroupPtr group) {
  int n = group->order();
  return Cocycle(std::move(group), 1, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
}

RootOfUnity Cocycle::commutator(int g, int h) const {
  return RootOfUnity(order_, at(g, h) - at(h, g));
}

bool validate_cocycle(const FiniteGroup& g, int order, const std::vector<int>& table) {
  int n = g.order();
  if (order <= 0 || static_cast<int>(table.size()) != n * n) return false;
  for (int a = 0; a < n; ++a)
    if (mod(table[a], order) || mod(table[a * n], order)) return false;
  return cocycle_identity(g, order, table);
}

bool validate_cocycle(const Cocycle& c) {
  return validate_cocycle(*c.group(), c.order(), c.table());
}

Cocycle scheunert_cocycle(const Bicharacter& theta) {
  const FiniteGroup& g = *theta.group();
  if (!theta.is_alternating())
    throw ValidationError(
        "scheunert_cocycle needs theta(g,g) = 1 for all g; use the Grassmann-envelope route");
  const AbelianBasis& b = theta.basis();
  std::size_t k = b.generators.size();
  int n = g.order(), N = theta.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long long e = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
          e += 1LL * theta.gen_table()[i][j] * b.coords[x][i] * b.coords[y][j];
      t[x * n + y] = mod(e, N);
    }
  Cocycle c(theta.group(), N, std::move(t));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ensure(c.commutator(x, y) == theta(x, y), "Scheunert cocycle does not realize theta");
  return c;
}

WordScalar word_scalar(const Cocycle& c, std::span<const int> word) {
  require(!word.empty(), "word_scalar: empty word");
  const FiniteGroup& g = *c.group();
  g.check_element(word[0]);
  int p = word[0];
  long long e = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    g.check_element(word[i]);
    e += c.at(p, word[i]);
    p = g.mul(p, word[i]);
  }
  return {RootOfUnity(c.order(), e), p};
}

Cocycle d8_q16_cocycle() {
  GroupPtr d8 = FiniteGroup::dihedral8();
  // In Q16, (u^a v^b)(u^c v^d) = u^{a + (b ? 3c : c) + 4[b+d=2]} v^{b+d mod 2};
  // the product is s(x^a y^b x^c y^d) times u^4 iff the u-exponent, reduced
  // mod 8, leaves [0,4).
  std::vector<int> t(64);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          int e = a + (b ? 3 * c : c) + (b + d == 2 ? 4 : 0);
          t[(a + 4 * b) * 8 + c + 4 * d] = (e % 8) >= 4 ? 1 : 0;
        }
  return Cocycle(d8, 2, std::move(t));
}

Cocycle tensor_cocycle(const Cocycle& a, const Cocycle& b) {
  GroupPtr g = FiniteGroup::direct_product(a.group(), b.group());
  int na = a.group()->order(), n = g->order();
  int N = lcm_int(a.order(), b.order());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = change_order(a(x % na, y % na) * b(x / na, y / na), N).exponent();
  return Cocycle(g, N, std::move(t));
}

Cocycle restrict_cocycle(const Cocycle& c, const Subgroup& s) {
  GroupPtr sub = subgroup_as_group(*c.group(), s);
  int n = sub->order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = c.at(s[i], s[j]);
  return Cocycle(sub, c.order(), std::move(t));
}

Cocycle pointwise_product(const Cocycle& a, const Cocycle& b) {
  require(same_group(*a.group(), *b.group()), "pointwise product requires a common group");
  int n = a.group()->order();
  int N = lcm_int(a.order(), b.order());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n * n; ++x)
    t[x] = a.table()[x] * (N / a.order()) + b.table()[x] * (N / b.order());
  return Cocycle(a.group(), N, std::move(t));
}

Cocycle with_order(const Cocycle& c, int order) {
  require(order % c.order() == 0, "with_order: order must be a multiple");
  std::vector<int> t = c.table();
  for (auto& x : t) x *= order / c.order();
  return Cocycle(c.group(), order, std::move(t));
}

Subgroup d8_klein_subgroup() { return {0, 2, 4, 6}; }

}  // namespace regrade
