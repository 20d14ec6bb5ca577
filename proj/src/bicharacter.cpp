#include "regrade/bicharacter.hpp"

#include "regrade/errors.hpp"

namespace regrade {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

Bicharacter::Bicharacter(GroupPtr group, int order, std::vector<std::vector<int>> gen_table)
    : group_(std::move(group)), order_(order), n_(group_->order()), gen_(std::move(gen_table)) {
  require(group_->is_abelian(), "bicharacter requires an abelian group");
  require(order_ > 0, "bicharacter order must be positive");
  basis_ = abelian_basis(*group_);
  std::size_t k = basis_.generators.size();
  require(gen_.size() == k, "gen_table must be " + std::to_string(k) + "x" + std::to_string(k));
  for (auto& row : gen_) {
    require(row.size() == k, "gen_table row has wrong length");
    for (auto& x : row) x = mod(x, order_);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      require(mod(gen_[i][j] + gen_[j][i], order_) == 0, "bicharacter is not skew-symmetric");
      require(mod(1LL * gen_[i][j] * basis_.orders[i], order_) == 0 &&
                  mod(1LL * gen_[i][j] * basis_.orders[j], order_) == 0,
              "bicharacter value order does not divide gcd of generator orders");
    }
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int g = 0; g < n_; ++g)
    for (int h = 0; h < n_; ++h) {
      long long e = 0;
      const auto& a = basis_.coords[g];
      const auto& b = basis_.coords[h];
      for (std::size_t i = 0; i < k; ++i)
        if (a[i])
          for (std::size_t j = 0; j < k; ++j) e += 1LL * a[i] * b[j] * gen_[i][j];
      table_[g * n_ + h] = mod(e, order_);
    }
}

Bicharacter Bicharacter::from_function(GroupPtr group, int order,
                                       const std::function<RootOfUnity(int, int)>& f) {
  AbelianBasis b = abelian_basis(*group);
  std::size_t k = b.generators.size();
  std::vector<std::vector<int>> gen(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      gen[i][j] = change_order(f(b.generators[i], b.generators[j]), order).exponent();
  Bicharacter t(group, order, gen);
  for (int g = 0; g < t.n_; ++g)
    for (int h = 0; h < t.n_; ++h)
      require(t(g, h) == f(g, h), "values do not form a bicharacter");
  return t;
}

Bicharacter Bicharacter::trivial(GroupPtr group) {
  std::size_t k = abelian_basis(*group).generators.size();
  return Bicharacter(std::move(group), 1, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
}

std::optional<int> Bicharacter::degeneracy_witness() const {
  for (int g = 1; g < n_; ++g) {
    bool trivial = true;
    for (int h = 0; h < n_ && trivial; ++h) trivial = table_[g * n_ + h] == 0;
    if (trivial) return g;
  }
  return std::nullopt;
}

bool Bicharacter::is_alternating() const {
  for (int g = 0; g < n_; ++g)
    if (table_[g * n_ + g] != 0) return false;
  return true;
}

bool Bicharacter::same_values(const Bicharacter& o) const {
  if (!same_group(*group_, *o.group_)) return false;
  for (int g = 0; g < n_; ++g)
    for (int h = 0; h < n_; ++h)
      if (!((*this)(g, h) == o(g, h))) return false;
  return true;
}

Bicharacter tensor(const Bicharacter& a, const Bicharacter& b) {
  GroupPtr g = FiniteGroup::direct_product(a.group(), b.group());
  int na = a.group()->order();
  int order = lcm_int(a.order(), b.order());
  return Bicharacter::from_function(g, order, [&](int x, int y) {
    return a(x % na, y % na) * b(x / na, y / na);
  });
}

Bicharacter restrict_to(const Bicharacter& t, const Subgroup& s) {
  GroupPtr sub = subgroup_as_group(*t.group(), s);
  return Bicharacter::from_function(sub, t.order(),
                                    [&](int i, int j) { return t(s[i], s[j]); });
}

Bicharacter hat_product(const Bicharacter& a, const Bicharacter& b) {
  require(same_group(*a.group(), *b.group()), "hat product requires a common group");
  int order = lcm_int(a.order(), b.order());
  return Bicharacter::from_function(a.group(), order,
                                    [&](int x, int y) { return a(x, y) * b(x, y); });
}

Bicharacter power(const Bicharacter& t, int k) {
  auto gen = t.gen_table();
  for (auto& row : gen)
    for (auto& x : row) x = mod(1LL * x * k, t.order());
  return Bicharacter(t.group(), t.order(), gen);
}

Bicharacter with_order(const Bicharacter& t, int order) {
  require(order % t.order() == 0, "with_order: order must be a multiple");
  auto gen = t.gen_table();
  for (auto& row : gen)
    for (auto& x : row) x *= order / t.order();
  return Bicharacter(t.group(), order, gen);
}

Minimalization radical_and_minimalize(const Bicharacter& t) {
  const FiniteGroup& g = *t.group();
  Subgroup rad;
  for (int h = 0; h < g.order(); ++h) {
    bool in = true;
    for (int x = 0; x < g.order() && in; ++x) in = t.exponent(h, x) == 0;
    if (in) rad.push_back(h);
  }
  Quotient q = abelian_quotient(g, rad);
  Bicharacter bar = Bicharacter::from_function(
      q.group, t.order(), [&](int i, int j) { return t(q.reps[i], q.reps[j]); });
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      ensure(bar(q.projection[x], q.projection[y]) == t(x, y),
             "bicharacter is not constant on radical cosets");
  ensure(bar.is_nondegenerate(), "quotient by the radical is degenerate");
  return {std::move(rad), std::move(q), std::move(bar)};
}

}  // namespace regrade
