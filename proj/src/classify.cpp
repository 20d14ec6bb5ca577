#include "regrade/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "regrade/errors.hpp"
#include "regrade/twisted.hpp"

namespace regrade {

int BasicFactor::q() const {
  int r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  return kind == Kind::Tau ? 2 : r;
}

std::string BasicFactor::name() const {
  switch (kind) {
    case Kind::Tau:
      return "tau";
    case Kind::Eta:
      return "eta_" + std::to_string(q());
    case Kind::Epsilon:
      return "eps_" + std::to_string(q());
  }
  return "";
}

bool same_kind(const BasicFactor& a, const BasicFactor& b) {
  return a.kind == b.kind && (a.kind == BasicFactor::Kind::Tau || (a.p == b.p && a.m == b.m));
}

bool kind_less(const BasicFactor& a, const BasicFactor& b) {
  auto key = [](const BasicFactor& f) {
    return std::tuple(f.p, static_cast<int>(f.kind), f.kind == BasicFactor::Kind::Tau ? 0 : f.m);
  };
  return key(a) < key(b);
}

int CanonicalForm::exceptional() const {
  int n = 0;
  for (const auto& f : factors) n += f.kind != BasicFactor::Kind::Eta;
  return n;
}

std::vector<std::string> CanonicalForm::names() const {
  std::vector<std::string> out;
  for (const auto& f : factors) out.push_back(f.name());
  return out;
}

std::string CanonicalForm::to_string() const {
  if (factors.empty()) return "trivial";
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : " (x) ") + f.name();
  return s;
}

bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (!same_kind(a.factors[i], b.factors[i])) return false;
  return true;
}

std::vector<BasicFactor> rewrite_canonical(std::vector<BasicFactor> factors) {
  std::vector<BasicFactor> out, eps;
  int taus = 0;
  for (auto& f : factors) {
    f.generators.clear();
    if (f.kind == BasicFactor::Kind::Tau)
      ++taus;
    else if (f.kind == BasicFactor::Kind::Epsilon)
      eps.push_back(f);
    else
      out.push_back(f);
  }
  // tau (x) tau = eps_2
  for (; taus >= 2; taus -= 2) eps.push_back(BasicFactor::epsilon(1));
  if (taus == 1) {
    // eps_q (x) tau = eta_q (x) tau
    for (auto& e : eps) out.push_back(BasicFactor::eta(2, e.m));
    out.push_back(BasicFactor::tau());
  } else if (!eps.empty()) {
    // eps_q (x) eps_r = eps_q (x) eta_r for q <= r
    std::sort(eps.begin(), eps.end(), kind_less);
    out.push_back(eps[0]);
    for (std::size_t i = 1; i < eps.size(); ++i) out.push_back(BasicFactor::eta(2, eps[i].m));
  }
  std::sort(out.begin(), out.end(), kind_less);
  return out;
}

Bicharacter basic_bicharacter(const BasicFactor& f) {
  if (f.kind == BasicFactor::Kind::Tau) return Bicharacter(FiniteGroup::cyclic(2), 2, {{1}});
  const int q = f.q();
  auto g = FiniteGroup::abelian({q, q});
  if (f.kind == BasicFactor::Kind::Eta) return Bicharacter(g, q, {{0, 1}, {q - 1, 0}});
  require(f.p == 2, "epsilon factors live on 2-groups");
  return Bicharacter(g, q, {{0, 1}, {q - 1, q / 2}});
}

Bicharacter recompose(const std::vector<BasicFactor>& factors) {
  if (factors.empty()) return Bicharacter::trivial(FiniteGroup::trivial());
  Bicharacter t = basic_bicharacter(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) t = tensor(t, basic_bicharacter(factors[i]));
  return t;
}

namespace {

int log_p(int q, int p) {
  int m = 0;
  for (; q > 1; q /= p) ++m;
  return m;
}

int inverse_mod(int k, int q) {
  for (int u = 1; u < q; ++u)
    if (static_cast<long long>(k) * u % q == 1) return u;
  throw InvariantViolation("no inverse modulo " + std::to_string(q));
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_minus_one(const RootOfUnity& r) { return r == RootOfUnity::minus_one(); }

class Decomposer {
 public:
  explicit Decomposer(const Bicharacter& t) : t_(t), g_(*t.group()) {}

  // theta restricted to <a, b> is nondegenerate on a copy of Z_q x Z_q.
  bool good_pair(int a, int b) const {
    if (a == b) return false;
    const int q = t_(a, b).element_order();
    if (q == 1 || g_.element_order(a) != q || g_.element_order(b) != q) return false;
    Subgroup s = subgroup_generated(g_, {a, b});
    if (static_cast<int>(s.size()) != q * q) return false;
    for (int x : s)
      if (x != 0 && t_(x, a).is_one() && t_(x, b).is_one()) return false;
    return true;
  }

  // Orients and normalizes a good pair into Eta or Epsilon form.
  BasicFactor pair_factor(int a, int b, int p) const {
    bool sa = is_minus_one(t_(a, a)), sb = is_minus_one(t_(b, b));
    if (sa && sb) {
      a = g_.mul(a, b);
      sa = false;
    }
    if (sa) std::swap(a, b);
    const int q = t_(a, b).element_order();
    RootOfUnity v = t_(a, b);
    b = g_.power(b, inverse_mod(v.exponent() / (v.order() / q), q));
    BasicFactor f{(sa || sb) ? BasicFactor::Kind::Epsilon : BasicFactor::Kind::Eta, p, log_p(q, p),
                  {a, b}};
    ensure(t_(a, b) == RootOfUnity(q, 1) && t_(a, a).is_one() &&
               (f.kind == BasicFactor::Kind::Eta ? t_(b, b).is_one() : is_minus_one(t_(b, b))),
           "pair normalization failed");
    return f;
  }

  // Elements of k orthogonal to both a and b.
  std::vector<int> complement(const std::vector<int>& k, const std::vector<int>& gens) const {
    std::vector<int> out;
    for (int x : k) {
      bool orth = true;
      for (int y : gens) orth = orth && t_(x, y).is_one();
      if (orth) out.push_back(x);
    }
    return out;
  }

  // Greedy peeling of a nondegenerate p-subgroup.
  std::vector<BasicFactor> peel(std::vector<int> k, int p) const {
    std::vector<BasicFactor> out;
    while (k.size() > 1) {
      int best_a = -1, best_b = -1, best_q = 1;
      for (int a : k)
        for (int b : k) {
          int q = t_(a, b).element_order();
          if (q > best_q && good_pair(a, b)) {
            best_a = a;
            best_b = b;
            best_q = q;
          }
        }
      if (best_a < 0) {
        ensure(k.size() == 2 && is_minus_one(t_(k[1], k[1])),
               "decomposition: no nondegenerate pair in a nontrivial block");
        out.push_back({BasicFactor::Kind::Tau, 2, 1, {k[1]}});
        break;
      }
      BasicFactor f = pair_factor(best_a, best_b, p);
      std::vector<int> rest = complement(k, f.generators);
      ensure(rest.size() * best_q * best_q == k.size(), "decomposition: complement is not direct");
      out.push_back(f);
      k = std::move(rest);
    }
    return out;
  }

  std::vector<int> span(const std::vector<int>& gens) const { return subgroup_generated(g_, gens); }

  // Rewrites with witnesses; the 2-part only.
  std::vector<BasicFactor> rewrite(std::vector<BasicFactor> fs) const {
    std::vector<BasicFactor> out, taus, eps;
    for (auto& f : fs) {
      if (f.kind == BasicFactor::Kind::Tau)
        taus.push_back(f);
      else if (f.kind == BasicFactor::Kind::Epsilon)
        eps.push_back(f);
      else
        out.push_back(f);
    }
    while (taus.size() >= 2) {
      BasicFactor t1 = taus.back();
      taus.pop_back();
      BasicFactor t2 = taus.back();
      taus.pop_back();
      auto r = peel(span({t1.generators[0], t2.generators[0]}), 2);
      ensure(r.size() == 1 && r[0].kind == BasicFactor::Kind::Epsilon && r[0].m == 1,
             "rewrite: tau (x) tau did not give eps_2");
      eps.push_back(r[0]);
    }
    if (!taus.empty()) {
      int t = taus[0].generators[0];
      for (auto& e : eps) {
        int a = e.generators[0], b = e.generators[1];
        BasicFactor eta = pair_factor(a, g_.mul(b, t), 2);
        ensure(eta.kind == BasicFactor::Kind::Eta, "rewrite: eps (x) tau did not give eta");
        auto r = peel(complement(span({a, b, t}), eta.generators), 2);
        ensure(r.size() == 1 && r[0].kind == BasicFactor::Kind::Tau, "rewrite: lost the tau factor");
        t = r[0].generators[0];
        out.push_back(eta);
      }
      out.push_back({BasicFactor::Kind::Tau, 2, 1, {t}});
    } else if (!eps.empty()) {
      std::sort(eps.begin(), eps.end(), kind_less);
      BasicFactor keep = eps[0];
      for (std::size_t i = 1; i < eps.size(); ++i) {
        int a = keep.generators[0], b = keep.generators[1];
        int c = eps[i].generators[0], d = eps[i].generators[1];
        BasicFactor eta = pair_factor(c, g_.mul(d, b), 2);
        ensure(eta.kind == BasicFactor::Kind::Eta && eta.m == eps[i].m,
               "rewrite: eps (x) eps did not give eta");
        auto r = peel(complement(span({a, b, c, d}), eta.generators), 2);
        ensure(r.size() == 1 && r[0].kind == BasicFactor::Kind::Epsilon && r[0].m == keep.m,
               "rewrite: lost the eps factor");
        keep = r[0];
        out.push_back(eta);
      }
      out.push_back(keep);
    }
    return out;
  }

 private:
  const Bicharacter& t_;
  const FiniteGroup& g_;
};

// Checks that the witnesses map the model isometrically onto theta.
void check_recomposition(const Bicharacter& t, const std::vector<BasicFactor>& factors) {
  const FiniteGroup& g = *t.group();
  Bicharacter model = recompose(factors);
  const FiniteGroup& mg = *model.group();
  ensure(mg.order() == g.order(), "recomposition: orders differ");
  std::vector<int> gens;
  for (const auto& f : factors) gens.insert(gens.end(), f.generators.begin(), f.generators.end());
  std::vector<int> phi(mg.order());
  std::vector<char> hit(g.order(), 0);
  for (int x = 0; x < mg.order(); ++x) {
    std::vector<int> r = mg.residues(x);
    int y = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) y = g.mul(y, g.power(gens[i], r[i]));
    ensure(!hit[y], "recomposition: witnesses are not independent");
    hit[y] = 1;
    phi[x] = y;
  }
  for (int x = 0; x < mg.order(); ++x)
    for (int y = 0; y < mg.order(); ++y)
      ensure(model(x, y) == t(phi[x], phi[y]), "recomposition: values differ");
}

}  // namespace

CanonicalForm canonical_decomposition(const Bicharacter& theta) {
  require(theta.is_nondegenerate(), "canonical decomposition: bicharacter is degenerate");
  const FiniteGroup& g = *theta.group();
  Decomposer d(theta);
  CanonicalForm cf;
  for (int p : prime_factors(g.order())) {
    std::vector<int> k;
    for (int x = 0; x < g.order(); ++x) {
      int o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) k.push_back(x);
    }
    auto fs = d.peel(k, p);
    if (p == 2) fs = d.rewrite(fs);
    cf.factors.insert(cf.factors.end(), fs.begin(), fs.end());
  }
  std::stable_sort(cf.factors.begin(), cf.factors.end(), kind_less);
  ensure(cf.exceptional() <= 1, "canonical form has more than one tau or eps factor");
  check_recomposition(theta, cf.factors);
  return cf;
}

bool isomorphic_by_search(const Bicharacter& t1, const Bicharacter& t2) {
  const FiniteGroup& g1 = *t1.group();
  const FiniteGroup& g2 = *t2.group();
  if (g1.order() != g2.order() || invariant_factors(g1) != invariant_factors(g2)) return false;
  const AbelianBasis& b = t1.basis();
  const std::size_t r = b.generators.size();
  std::vector<int> img(r);
  std::function<bool(std::size_t, int)> search = [&](std::size_t i, int reached) -> bool {
    if (i == r) return reached == g2.order();
    for (int x = 0; x < g2.order(); ++x) {
      if (g2.element_order(x) != b.orders[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        int y = j == i ? x : img[j];
        ok = t2(x, y) == t1(b.generators[i], b.generators[j]) &&
             t2(y, x) == t1(b.generators[j], b.generators[i]);
      }
      if (!ok) continue;
      img[i] = x;
      std::vector<int> prefix(img.begin(), img.begin() + i + 1);
      int size = static_cast<int>(subgroup_generated(g2, prefix).size());
      if (size != reached * b.orders[i]) continue;
      if (search(i + 1, size)) return true;
    }
    return false;
  };
  return search(0, 1);
}

bool bicharacters_isomorphic(const Bicharacter& t1, const Bicharacter& t2, bool oracle) {
  if (t1.group()->order() != t2.group()->order() ||
      invariant_factors(*t1.group()) != invariant_factors(*t2.group()))
    return false;
  if (!oracle && t1.is_nondegenerate() && t2.is_nondegenerate())
    return canonical_decomposition(t1) == canonical_decomposition(t2);
  return isomorphic_by_search(t1, t2);
}

std::vector<GroupPtr> abelian_groups_up_to(int max_order) {
  std::vector<std::vector<int>> all{{}};
  // Chains n_1 | n_2 | ... built by appending multiples.
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& f, int prod) {
    int step = f.empty() ? 1 : f.back();
    for (int n = std::max(2, step); prod * n <= max_order; n += step) {
      f.push_back(n);
      all.push_back(f);
      grow(f, prod * n);
      f.pop_back();
    }
  };
  std::vector<int> f;
  grow(f, 1);
  auto order = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 1, std::multiplies<int>());
  };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    return std::pair(order(a), a) < std::pair(order(b), b);
  });
  std::vector<GroupPtr> out;
  for (const auto& v : all) out.push_back(FiniteGroup::abelian(v));
  return out;
}

std::vector<Bicharacter> enumerate_skew_bicharacters(const GroupPtr& g, bool alternating) {
  const AbelianBasis& b = abelian_basis(*g);
  const int r = static_cast<int>(b.orders.size());
  const int order = alternating ? std::max(1, g->exponent()) : lcm_int(g->exponent(), 2);
  // Free slots: the upper triangle and, unless alternating, the diagonal.
  struct Slot {
    int i, j, step, count;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      if (i == j) {
        if (!alternating && b.orders[i] % 2 == 0) slots.push_back({i, i, order / 2, 2});
      } else {
        int d = std::gcd(b.orders[i], b.orders[j]);
        slots.push_back({i, j, order / d, d});
      }
    }
  std::vector<Bicharacter> out;
  std::vector<int> pos(slots.size(), 0);
  while (true) {
    std::vector<std::vector<int>> table(r, std::vector<int>(r, 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      int e = pos[s] * slots[s].step;
      table[slots[s].i][slots[s].j] = e;
      if (slots[s].i != slots[s].j) table[slots[s].j][slots[s].i] = (order - e) % order;
    }
    out.emplace_back(g, order, table);
    std::size_t t = 0;
    while (t < slots.size() && ++pos[t] == slots[t].count) pos[t++] = 0;
    if (t == slots.size()) break;
  }
  return out;
}

std::string PiClassReport::to_string() const {
  switch (type) {
    case 1:
      return "M_" + std::to_string(param) + "(F)";
    case 2:
      return "M_{" + std::to_string(2 * param) + "," + std::to_string(param) + "}(E)";
    case 3:
      return "M_" + std::to_string(param) + "(E)";
  }
  return pi_class;
}

PiClassReport pi_class_and_exponent(const CommutationFunction& theta) {
  Nondegeneracy nd = is_nondegenerate(theta);
  require(nd.nondegenerate, "pi class: commutation function is degenerate");
  const int n = theta.group()->order();
  TypeReport tr = algebra_type(make_algebra(theta.cocycle()), theta.kernel());
  PiClassReport rep;
  rep.exp = n;
  rep.type = static_cast<int>(tr.type);
  rep.param = tr.param;
  switch (tr.type) {
    case AlgebraType::Type1:
      rep.pi_class = "M_n(F)";
      ensure(tr.param * tr.param == n, "type 1 requires n^2 = |G|");
      break;
    case AlgebraType::Type2:
      rep.pi_class = "M_{2m,m}(E)";
      ensure(4 * tr.param * tr.param == n, "type 2 requires (2m)^2 = |G|");
      break;
    case AlgebraType::Type3:
      rep.pi_class = "M_n(E)";
      ensure(2 * tr.param * tr.param == n, "type 3 requires 2n^2 = |G|");
      break;
  }
  return rep;
}

}  // namespace regrade
