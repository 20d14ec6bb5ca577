#include "regrade/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

std::vector<int> primes_of(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_power_of(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

int index_in(const Subgroup& s, int x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) return -1;
  return static_cast<int>(it - s.begin());
}

// Basis of the p-primary part: backtracking over elements of large order,
// each new generator meeting the span of the previous ones trivially.
std::vector<int> primary_generators(const FiniteGroup& g, int p) {
  std::vector<int> part;
  for (int x = 0; x < g.order(); ++x)
    if (is_power_of(g.element_order(x), p)) part.push_back(x);
  std::vector<int> cand(part.begin() + 1, part.end());
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::function<bool(const Subgroup&)> search = [&](const Subgroup& span) -> bool {
    if (span.size() == part.size()) return true;
    int bound = gens.empty() ? 1 << 30 : g.element_order(gens.back());
    for (int c : cand) {
      if (g.element_order(c) > bound) continue;
      // <c> meets span trivially iff c^k in span only for k = 0 mod ord(c)
      bool ok = true;
      for (int k = 1, y = c; k < g.element_order(c); ++k, y = g.mul(y, c))
        if (index_in(span, y) >= 0) { ok = false; break; }
      if (!ok) continue;
      gens.push_back(c);
      std::vector<int> all(span);
      all.push_back(c);
      if (search(subgroup_generated(g, all))) return true;
      gens.pop_back();
    }
    return false;
  };
  ensure(search(Subgroup{0}), "no basis for the primary component");
  return gens;
}

std::string abelian_label(const std::vector<int>& r) {
  if (r.empty()) return "e";
  if (r.size() == 1) return std::to_string(r[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  elt_order_.assign(n_, 0);
  abelian_ = true;
  for (int g = 0; g < n_; ++g)
    for (int h = 0; h < n_; ++h) {
      if (mul(g, h) == 0) inv_[g] = h;
      if (mul(g, h) != mul(h, g)) abelian_ = false;
    }
  exponent_ = 1;
  for (int g = 0; g < n_; ++g) {
    int k = 1;
    for (int x = g; x != 0; x = mul(x, g)) ++k;
    elt_order_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

GroupPtr FiniteGroup::abelian(std::vector<int> moduli) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->kind_ = Kind::Abelian;
  int n = 1;
  for (int m : moduli) {
    require(m >= 1, "abelian modulus must be positive");
    n *= m;
    require(n <= 4096, "group too large");
  }
  g->n_ = n;
  g->moduli_ = moduli;
  g->name_ = "Z";
  if (moduli.empty()) g->name_ = "1";
  else {
    g->name_.clear();
    for (std::size_t i = 0; i < moduli.size(); ++i)
      g->name_ += (i ? "xZ" : "Z") + std::to_string(moduli[i]);
  }
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto ra = g->residues(a);
    for (int b = 0; b < n; ++b) {
      auto rb = g->residues(b);
      for (std::size_t i = 0; i < ra.size(); ++i) rb[i] = (ra[i] + rb[i]) % moduli[i];
      g->table_[a * n + b] = g->from_residues(rb);
    }
  }
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  require(n >= 1, "empty Cayley table");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->kind_ = Kind::Table;
  g->n_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    require(static_cast<int>(table[a].size()) == n, "Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      int c = table[a][b];
      require(c >= 0 && c < n, "Cayley table entry out of range");
      require(!seen[c], "Cayley table row " + std::to_string(a) + " is not a permutation");
      seen[c] = true;
      g->table_[a * n + b] = c;
    }
  }
  for (int a = 0; a < n; ++a)
    require(table[0][a] == a && table[a][0] == a, "index 0 must be the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)),
                "Cayley table is not associative");
  if (!labels.empty()) {
    require(static_cast<int>(labels.size()) == n, "label count mismatch");
    g->labels_ = std::move(labels);
  }
  g->name_ = "G" + std::to_string(n);
  g->finish();
  return g;
}

GroupPtr FiniteGroup::dihedral8() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          int x = ((a + (b ? 3 * c : c)) % 4);
          t[a + 4 * b][c + 4 * d] = x + 4 * ((b + d) % 2);
        }
  std::vector<std::string> l = {"e", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"};
  auto g = from_table(t, l);
  std::const_pointer_cast<FiniteGroup>(g)->name_ = "D8";
  return g;
}

GroupPtr FiniteGroup::quaternion16() {
  // v u^c = u^{3c} v, v^2 = u^4.
  std::vector<std::vector<int>> t(16, std::vector<int>(16));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 2; ++d) {
          int e = a + (b ? 3 * c : c);
          int f = b + d;
          if (f == 2) {
            e += 4;
            f = 0;
          }
          t[a + 8 * b][c + 8 * d] = (e % 8) + 8 * f;
        }
  std::vector<std::string> l;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 8; ++a) {
      std::string s;
      if (a == 1) s = "u";
      else if (a > 1) s = "u^" + std::to_string(a);
      if (b) s += "v";
      l.push_back(s.empty() ? "e" : s);
    }
  auto g = from_table(t, l);
  std::const_pointer_cast<FiniteGroup>(g)->name_ = "Q16";
  return g;
}

GroupPtr FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  std::vector<std::string> l = {"e", "(012)", "(021)", "(01)", "(12)", "(02)"};
  auto g = from_table(t, l);
  std::const_pointer_cast<FiniteGroup>(g)->name_ = "S3";
  return g;
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
  if (a->kind() == Kind::Abelian && b->kind() == Kind::Abelian) {
    auto m = a->moduli();
    m.insert(m.end(), b->moduli().begin(), b->moduli().end());
    return abelian(m);
  }
  int na = a->order(), nb = b->order();
  require(na * nb <= 256, "direct product too large");
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> l(na * nb);
  for (int x = 0; x < na * nb; ++x) {
    l[x] = "(" + a->label(x % na) + "," + b->label(x / na) + ")";
    for (int y = 0; y < na * nb; ++y)
      t[x][y] = a->mul(x % na, y % na) + na * b->mul(x / na, y / na);
  }
  auto g = from_table(t, l);
  std::const_pointer_cast<FiniteGroup>(g)->name_ = a->name() + "x" + b->name();
  return g;
}

GroupPtr FiniteGroup::builtin(const std::string& name) {
  if (name == "d8") return dihedral8();
  if (name == "q16") return quaternion16();
  if (name == "s3") return symmetric3();
  if (name == "klein") return klein();
  if (name == "trivial") return trivial();
  if (name.size() > 1 && name[0] == 'z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(c); })) {
    int n = std::stoi(name.substr(1));
    require(n >= 1 && n <= 4096, "cyclic group order out of range");
    return cyclic(n);
  }
  throw ValidationError("unknown group name '" + name + "'");
}

int FiniteGroup::power(int g, long long k) const {
  int m = elt_order_[g];
  k %= m;
  if (k < 0) k += m;
  int x = 0;
  for (long long i = 0; i < k; ++i) x = mul(x, g);
  return x;
}

int FiniteGroup::product(const std::vector<int>& word) const {
  int x = 0;
  for (int g : word) {
    check_element(g);
    x = mul(x, g);
  }
  return x;
}

std::vector<int> FiniteGroup::residues(int g) const {
  require(kind_ == Kind::Abelian, "residues: not an abelian presentation");
  std::vector<int> r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = g % moduli_[i];
    g /= moduli_[i];
  }
  return r;
}

int FiniteGroup::from_residues(const std::vector<int>& r) const {
  require(kind_ == Kind::Abelian && r.size() == moduli_.size(), "residue vector mismatch");
  int g = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    int a = ((r[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    g = g * moduli_[i] + a;
  }
  return g;
}

std::string FiniteGroup::label(int g) const {
  check_element(g);
  if (!labels_.empty()) return labels_[g];
  if (kind_ == Kind::Abelian) return abelian_label(residues(g));
  return g == 0 ? "e" : "g" + std::to_string(g);
}

void FiniteGroup::check_element(int g) const {
  if (g < 0 || g >= n_)
    throw ValidationError("element " + std::to_string(g) + " does not belong to group of order " +
                          std::to_string(n_));
}

Subgroup centralizer(const FiniteGroup& g, int x) {
  g.check_element(x);
  Subgroup s;
  for (int h = 0; h < g.order(); ++h)
    if (g.commute(x, h)) s.push_back(h);
  return s;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  for (int h = 0; h < g.order(); ++h) {
    bool c = true;
    for (int k = 0; k < g.order() && c; ++k) c = g.commute(h, k);
    if (c) s.push_back(h);
  }
  return s;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int t = 0; t < g.order(); ++t) cls.insert(g.conjugate(t, x));
    for (int y : cls) seen[y] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty() || s[0] != 0 || !std::is_sorted(s.begin(), s.end())) return false;
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (int x : s) {
    if (x < 0 || x >= g.order()) return false;
    for (int y : s)
      if (index_in(s, g.mul(x, y)) < 0) return false;
  }
  return true;
}

std::vector<int> coset_reps(const FiniteGroup& g, const Subgroup& s) {
  require(is_subgroup(g, s), "coset_reps: not a subgroup");
  std::vector<bool> seen(g.order(), false);
  std::vector<int> reps;
  for (int t = 0; t < g.order(); ++t) {
    if (seen[t]) continue;
    reps.push_back(t);
    for (int x : s) seen[g.mul(t, x)] = true;
  }
  return reps;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems = {0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int x : gens) {
      g.check_element(x);
      int y = g.mul(elems[i], x);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Subgroup> index2_subgroups(const FiniteGroup& g) {
  // Index-2 subgroups are kernels of homomorphisms onto C2; such a kernel
  // contains all squares, so enumerate sign assignments on a generating set.
  std::set<Subgroup> found;
  if (g.order() % 2) return {};
  // Kernel candidates: every index-2 subgroup is generated by its elements;
  // test each subset closure cheaply by sign-homomorphism search.
  std::vector<int> gens;
  Subgroup span{0};
  for (int x = 1; x < g.order() && span.size() < static_cast<std::size_t>(g.order()); ++x)
    if (index_in(span, x) < 0) {
      gens.push_back(x);
      span = subgroup_generated(g, gens);
    }
  int k = static_cast<int>(gens.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    // Propagate signs through a BFS over words in the generators.
    std::vector<int> sign(g.order(), 0);
    sign[0] = 1;
    std::vector<int> queue = {0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        int y = g.mul(queue[i], gens[j]);
        int s = sign[queue[i]] * ((mask >> j) & 1 ? -1 : 1);
        if (sign[y] == 0) {
          sign[y] = s;
          queue.push_back(y);
        } else if (sign[y] != s) {
          ok = false;
        }
      }
    if (!ok) continue;
    for (int a = 0; a < g.order() && ok; ++a)
      for (int b = 0; b < g.order() && ok; ++b) ok = sign[g.mul(a, b)] == sign[a] * sign[b];
    if (!ok) continue;
    Subgroup ker;
    for (int a = 0; a < g.order(); ++a)
      if (sign[a] == 1) ker.push_back(a);
    found.insert(ker);
  }
  return {found.begin(), found.end()};
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s(g.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  require(is_subgroup(g, s), "subgroup_as_group: not a subgroup");
  int n = static_cast<int>(s.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) {
    l[i] = g.label(s[i]);
    for (int j = 0; j < n; ++j) t[i][j] = index_in(s, g.mul(s[i], s[j]));
  }
  return FiniteGroup::from_table(t, l);
}

Quotient abelian_quotient(const FiniteGroup& g, const Subgroup& s) {
  require(g.is_abelian(), "abelian_quotient: group is not abelian");
  Quotient q;
  q.reps = coset_reps(g, s);
  q.projection.assign(g.order(), -1);
  for (std::size_t i = 0; i < q.reps.size(); ++i)
    for (int x : s) q.projection[g.mul(q.reps[i], x)] = static_cast<int>(i);
  int n = static_cast<int>(q.reps.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) {
    l[i] = g.label(q.reps[i]);
    for (int j = 0; j < n; ++j) t[i][j] = q.projection[g.mul(q.reps[i], q.reps[j])];
  }
  q.group = FiniteGroup::from_table(t, l);
  return q;
}

int AbelianBasis::element(const std::vector<int>& c, const FiniteGroup& g) const {
  int x = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) x = g.mul(x, g.power(generators[i], c[i]));
  return x;
}

AbelianBasis abelian_basis(const FiniteGroup& g) {
  require(g.is_abelian(), "abelian_basis: group is not abelian");
  AbelianBasis b;
  if (g.kind() == FiniteGroup::Kind::Abelian) {
    for (std::size_t i = 0; i < g.moduli().size(); ++i) {
      if (g.moduli()[i] == 1) continue;
      std::vector<int> r(g.moduli().size(), 0);
      r[i] = 1;
      b.generators.push_back(g.from_residues(r));
      b.orders.push_back(g.moduli()[i]);
    }
  } else {
    for (int p : primes_of(g.order()))
      for (int x : primary_generators(g, p)) {
        b.generators.push_back(x);
        b.orders.push_back(g.element_order(x));
      }
  }
  b.coords.assign(g.order(), {});
  std::vector<int> c(b.generators.size(), 0);
  int count = 0;
  while (true) {
    int x = b.element(c, g);
    ensure(b.coords[x].empty() || b.generators.empty(), "abelian basis is not independent");
    b.coords[x] = c;
    ++count;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == b.orders[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  ensure(count == g.order(), "abelian basis does not span");
  return b;
}

std::vector<int> invariant_factors(const FiniteGroup& g) {
  require(g.is_abelian(), "invariant_factors: group is not abelian");
  std::vector<std::vector<int>> per_prime;
  std::size_t len = 0;
  for (int p : primes_of(g.order())) {
    std::vector<int> o;
    for (int x : primary_generators(g, p)) o.push_back(g.element_order(x));
    std::sort(o.rbegin(), o.rend());
    len = std::max(len, o.size());
    per_prime.push_back(o);
  }
  std::vector<int> f(len, 1);
  for (const auto& o : per_prime)
    for (std::size_t i = 0; i < o.size(); ++i) f[i] *= o[i];
  std::reverse(f.begin(), f.end());
  return f;
}

}  // namespace regrade
