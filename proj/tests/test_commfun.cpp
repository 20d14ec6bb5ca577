#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "regrade/commfun.hpp"
#include "regrade/errors.hpp"

using namespace regrade;

namespace {

Bicharacter eta2() { return Bicharacter(FiniteGroup::klein(), 2, {{0, 1}, {1, 0}}); }
Bicharacter symbol(int n) { return Bicharacter(FiniteGroup::abelian({n, n}), n, {{0, n - 1}, {1, 0}}); }

CommutationFunction d8_envelope() {
  std::vector<int> psi(8);
  for (int g = 0; g < 8; ++g) psi[g] = (g % 4) % 2 ? -1 : 1;
  return CommutationFunction(d8_q16_cocycle(), psi);
}

std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<int> r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
  return r;
}

std::vector<int> permuted(const std::vector<int>& w, const std::vector<int>& s) {
  std::vector<int> r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[s[i]];
  return r;
}

}  // namespace

TEST_CASE("grassmann sign") {
  std::vector<int> par = {1, 1};
  std::vector<int> swap = {1, 0};
  CHECK(grassmann_sign(par, swap) == -1);
  std::vector<int> par2 = {1, 0, 1};
  std::vector<int> cyc = {2, 0, 1};
  CHECK(grassmann_sign(par2, cyc) == -1);
  std::vector<int> even = {0, 0, 0};
  CHECK(grassmann_sign(even, cyc) == 1);
}

TEST_CASE("theta_sigma basics") {
  CommutationFunction s = CommutationFunction::from_bicharacter(symbol(3));
  std::vector<int> w = {1, 3};  // (1,0), (0,1)
  std::vector<int> id = {0, 1}, sw = {1, 0};
  CHECK(s.theta(w, id).is_one());
  // zeta^{i2 j1 - i1 j2} with (i1,j1) = (1,0), (i2,j2) = (0,1)
  CHECK(s.theta(w, sw) == RootOfUnity(3, -1));
  auto d = d8_envelope();
  std::vector<int> xy = {1, 4};
  CHECK_THROWS_AS(d.theta(xy, sw), ValidationError);
  std::vector<int> bad = {0, 0};
  CHECK_THROWS_AS(d.theta(xy, bad), ValidationError);
  CommutationFunction tau = CommutationFunction::grassmann();
  CHECK(tau.pair(1, 1) == RootOfUnity::minus_one());
  CHECK(tau.pair(0, 1).is_one());
}

TEST_CASE("psi and kernel") {
  auto s = psi_and_kernel(CommutationFunction::from_bicharacter(symbol(3)));
  CHECK(s.kernel.size() == 9);
  auto t = psi_and_kernel(CommutationFunction::grassmann());
  CHECK(t.psi == std::vector<int>{1, -1});
  CHECK(t.kernel == Subgroup{0});
  auto d = psi_and_kernel(d8_envelope());
  CHECK(d.kernel == d8_klein_subgroup());
  CHECK_THROWS_AS(CommutationFunction(Cocycle::trivial(FiniteGroup::cyclic(3)), {1, -1, -1}),
                  ValidationError);
}

TEST_CASE("nondegeneracy") {
  auto triv = is_nondegenerate(CommutationFunction::trivial(FiniteGroup::cyclic(3)));
  CHECK_FALSE(triv.nondegenerate);
  CHECK(triv.witness == 1);
  for (int n = 2; n <= 5; ++n)
    CHECK(is_nondegenerate(CommutationFunction::from_bicharacter(symbol(n))).nondegenerate);
  CHECK(is_nondegenerate(d8_envelope()).nondegenerate);
  CHECK(is_nondegenerate(CommutationFunction::grassmann()).nondegenerate);
  // The twisted algebra of d8q16 alone (psi = 1) is degenerate: x commutes
  // with its centralizer <x>.
  CHECK_FALSE(is_nondegenerate(CommutationFunction(d8_q16_cocycle(), std::vector<int>(8, 1))).nondegenerate);
}

TEST_CASE("realization reproduces bicharacters") {
  Bicharacter eps(FiniteGroup::klein(), 2, {{0, 1}, {1, 1}});
  CommutationFunction t = CommutationFunction::from_bicharacter(eps);
  CHECK(t.kernel() == Subgroup{0, 1});
  CHECK(as_bicharacter(t).same_values(eps));
  Bicharacter z4(FiniteGroup::abelian({4, 4}), 4, {{0, 1}, {3, 2}});
  CHECK(as_bicharacter(CommutationFunction::from_bicharacter(z4)).same_values(z4));
}

TEST_CASE("radical and minimalization") {
  auto triv = radical_and_minimalize(Bicharacter::trivial(FiniteGroup::cyclic(6)));
  CHECK(triv.radical.size() == 6);
  CHECK(triv.theta.group()->order() == 1);
  Bicharacter e = tensor(eta2(), Bicharacter::trivial(FiniteGroup::cyclic(3)));
  auto m = radical_and_minimalize(e);
  CHECK(m.radical == Subgroup{0, 4, 8});
  CHECK(m.theta.group()->order() == 4);
  CHECK(m.theta.is_nondegenerate());
  auto s = radical_and_minimalize(symbol(3));
  CHECK(s.radical == Subgroup{0});
}

TEST_CASE("compositions") {
  CommutationFunction tau = CommutationFunction::grassmann();
  CommutationFunction tt = tensor(tau, tau);
  CHECK(tt.kernel() == Subgroup{0, 3});
  Bicharacter b = as_bicharacter(tt);
  CHECK(b(1, 1) == RootOfUnity::minus_one());
  CHECK(b(1, 2).is_one());

  // theta^{|G|} is trivial
  for (auto t : {CommutationFunction::from_bicharacter(symbol(3)), d8_envelope(), tau}) {
    int n = t.group()->order();
    CommutationFunction p = hat_product(t, hat_power(t, n - 1));
    CHECK(same_commutation(p, CommutationFunction::trivial(t.group())));
  }

  Bicharacter r = restrict_to(symbol(4), subgroup_generated(*symbol(4).group(), {2, 8}));
  CHECK(r.group()->order() == 4);
  // zeta_4^{+-4} = 1: the 2-torsion of the Z4 x Z4 symbol form is isotropic.
  CHECK(r.degeneracy_witness() == 1);
  CHECK(radical_and_minimalize(r).radical.size() == 4);
  // <(1,0),(0,2)> pairs to -1.
  Bicharacter r2 = restrict_to(symbol(4), subgroup_generated(*symbol(4).group(), {1, 8}));
  CHECK(r2.group()->order() == 8);
  CHECK(r2(1, 4) == RootOfUnity::minus_one());  // positions of (1,0) and (0,2)

  CHECK_NOTHROW(direct_sum(tau, tau));
  CHECK_THROWS_AS(direct_sum(tau, CommutationFunction::trivial(FiniteGroup::cyclic(2))), ValidationError);
  CHECK_THROWS_AS(hat_product(tau, d8_envelope()), ValidationError);
}

TEST_CASE("tensor and hat products compose theta on words") {
  std::mt19937 rng(5);
  CommutationFunction d = d8_envelope();
  CommutationFunction tau = CommutationFunction::grassmann();
  CommutationFunction eps = CommutationFunction::from_bicharacter(
      Bicharacter(FiniteGroup::klein(), 2, {{0, 1}, {1, 1}}));
  struct Case {
    CommutationFunction a, b;
  };
  for (auto [a, b] : {Case{d, tau}, Case{tau, d}, Case{eps, d}}) {
    CommutationFunction ab = tensor(a, b);
    int na = a.group()->order(), nab = ab.group()->order();
    int hits = 0;
    for (int trial = 0; trial < 3000 && hits < 300; ++trial) {
      int len = 2 + rng() % 3;
      std::vector<int> w(len), s(len);
      for (auto& x : w) x = rng() % nab;
      std::iota(s.begin(), s.end(), 0);
      std::shuffle(s.begin(), s.end(), rng);
      std::vector<int> wa(len), wb(len);
      for (int i = 0; i < len; ++i) {
        wa[i] = w[i] % na;
        wb[i] = w[i] / na;
      }
      const FiniteGroup& ga = *a.group();
      const FiniteGroup& gb = *b.group();
      if (ga.product(wa) != ga.product(permuted(wa, s))) continue;
      if (gb.product(wb) != gb.product(permuted(wb, s))) continue;
      ++hits;
      CHECK(ab.theta(w, s) == a.theta(wa, s) * b.theta(wb, s));
    }
    CHECK(hits > 50);
  }
  CommutationFunction dd = hat_product(d, d8_envelope());
  for (int trial = 0, hits = 0; trial < 3000 && hits < 300; ++trial) {
    int len = 2 + rng() % 3;
    std::vector<int> w(len), s(len);
    for (auto& x : w) x = rng() % 8;
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    if (d.group()->product(w) != d.group()->product(permuted(w, s))) continue;
    ++hits;
    CHECK(dd.theta(w, s) == d.theta(w, s) * d.theta(w, s));
  }
}

TEST_CASE("commutation function axioms, randomized") {
  std::mt19937 rng(17);
  std::vector<CommutationFunction> fs = {
      d8_envelope(), CommutationFunction::from_bicharacter(symbol(4)),
      tensor(CommutationFunction::grassmann(), CommutationFunction::from_bicharacter(eta2())),
      CommutationFunction(d8_q16_cocycle(), std::vector<int>(8, 1))};
  int checked = 0;
  for (const auto& t : fs) {
    const FiniteGroup& g = *t.group();
    int n = g.order();
    for (int trial = 0; trial < 4000; ++trial) {
      int len = 2 + rng() % 4;
      std::vector<int> w(len), s(len), u(len);
      for (auto& x : w) x = rng() % n;
      std::iota(s.begin(), s.end(), 0);
      std::iota(u.begin(), u.end(), 0);
      std::shuffle(s.begin(), s.end(), rng);
      std::shuffle(u.begin(), u.end(), rng);
      int p = g.product(w);
      std::vector<int> id(len);
      std::iota(id.begin(), id.end(), 0);
      CHECK(t.theta(w, id).is_one());
      if (g.product(permuted(w, s)) != p) continue;
      // (3) composition
      if (g.product(permuted(w, compose(s, u))) == p) {
        CHECK(t.theta(w, s) * t.theta(permuted(w, s), u) == t.theta(w, compose(s, u)));
        ++checked;
      }
      // (1) a permutation fixing a prefix and suffix
      int i = rng() % len, j = i + rng() % (len - i);
      std::vector<int> inner(s.begin(), s.begin() + (j - i + 1));
      std::vector<int> sub(inner.size());
      std::iota(sub.begin(), sub.end(), 0);
      std::shuffle(sub.begin(), sub.end(), rng);
      std::vector<int> big(len);
      std::iota(big.begin(), big.end(), 0);
      for (int k = i; k <= j; ++k) big[k] = i + sub[k - i];
      std::vector<int> block(w.begin() + i, w.begin() + j + 1);
      if (g.product(permuted(block, sub)) == g.product(block)) {
        CHECK(t.theta(w, big) == t.theta(block, sub));
        ++checked;
      }
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("block substitution and e-blocks") {
  std::mt19937 rng(23);
  std::vector<CommutationFunction> fs = {d8_envelope(), CommutationFunction::from_bicharacter(symbol(3))};
  int checked = 0;
  for (const auto& t : fs) {
    const FiniteGroup& g = *t.group();
    int n = g.order();
    for (int trial = 0; trial < 3000; ++trial) {
      // h = (h_1, h_2, h_3) refined into blocks of size 1 or 2
      int k = 2 + rng() % 2;
      std::vector<std::vector<int>> blocks(k);
      std::vector<int> h(k);
      for (int b = 0; b < k; ++b) {
        int sz = 1 + rng() % 2;
        for (int i = 0; i < sz; ++i) blocks[b].push_back(rng() % n);
        h[b] = g.product(blocks[b]);
      }
      std::vector<int> s(k);
      std::iota(s.begin(), s.end(), 0);
      std::shuffle(s.begin(), s.end(), rng);
      if (g.product(permuted(h, s)) != g.product(h)) continue;
      std::vector<int> flat, start;
      for (auto& b : blocks) {
        start.push_back(static_cast<int>(flat.size()));
        flat.insert(flat.end(), b.begin(), b.end());
      }
      std::vector<int> big;
      for (int b : s)
        for (std::size_t i = 0; i < blocks[b].size(); ++i) big.push_back(start[b] + static_cast<int>(i));
      CHECK(t.theta(h, s) == t.theta(flat, big));
      ++checked;
      // a rigid block with product e moves freely
      std::vector<int> eb = {static_cast<int>(rng() % n)};
      eb.push_back(g.inverse(eb[0]));
      std::vector<int> w = {static_cast<int>(rng() % n), eb[0], eb[1]};
      std::vector<int> mv = {1, 2, 0};
      CHECK(t.theta(w, mv).is_one());
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("derived identities on pairs") {
  for (auto t : {d8_envelope(), CommutationFunction::from_bicharacter(symbol(4))}) {
    const FiniteGroup& g = *t.group();
    for (int a = 0; a < g.order(); ++a) {
      CHECK(t.pair(0, a).is_one());
      CHECK(t.pair(a, 0).is_one());
      Subgroup c = centralizer(g, a);
      for (int b : c) {
        CHECK((t.pair(a, b) * t.pair(b, a)).is_one());
        for (int b2 : c) {
          CHECK(t.pair(a, g.mul(b, b2)) == t.pair(a, b) * t.pair(a, b2));
          CHECK(t.pair(g.mul(b, b2), a) == t.pair(b, a) * t.pair(b2, a));
        }
      }
    }
  }
}
