#include "regrade/commfun.hpp"

#include <algorithm>
#include <numeric>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

std::vector<int> psi_bits(const CommutationFunction& t) {
  std::vector<int> b(t.psi().size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = t.psi()[i] == -1 ? 1 : 0;
  return b;
}

Cocycle sign_cocycle(GroupPtr g, const std::function<int(int, int)>& bit) {
  int n = g->order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = bit(x, y);
  return Cocycle(std::move(g), 2, std::move(t));
}

}  // namespace

CommutationFunction::CommutationFunction(Cocycle cocycle, std::vector<int> psi)
    : cocycle_(std::move(cocycle)), psi_(std::move(psi)) {
  const FiniteGroup& g = *cocycle_.group();
  require(static_cast<int>(psi_.size()) == g.order(), "psi must have one sign per element");
  for (int s : psi_) require(s == 1 || s == -1, "psi values must be +1 or -1");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      require(psi_[g.mul(a, b)] == psi_[a] * psi_[b], "psi is not a homomorphism");
}

CommutationFunction CommutationFunction::from_bicharacter(const Bicharacter& theta) {
  const FiniteGroup& g = *theta.group();
  std::vector<int> psi(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int s = theta(x, x).as_sign();
    ensure(s != 0, "theta(g,g) is not a sign");
    psi[x] = s;
  }
  bool odd = std::any_of(psi.begin(), psi.end(), [](int s) { return s == -1; });
  Bicharacter eta = theta;
  if (odd) {
    int order = lcm_int(theta.order(), 2);
    eta = Bicharacter::from_function(theta.group(), order, [&](int x, int y) {
      RootOfUnity s = (psi[x] == -1 && psi[y] == -1) ? RootOfUnity::minus_one() : RootOfUnity::one();
      return theta(x, y) * s;
    });
  }
  CommutationFunction t(scheunert_cocycle(eta), std::move(psi));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      ensure(t.pair(x, y) == theta(x, y), "realized theta differs from the bicharacter");
  return t;
}

CommutationFunction CommutationFunction::grassmann() {
  return CommutationFunction(Cocycle::trivial(FiniteGroup::cyclic(2)), {1, -1});
}

CommutationFunction CommutationFunction::trivial(GroupPtr group) {
  std::vector<int> psi(group->order(), 1);
  return CommutationFunction(Cocycle::trivial(std::move(group)), std::move(psi));
}

bool CommutationFunction::psi_trivial() const {
  return std::all_of(psi_.begin(), psi_.end(), [](int s) { return s == 1; });
}

Subgroup CommutationFunction::kernel() const {
  Subgroup h;
  for (std::size_t i = 0; i < psi_.size(); ++i)
    if (psi_[i] == 1) h.push_back(static_cast<int>(i));
  return h;
}

int CommutationFunction::value_order() const {
  return psi_trivial() ? cocycle_.order() : lcm_int(cocycle_.order(), 2);
}

int grassmann_sign(std::span<const int> parities, std::span<const int> perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && parities[perm[i]] && parities[perm[j]]) ++inv;
  return inv % 2 ? -1 : 1;
}

RootOfUnity CommutationFunction::theta(std::span<const int> word,
                                       std::span<const int> perm) const {
  std::size_t n = word.size();
  require(!word.empty(), "theta: empty word");
  require(perm.size() == n, "theta: permutation length differs from word length");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    require(p >= 0 && static_cast<std::size_t>(p) < n && !seen[p], "theta: not a permutation");
    seen[p] = 1;
  }
  std::vector<int> permuted(n), parity(n);
  for (std::size_t i = 0; i < n; ++i) {
    permuted[i] = word[perm[i]];
    group()->check_element(word[i]);
    parity[i] = psi_[word[i]] == -1;
  }
  WordScalar a = word_scalar(cocycle_, word);
  WordScalar b = word_scalar(cocycle_, permuted);
  if (a.product != b.product) throw ValidationError("theta: products differ");
  RootOfUnity r = change_order(a.scalar / b.scalar, value_order());
  if (grassmann_sign(parity, perm) == -1) r = r * RootOfUnity::minus_one();
  return change_order(r, value_order());
}

RootOfUnity CommutationFunction::pair(int g, int h) const {
  int w[2] = {g, h};
  int p[2] = {1, 0};
  return theta(w, p);
}

PsiReport psi_and_kernel(const CommutationFunction& t) {
  const FiniteGroup& g = *t.group();
  PsiReport r;
  r.psi.resize(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int s = t.pair(x, x).as_sign();
    ensure(s != 0, "theta_{g,g} is not a sign");
    r.psi[x] = s;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      ensure(r.psi[g.mul(a, b)] == r.psi[a] * r.psi[b], "psi is not a homomorphism");
  for (int x = 0; x < g.order(); ++x)
    if (r.psi[x] == 1) r.kernel.push_back(x);
  ensure(2 * r.kernel.size() >= static_cast<std::size_t>(g.order()), "kernel of psi has index > 2");
  return r;
}

Nondegeneracy is_nondegenerate(const CommutationFunction& t) {
  const FiniteGroup& g = *t.group();
  Nondegeneracy r;
  r.partner.assign(g.order(), -1);
  for (int x = 1; x < g.order(); ++x) {
    for (int h : centralizer(g, x))
      if (!t.pair(x, h).is_one()) {
        r.partner[x] = h;
        break;
      }
    if (r.partner[x] < 0 && !r.witness) {
      r.witness = x;
      r.nondegenerate = false;
    }
  }
  return r;
}

Bicharacter as_bicharacter(const CommutationFunction& t) {
  require(t.group()->is_abelian(), "as_bicharacter: group is not abelian");
  return Bicharacter::from_function(t.group(), t.value_order(),
                                    [&](int x, int y) { return t.pair(x, y); });
}

CommutationFunction tensor(const CommutationFunction& a, const CommutationFunction& b) {
  Cocycle ab = tensor_cocycle(a.cocycle(), b.cocycle());
  GroupPtr g = ab.group();
  int na = a.group()->order();
  auto ba = psi_bits(a), bb = psi_bits(b);
  // Koszul correction: moving the B-part of the first factor past the
  // A-part of the second.
  Cocycle koszul = sign_cocycle(g, [&](int x, int y) { return bb[x / na] & ba[y % na]; });
  std::vector<int> psi(g->order());
  for (int x = 0; x < g->order(); ++x) psi[x] = a.psi(x % na) * b.psi(x / na);
  return CommutationFunction(pointwise_product(ab, koszul), std::move(psi));
}

CommutationFunction restrict_to(const CommutationFunction& t, const Subgroup& s) {
  Cocycle c = restrict_cocycle(t.cocycle(), s);
  std::vector<int> psi(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) psi[i] = t.psi(s[i]);
  return CommutationFunction(std::move(c), std::move(psi));
}

CommutationFunction hat_product(const CommutationFunction& a, const CommutationFunction& b) {
  require(same_group(*a.group(), *b.group()), "hat product requires a common group");
  auto ba = psi_bits(a), bb = psi_bits(b);
  Cocycle koszul = sign_cocycle(a.group(), [&](int x, int y) { return bb[x] & ba[y]; });
  std::vector<int> psi(a.psi().size());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = a.psi()[i] * b.psi()[i];
  Cocycle c = pointwise_product(pointwise_product(a.cocycle(), b.cocycle()), koszul);
  return CommutationFunction(std::move(c), std::move(psi));
}

CommutationFunction hat_power(const CommutationFunction& t, int k) {
  require(k >= 0, "hat_power: negative exponent");
  CommutationFunction r = CommutationFunction::trivial(t.group());
  for (int i = 0; i < k; ++i) r = hat_product(r, t);
  return r;
}

CommutationFunction direct_sum(const CommutationFunction& a, const CommutationFunction& b) {
  require(same_commutation(a, b), "direct sum requires equal commutation functions");
  return a;
}

bool same_commutation(const CommutationFunction& a, const CommutationFunction& b, int max_len) {
  if (!same_group(*a.group(), *b.group())) return false;
  if (a.psi() != b.psi()) return false;
  const FiniteGroup& g = *a.group();
  int n = g.order();
  for (int len = 2; len <= max_len; ++len) {
    std::vector<int> word(len, 0);
    std::vector<int> perm(len);
    while (true) {
      std::iota(perm.begin(), perm.end(), 0);
      int prod = g.product(word);
      do {
        std::vector<int> w2(len);
        for (int i = 0; i < len; ++i) w2[i] = word[perm[i]];
        if (g.product(w2) != prod) continue;
        if (!(a.theta(word, perm) == b.theta(word, perm))) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      int i = 0;
      while (i < len && ++word[i] == n) word[i++] = 0;
      if (i == len) break;
    }
  }
  return true;
}

}  // namespace regrade
