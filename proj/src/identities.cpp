#include "regrade/identities.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "regrade/errors.hpp"

namespace regrade {

MultilinearPolynomial::MultilinearPolynomial(GroupPtr group, std::vector<int> signature, int order)
    : group_(std::move(group)), signature_(std::move(signature)), order_(order) {
  require(order_ >= 1, "polynomial: order must be positive");
  require(!signature_.empty(), "polynomial: empty signature");
  for (int g : signature_) group_->check_element(g);
}

void MultilinearPolynomial::add_term(const std::vector<int>& perm, const CycNumber& c0) {
  const int n = degree();
  require(static_cast<int>(perm.size()) == n, "polynomial: permutation has the wrong length");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) require(sorted[i] == i, "polynomial: not a permutation");
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = signature_[perm[i]];
  require(group_->product(word) == group_->product(signature_),
          "polynomial: permutation is not in Sym(g)");
  if (order_ % c0.order() != 0) *this = lifted(lcm_int(order_, c0.order()));
  CycNumber c = change_order(c0, order_);
  auto it = terms_.find(perm);
  if (it != terms_.end()) c += it->second;
  c = c.reduced();
  if (c.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[perm] = std::move(c);
  }
}

CycNumber MultilinearPolynomial::coefficient(const std::vector<int>& perm) const {
  auto it = terms_.find(perm);
  return it == terms_.end() ? CycNumber(order_) : it->second;
}

MultilinearPolynomial MultilinearPolynomial::lifted(int order) const {
  require(order % order_ == 0, "polynomial: lifted order must be a multiple");
  MultilinearPolynomial out(group_, signature_, order);
  for (const auto& [p, c] : terms_) out.terms_[p] = change_order(c, order).reduced();
  return out;
}

std::string MultilinearPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [perm, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int i : perm) s += " x[" + group_->label(signature_[i]) + "," + std::to_string(i + 1) + "]";
  }
  return s;
}

bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
  if (a.signature() != b.signature() || !same_group(*a.group(), *b.group())) return false;
  if (a.terms().size() != b.terms().size()) return false;
  for (const auto& [p, c] : a.terms()) {
    auto it = b.terms().find(p);
    if (it == b.terms().end() || !(it->second == c)) return false;
  }
  return true;
}

std::vector<std::vector<int>> admissible_permutations(const FiniteGroup& g,
                                                      const std::vector<int>& signature) {
  const int n = static_cast<int>(signature.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int target = g.product(signature);
  std::vector<std::vector<int>> out;
  std::vector<int> word(n);
  do {
    for (int i = 0; i < n; ++i) word[i] = signature[perm[i]];
    if (g.product(word) == target) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MultilinearPolynomial f_theta(const MultilinearPolynomial& f, const CommutationFunction& theta) {
  require(same_group(*f.group(), *theta.group()), "f_theta: groups differ");
  const int order = lcm_int(f.order(), theta.value_order());
  MultilinearPolynomial out(f.group(), f.signature(), order);
  for (const auto& [perm, c] : f.terms()) {
    RootOfUnity t = theta.theta(f.signature(), perm);
    out.add_term(perm, change_order(c, order).times(t.inverse()));
  }
  return out;
}

NormalForm normal_form(const std::vector<Variable>& m, const CommutationFunction& theta) {
  require(theta.group()->is_abelian(), "normal form: group must be abelian");
  NormalForm nf{RootOfUnity::one(), {}};
  if (m.empty()) return nf;
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n), word(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
    return std::pair(m[i].degree, m[i].index) < std::pair(m[j].degree, m[j].index);
  });
  for (int i = 0; i < n; ++i) {
    word[i] = m[i].degree;
    nf.monomial.push_back(m[perm[i]]);
  }
  nf.scalar = theta.theta(word, perm);
  return nf;
}

namespace {

// Odometer over basis tuples b_i in A_{g_i}.
template <class F>
void for_each_tuple(const GradedAlgebra& a, const std::vector<int>& signature, F&& f) {
  const int n = static_cast<int>(signature.size());
  std::vector<const std::vector<int>*> comps(n);
  for (int i = 0; i < n; ++i) {
    comps[i] = &a.component(signature[i]);
    if (comps[i]->empty()) return;
  }
  std::vector<int> pos(n, 0), tuple(n);
  while (true) {
    for (int i = 0; i < n; ++i) tuple[i] = (*comps[i])[pos[i]];
    if (!f(tuple)) return;
    int t = 0;
    while (t < n && ++pos[t] == static_cast<int>(comps[t]->size())) pos[t++] = 0;
    if (t == n) return;
  }
}

bool has_empty_component(const GradedAlgebra& a, const std::vector<int>& signature) {
  for (int g : signature)
    if (a.component(g).empty()) return true;
  return false;
}

std::vector<int> permuted(const std::vector<int>& tuple, const std::vector<int>& perm) {
  std::vector<int> w(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) w[i] = tuple[perm[i]];
  return w;
}

}  // namespace

const IdentityEvaluator::Entry& IdentityEvaluator::entry(const std::vector<int>& signature,
                                                         int order) {
  auto key = std::pair(signature, order);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  for (int g : signature) a_.group()->check_element(g);
  GradedAlgebra a = a_.lifted(order);
  auto perms = admissible_permutations(*a.group(), signature);
  const std::size_t m = perms.size();
  CycEchelon ech(order, m);
  std::set<std::vector<Integer>> seen;
  for_each_tuple(a, signature, [&](const std::vector<int>& tuple) {
    std::map<int, CycRow> rows;
    for (std::size_t s = 0; s < m; ++s)
      for (auto& [k, c] : a.basis_product(permuted(tuple, perms[s]))) {
        auto& row = rows[k];
        if (row.empty()) row.assign(m, CycNumber(order));
        row[s] = c;
      }
    for (auto& [k, row] : rows) {
      std::vector<Integer> key;
      for (const auto& c : row) key.insert(key.end(), c.coeffs().begin(), c.coeffs().end());
      if (!seen.insert(std::move(key)).second) continue;
      ech.insert(std::move(row));
      if (ech.rank() == m) return false;
    }
    return true;
  });
  bool vacuous = has_empty_component(a, signature);
  return cache_.emplace(key, Entry{std::move(perms), std::move(ech), vacuous}).first->second;
}

IdentityVerdict IdentityEvaluator::check(const MultilinearPolynomial& f0) {
  require(same_group(*f0.group(), *a_.group()), "identity: polynomial and algebra groups differ");
  const int order = lcm_int(f0.order(), a_.order());
  MultilinearPolynomial f = f0.lifted(order);
  const Entry& e = entry(f.signature(), order);
  CycRow lambda;
  for (const auto& p : e.perms) lambda.push_back(f.coefficient(p));
  return {e.echelon.annihilates(lambda), e.vacuous};
}

int IdentityEvaluator::constraint_rank(const std::vector<int>& signature) {
  return static_cast<int>(entry(signature, a_.order()).echelon.rank());
}

std::vector<CycRow> IdentityEvaluator::identity_basis(const std::vector<int>& signature) {
  return entry(signature, a_.order()).echelon.kernel();
}

IdentityVerdict is_graded_identity(const MultilinearPolynomial& f, const GradedAlgebra& a) {
  IdentityEvaluator ev(a);
  return ev.check(f);
}

IdentityVerdict is_graded_identity_direct(const MultilinearPolynomial& f0, const GradedAlgebra& a0) {
  require(same_group(*f0.group(), *a0.group()), "identity: polynomial and algebra groups differ");
  const int order = lcm_int(f0.order(), a0.order());
  MultilinearPolynomial f = f0.lifted(order);
  GradedAlgebra a = a0.lifted(order);
  IdentityVerdict v{true, has_empty_component(a, f.signature())};
  for_each_tuple(a, f.signature(), [&](const std::vector<int>& tuple) {
    SparseVec total;
    for (const auto& [perm, c] : f.terms())
      total = sparse_add(total, sparse_scaled(a.basis_product(permuted(tuple, perm)), c));
    if (!total.empty()) v.identity = false;
    return v.identity;
  });
  return v;
}

}  // namespace regrade
