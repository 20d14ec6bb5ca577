// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regrade/catalog.hpp"
#include "regrade/classify.hpp"
#include "regrade/comm_matrix.hpp"
#include "regrade/errors.hpp"
#include "regrade/identities.hpp"
#include "regrade/twisted.hpp"

using namespace regrade;

namespace {

// Pinned limits. All comparisons are exact; the only tolerances are runtimes.
constexpr double kSquareSeconds = 5.0;
constexpr double kSimplicitySeconds = 60.0;
constexpr double kEnvelopeSeconds = 120.0;
constexpr int kMaxEnumOrder = 16;
constexpr int kMinPropertyCases = 10000;
constexpr int kEnvelopeRank = 6;
constexpr int kEnvelopeDegree = 3;
constexpr unsigned kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

CommutationFunction theta_of(const std::string& name) { return catalog_lookup(name).theta; }

Bicharacter eta2() { return Bicharacter(FiniteGroup::klein(), 2, {{0, 1}, {1, 0}}); }

Integer ipow(int b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool equals_int(const CycNumber& c, const Integer& v) { return cyc_is_zero(c - CycNumber::from_int(c.order(), v)); }

std::vector<std::string> nondegenerate_catalog() {
  std::vector<std::string> out;
  for (const auto& n : catalog_examples())
    if (is_nondegenerate(theta_of(n)).nondegenerate) out.push_back(n);
  return out;
}

void crit_square(Outcome& o) {
  std::vector<CommutationFunction> ts = {
      theta_of("grassmann"),      theta_of("klein"),  CommutationFunction::from_bicharacter(basic_bicharacter(BasicFactor::eta(3, 1))),
      theta_of("symbol:3"),       theta_of("symbol:4"), theta_of("z4z4:1"),
      theta_of("z4z4:3"),         theta_of("eps:1"),  theta_of("product:(klein,klein)"),
      theta_of("d8q16-envelope")};
  for (const auto& t : ts) o.check(verify_square(build_matrix(t)), "M^2 != nI on " + t.group()->name());
  o.detail << ts.size() << " matrices";
}

void crit_trace(Outcome& o) {
  int count = 0;
  for (const auto& name : catalog_examples()) {
    CommutationFunction t = theta_of(name);
    CommutationMatrix m = build_matrix(t);
    const int n = m.size();
    long long trace = 0;
    for (int g = 0; g < n; ++g) {
      const MatrixEntry& e = m.at(g, g);
      o.check(e.commutator == 0, name + ": diagonal commutator");
      trace += e.scalar.as_sign();
    }
    o.check(trace == 0 || trace == n, name + ": trace not in {0, n}");
    o.check((trace == n) == t.psi_trivial(), name + ": trace = n iff psi trivial");
    if (verify_square(m)) o.check(trace_and_multiplicities(m).trace == trace, name + ": spectrum trace");
    ++count;
  }
  o.detail << count << " entries";
}

void crit_det(Outcome& o) {
  int count = 0;
  for (const auto& name : nondegenerate_catalog()) {
    CommutationFunction t = theta_of(name);
    if (!t.group()->is_abelian()) continue;
    CommutationMatrix m = build_matrix(t);
    const int n = m.size();
    CycNumber det = exact_determinant(m);
    // |det| = n^(n/2), compared as det^2 = n^n since n/2 need not be integral
    o.check(equals_int(det * det, ipow(n, n)), name + ": |det| != n^(n/2)");
    o.check(equals_int(det, trace_and_multiplicities(m).predicted_det), name + ": det != (-1)^a- n^(n/2)");
    ++count;
  }
  // golden signs
  o.check(equals_int(exact_determinant(build_matrix(theta_of("klein"))), -16), "klein det != -16");
  o.check(equals_int(exact_determinant(build_matrix(theta_of("symbol:3"))), -19683), "symbol:3 det != -19683");
  // M_2(F) through its 2-dimensional irrep: an 8 x 8 integer matrix
  CommutationMatrix k = build_matrix(theta_of("klein"));
  Representation rep = clock_shift_representation(k.theta().cocycle());
  o.check(rep.dim == 2, "klein irrep dimension");
  CycNumber d = embedded_determinant(k, rep);
  o.check(equals_int(d, 256) || equals_int(d, -256), "klein embedded |det| != 2^8");
  o.detail << count << " abelian entries; embedded det " << d.as_integer().value_or(0).str();
}

void crit_multiplicities(Outcome& o) {
  auto spectrum = [](const std::string& n) { return trace_and_multiplicities(build_matrix(theta_of(n))); };
  SpectrumReport k = spectrum("klein"), s = spectrum("symbol:3");
  o.check(k.alpha_plus == 3 && k.alpha_minus == 1, "klein (3,1)");
  o.check(s.alpha_plus == 6 && s.alpha_minus == 3, "symbol:3 (6,3)");
  int zero = 0;
  for (const auto& name : nondegenerate_catalog()) {
    SpectrumReport r = spectrum(name);
    o.check(r.alpha_plus + r.alpha_minus == r.n, name + ": multiplicities sum");
    if (r.trace == 0) {
      o.check(r.alpha_plus == r.n / 2 && r.alpha_minus == r.n / 2, name + ": trace 0 but not (n/2, n/2)");
      ++zero;
    }
  }
  o.detail << zero << " trace-0 entries";
}

void crit_exponent(Outcome& o) {
  int count = 0;
  for (const auto& name : nondegenerate_catalog()) {
    CommutationFunction t = theta_of(name);
    o.check(pi_class_and_exponent(t).exp == t.group()->order(), name + ": exp != |G|");
    ++count;
  }
  // same PI class, different gradings
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"z4z4:1", "z4z4:3"},
      {"product:(klein,klein)", "z4z4:1"},
      {"symbol:4", "z4z4:3"},
      {"eps:2", "product:(eps:1,klein)"},
      {"product:(grassmann,grassmann)", "eps:1"},
      {"product:(grassmann,klein)", "d8q16-envelope"}};
  for (const auto& [a, b] : pairs) {
    CommutationFunction ta = theta_of(a), tb = theta_of(b);
    PiClassReport pa = pi_class_and_exponent(ta), pb = pi_class_and_exponent(tb);
    o.check(pa.exp == pb.exp, a + " vs " + b + ": exp");
    o.check(pa.to_string() == pb.to_string(), a + " vs " + b + ": PI class");
    o.check(polys_and_conjugacy(build_matrix(ta), build_matrix(tb)).conjugate, a + " vs " + b + ": not conjugate");
  }
  o.detail << count << " entries, " << pairs.size() << " same-class pairs";
}

void crit_center(Outcome& o) {
  std::vector<std::string> names = catalog_examples();
  names.push_back("trivial:d8");
  names.push_back("trivial:q16");
  int count = 0;
  for (const auto& name : names) {
    CommutationFunction t = theta_of(name);
    if (t.group()->order() > kMaxEnumOrder) continue;
    AlgebraPtr a = make_algebra(t.cocycle());
    o.check(ray_classes(a).center_dim == center_dim_oracle(a), name + ": ray classes vs oracle");
    ++count;
  }
  auto dim = [](const std::string& n) { return ray_classes(make_algebra(theta_of(n).cocycle())).center_dim; };
  o.check(dim("trivial:s3") == 3, "F S3 center != 3");
  o.check(dim("d8q16") == 2, "F^a D8 center != 2");
  o.check(dim("klein") == 1, "F^a Klein center != 1");
  o.detail << count << " algebras";
}

void crit_simplicity(Outcome& o) {
  int count = 0, simple = 0;
  for (const auto& g : abelian_groups_up_to(kMaxEnumOrder))
    for (const auto& b : enumerate_skew_bicharacters(g, true)) {
      AlgebraPtr a = make_algebra(scheunert_cocycle(b));
      bool s = is_simple(a).simple;
      o.check(s == b.is_nondegenerate(), "simple != nondegenerate on " + g->name());
      ++count;
      simple += s;
    }
  o.detail << count << " bicharacters, " << simple << " simple, 0 counterexamples required";
}

// Searches homogeneous x with coefficients in {0, 1, -1}, first nonzero
// coefficient 1, for one generating a proper ideal. Finding one proves B is
// not Z2-simple.
bool graded_ideal_search(const AlgebraPtr& alg, const Subgroup& h) {
  const FiniteGroup& g = *alg->group();
  const int n = g.order();
  const int order = lcm_int(alg->order(), 2);
  std::vector<int> odd;
  for (int x = 0; x < n; ++x)
    if (std::find(h.begin(), h.end(), x) == h.end()) odd.push_back(x);
  for (const auto& part : {std::vector<int>(h), odd}) {
    const int k = static_cast<int>(part.size());
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      int first = -1;
      TGAElement x(alg, order);
      for (int i = 0; i < k; ++i, c /= 3) {
        int d = static_cast<int>(c % 3);
        if (d == 0) continue;
        if (first < 0) {
          first = d;
          if (d != 1) break;
        }
        x += TGAElement::monomial(alg, part[i], RootOfUnity::sign(d == 1 ? 1 : -1)).lifted(order);
      }
      if (first != 1) continue;
      if (generated_ideal_dim(x) < n) return false;
    }
  }
  return true;
}

void crit_z2(Outcome& o) {
  std::vector<std::string> names = {"d8q16-envelope",
                                    "grassmann",
                                    "eps:1",
                                    "eps:2",
                                    "product:(grassmann,grassmann)",
                                    "product:(grassmann,klein)",
                                    "product:(eps:1,klein)",
                                    "product:(grassmann,trivial:z2)",
                                    "product:(grassmann,trivial:z3)",
                                    "product:(grassmann,trivial:klein)"};
  std::vector<std::pair<std::string, CommutationFunction>> cases;
  for (const auto& n : names) cases.emplace_back(n, theta_of(n));
  // untwisted D8 and Klein with the same H
  std::vector<int> psi(8);
  for (int x = 0; x < 8; ++x) psi[x] = (x % 4) % 2 ? -1 : 1;
  cases.emplace_back("F D8, H = K", CommutationFunction(Cocycle::trivial(FiniteGroup::dihedral8()), psi));
  cases.emplace_back("F Klein, H = <a>", CommutationFunction(Cocycle::trivial(FiniteGroup::klein()), {1, 1, -1, -1}));
  int yes = 0, no = 0;
  for (const auto& [name, t] : cases) {
    AlgebraPtr a = make_algebra(t.cocycle());
    Subgroup h = t.kernel();
    bool criterion = is_z2_simple(a, h).z2_simple;
    bool brute = graded_ideal_search(a, h);
    o.check(criterion == brute, name + ": criterion vs graded-ideal search");
    o.check(criterion == z2_simple_oracle(a, h), name + ": criterion vs even center");
    if (criterion) {
      AlgebraType ty = algebra_type(a, h).type;
      o.check(ty != AlgebraType::Type1, name + ": Type1 with nontrivial psi");
    }
    (criterion ? yes : no) += 1;
  }
  o.detail << yes << " Z2-simple, " << no << " not";
}

GradedAlgebra symbol2_over_c2() { return regrade_by(symbol_algebra(2), FiniteGroup::cyclic(2), {0, 0, 1, 1}); }

GradedAlgebra klein_over_c2() {
  return regrade_by(twisted_algebra(scheunert_cocycle(eta2())), FiniteGroup::cyclic(2), {0, 1, 1, 0});
}

void crit_envelope(Outcome& o) {
  auto c2 = FiniteGroup::cyclic(2);
  CommutationFunction tau = CommutationFunction::grassmann();
  GradedAlgebra e = truncated_grassmann(kEnvelopeRank);
  long long total = 0, identities = 0;
  for (const GradedAlgebra& b : {klein_over_c2(), symbol2_over_c2()}) {
    GradedAlgebra eb = hat_tensor(e, b);
    IdentityEvaluator left(eb), right(b);
    for (int n = 1; n <= kEnvelopeDegree; ++n)
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> sig(n);
        for (int i = 0; i < n; ++i) sig[i] = mask >> i & 1;
        auto perms = admissible_permutations(*c2, sig);
        long long count = 1;
        for (std::size_t i = 0; i < perms.size(); ++i) count *= 3;
        for (long long code = 0; code < count; ++code) {
          MultilinearPolynomial f(c2, sig, 1);
          long long c = code;
          for (std::size_t i = 0; i < perms.size(); ++i, c /= 3)
            if (c % 3) f.add_term(perms[i], CycNumber::from_int(1, c % 3 == 1 ? 1 : -1));
          bool l = left.check(f).identity;
          bool r = right.check(f_theta(f, tau)).identity;
          o.check(l == r, b.name() + ": " + f.to_string());
          ++total;
          identities += l;
        }
      }
  }
  o.detail << total << " polynomials, " << identities << " identities";
}

void crit_kernel(Outcome& o) {
  std::vector<std::pair<std::string, CommutationFunction>> cases = {
      {"trivial Z2", CommutationFunction::trivial(FiniteGroup::cyclic(2))},
      {"trivial Z3", CommutationFunction::trivial(FiniteGroup::cyclic(3))},
      {"eta_2 (x) trivial Z2",
       CommutationFunction::from_bicharacter(tensor(eta2(), Bicharacter::trivial(FiniteGroup::cyclic(2))))}};
  for (const auto& [name, t] : cases) {
    CommutationMatrix m = build_matrix(t);
    KernelVector kv = degenerate_kernel(m);
    bool nonzero = std::any_of(kv.v.begin(), kv.v.end(), [](const TGAElement& x) { return !x.is_zero(); });
    auto mv = apply_matrix(m, kv.v);
    bool zero = std::all_of(mv.begin(), mv.end(), [](const TGAElement& x) { return x.is_zero(); });
    o.check(nonzero, name + ": v = 0");
    o.check(zero, name + ": Mv != 0");
    o.detail << name << " via " << kv.route << "; ";
  }
}

void crit_classification(Outcome& o) {
  int count = 0, classes = 0;
  for (const auto& g : abelian_groups_up_to(kMaxEnumOrder)) {
    std::vector<std::pair<Bicharacter, CanonicalForm>> reps;
    for (const auto& t : enumerate_skew_bicharacters(g, false)) {
      if (!t.is_nondegenerate()) continue;
      ++count;
      CanonicalForm f = canonical_decomposition(t);
      o.check(f.exceptional() <= 1, "more than one tau/eps");
      o.check(isomorphic_by_search(recompose(f.factors), t), "recomposition on " + g->name());
      bool placed = false;
      for (const auto& [r, rf] : reps) {
        bool iso = isomorphic_by_search(r, t);
        o.check(iso == (rf == f), "uniqueness on " + g->name());
        placed = placed || iso;
      }
      if (!placed) reps.emplace_back(t, f);
    }
    classes += static_cast<int>(reps.size());
  }
  using B = BasicFactor;
  o.check(isomorphic_by_search(recompose({B::epsilon(1), B::epsilon(1)}), recompose({B::epsilon(1), B::eta(2, 1)})),
          "rule 1");
  o.check(isomorphic_by_search(recompose({B::epsilon(1), B::tau()}), recompose({B::eta(2, 1), B::tau()})), "rule 2");
  o.check(isomorphic_by_search(recompose({B::tau(), B::tau()}), recompose({B::epsilon(1)})), "rule 3");
  o.detail << count << " nondegenerate bicharacters, " << classes << " classes";
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

void crit_axioms(Outcome& o) {
  std::mt19937 rng(kSeed);
  std::vector<std::string> names = {"d8q16-envelope", "d8q16", "symbol:4", "eps:2",
                                    "product:(grassmann,klein)", "trivial:q16", "trivial:s3",
                                    "product:(grassmann,d8q16)"};
  long long cases = 0;
  auto count = [&](bool ok, const std::string& what) {
    o.check(ok, what);
    ++cases;
  };
  for (const auto& name : names) {
    CommutationFunction t = theta_of(name);
    const FiniteGroup& g = *t.group();
    const int n = g.order();
    if (n > kMaxEnumOrder) continue;
    for (int trial = 0; trial < 2000; ++trial) {
      const int len = 1 + static_cast<int>(rng() % 5);
      std::vector<int> w(len), s(len), u(len), id(len);
      for (auto& x : w) x = static_cast<int>(rng() % n);
      std::iota(id.begin(), id.end(), 0);
      s = u = id;
      std::shuffle(s.begin(), s.end(), rng);
      std::shuffle(u.begin(), u.end(), rng);
      const int p = g.product(w);
      count(t.theta(w, id).is_one(), name + ": theta(g, id)");
      if (g.product(permuted(w, s)) == p) {
        // (3) composition, and inversion as its special case
        if (g.product(permuted(w, compose(s, u))) == p)
          count(t.theta(w, s) * t.theta(permuted(w, s), u) == t.theta(w, compose(s, u)), name + ": axiom 3");
        std::vector<int> inv(len);
        for (int i = 0; i < len; ++i) inv[s[i]] = i;
        count((t.theta(w, s) * t.theta(permuted(w, s), inv)).is_one(), name + ": inversion");
      }
      // (1) a permutation supported on a window
      const int i = static_cast<int>(rng() % len), j = i + static_cast<int>(rng() % (len - i));
      std::vector<int> sub(j - i + 1);
      std::iota(sub.begin(), sub.end(), 0);
      std::shuffle(sub.begin(), sub.end(), rng);
      std::vector<int> block(w.begin() + i, w.begin() + j + 1);
      if (g.product(permuted(block, sub)) == g.product(block)) {
        std::vector<int> big = id;
        for (int k = i; k <= j; ++k) big[k] = i + sub[k - i];
        count(t.theta(w, big) == t.theta(block, sub), name + ": axiom 1");
      }
      // (2) blocks of sizes 1..2 moved rigidly
      const int k = 2 + static_cast<int>(rng() % 2);
      std::vector<std::vector<int>> blocks(k);
      std::vector<int> h(k), flat, start;
      for (int b = 0; b < k; ++b) {
        const int sz = 1 + static_cast<int>(rng() % 2);
        for (int z = 0; z < sz; ++z) blocks[b].push_back(static_cast<int>(rng() % n));
        h[b] = g.product(blocks[b]);
        start.push_back(static_cast<int>(flat.size()));
        flat.insert(flat.end(), blocks[b].begin(), blocks[b].end());
      }
      std::vector<int> bs(k);
      std::iota(bs.begin(), bs.end(), 0);
      std::shuffle(bs.begin(), bs.end(), rng);
      if (g.product(permuted(h, bs)) == g.product(h)) {
        std::vector<int> moved;
        for (int b : bs)
          for (std::size_t z = 0; z < blocks[b].size(); ++z) moved.push_back(start[b] + static_cast<int>(z));
        count(t.theta(h, bs) == t.theta(flat, moved), name + ": axiom 2");
      }
      // e-block: (a, x, x^-1) -> (x, x^-1, a)
      const int a = static_cast<int>(rng() % n), x = static_cast<int>(rng() % n);
      std::vector<int> ew = {a, x, g.inverse(x)}, mv = {1, 2, 0};
      count(t.theta(ew, mv).is_one(), name + ": e-block");
      // centralizer character: theta_{a, -} on C_G(a)
      Subgroup c = centralizer(g, a);
      const int b1 = c[rng() % c.size()], b2 = c[rng() % c.size()];
      count(t.pair(a, g.mul(b1, b2)) == t.pair(a, b1) * t.pair(a, b2), name + ": centralizer character");
      count((t.pair(a, b1) * t.pair(b1, a)).is_one(), name + ": skew");
    }
  }
  o.check(cases >= kMinPropertyCases, "too few cases");
  o.detail << cases << " cases";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Outcome&)> run;
    double limit;  // seconds, 0 for none
  };
  std::vector<Criterion> criteria = {
      {1, "square identity", crit_square, kSquareSeconds},
      {2, "trace invariant", crit_trace, 0},
      {3, "determinant", crit_det, 0},
      {4, "multiplicities", crit_multiplicities, 0},
      {5, "exponent and conjugacy", crit_exponent, 0},
      {6, "ray classes and center", crit_center, 0},
      {7, "simplicity iff nondegeneracy", crit_simplicity, kSimplicitySeconds},
      {8, "Z2-simplicity criterion", crit_z2, 0},
      {9, "envelope correspondence", crit_envelope, kEnvelopeSeconds},
      {10, "degenerate kernel", crit_kernel, 0},
      {11, "classification round trip", crit_classification, 0},
      {12, "commutation-function axioms", crit_axioms, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) o.fail("runtime over " + std::to_string(c.limit) + " s");
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << ": " << o.detail.str();
    std::cout.precision(2);
    std::cout << std::fixed << " [" << secs << " s]" << std::endl;
  }
  return failures;
}
