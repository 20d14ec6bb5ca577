#include "regrade/analyze.hpp"

#include <sstream>

#include "regrade/classify.hpp"
#include "regrade/comm_matrix.hpp"
#include "regrade/errors.hpp"
#include "regrade/twisted.hpp"

namespace regrade {

namespace {

Json labels(const FiniteGroup& g, const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(g.label(x));
  return out;
}

std::string str(const Integer& v) { return v.str(); }

std::string str(const CycNumber& c) {
  if (auto v = c.as_integer()) return v->str();
  return c.to_string();
}

Json root_json(const RootOfUnity& r) { return root_to_json(r); }

const char* type_name(AlgebraType t) {
  switch (t) {
    case AlgebraType::Type1: return "Type1";
    case AlgebraType::Type2: return "Type2";
    case AlgebraType::Type3: return "Type3";
  }
  return "";
}

Json canonical_json(const CanonicalForm& f, const FiniteGroup& g) {
  Json j;
  j["canonical"] = f.names();
  j["form"] = f.to_string();
  Json w = Json::array();
  for (const auto& x : f.factors) w.push_back({{"factor", x.name()}, {"generators", labels(g, x.generators)}});
  j["witnesses"] = w;
  return j;
}

// det^2 = n^{n d} follows from M^2 = n I under a representation of dimension d.
void check_det_square(const CycNumber& det, int n, int d) {
  Integer expected = 1;
  for (int i = 0; i < n * d; ++i) expected *= n;
  CycNumber sq = det * det;
  ensure(cyc_is_zero(sq - CycNumber::from_int(sq.order(), expected)), "det^2 != n^(n d)");
}

}  // namespace

Json matrix_report(const CommutationFunction& theta, const AnalyzeOptions& opt) {
  const FiniteGroup& g = *theta.group();
  const int n = g.order();
  CommutationMatrix m = build_matrix(theta);
  Nondegeneracy nd = is_nondegenerate(theta);
  Json j;
  j["size"] = n;
  j["scalar"] = m.is_scalar();
  bool square = verify_square(m);
  j["square"] = square;
  ensure(square == nd.nondegenerate, "M^2 = nI must hold exactly for nondegenerate theta");

  long long trace = 0;
  for (int x = 0; x < n; ++x) trace += theta.psi(x);
  j["trace"] = trace;
  j["trace_ok"] = trace == 0 || trace == n;

  if (square) {
    SpectrumReport s = trace_and_multiplicities(m);
    ensure(s.trace == trace, "trace mismatch");
    ensure(trace == 0 || trace == n, "trace not in {0, n}");
    ensure((trace == n) == theta.psi_trivial(), "trace = n iff psi trivial");
    j["alpha_plus"] = s.alpha_plus;
    j["alpha_minus"] = s.alpha_minus;
    j["char_poly"] = poly_to_string(s.char_poly);
    j["min_poly"] = poly_to_string(s.min_poly);
    j["predicted_det"] = str(s.predicted_det);
    if (m.is_scalar()) {
      CycNumber det = exact_determinant(m);
      ensure(cyc_is_zero(det - CycNumber::from_int(det.order(), s.predicted_det)), "det != (-1)^a- n^(n/2)");
      j["det"] = str(det);
      j["det_method"] = "bareiss";
    } else if (n <= 8) {
      Representation rep = regular_representation(theta.cocycle());
      CycNumber det = embedded_determinant(m, rep);
      check_det_square(det, n, rep.dim);
      j["det"] = str(det);
      j["det_method"] = "regular-representation";
      j["det_rep_dim"] = rep.dim;
    }
  } else {
    KernelVector kv = degenerate_kernel(m);
    std::vector<TGAElement> mv = apply_matrix(m, kv.v);
    bool zero = true, nonzero = false;
    for (const auto& e : mv) zero = zero && e.is_zero();
    for (const auto& e : kv.v) nonzero = nonzero || !e.is_zero();
    ensure(zero && nonzero, "kernel vector check failed");
    Json k;
    k["witness"] = g.label(kv.witness);
    if (kv.root) k["root"] = root_json(*kv.root);
    k["route"] = kv.route;
    Json v = Json::array();
    for (const auto& e : kv.v) v.push_back(e.to_string());
    k["v"] = v;
    k["verified"] = true;
    j["kernel"] = k;
    if (m.is_scalar()) {
      CycNumber det = exact_determinant(m);
      ensure(det.is_zero(), "degenerate matrix with nonzero det");
      j["det"] = "0";
      j["det_method"] = "bareiss";
    }
  }
  if (opt.dump_matrix) {
    Json rows = Json::array();
    for (int a = 0; a < n; ++a) {
      Json row = Json::array();
      for (int b = 0; b < n; ++b) {
        const MatrixEntry& e = m.at(a, b);
        RootOfUnity r = change_order(e.scalar, lcm_int(e.scalar.order(), theta.value_order()));
        row.push_back(Json::array({r.exponent(), e.commutator}));
      }
      rows.push_back(row);
    }
    j["entries_order"] = lcm_int(1, theta.value_order());
    j["entries"] = rows;
  }
  return j;
}

Json classify_report(const Bicharacter& theta, const AnalyzeOptions& opt) {
  const FiniteGroup& g = *theta.group();
  Json j;
  j["group"] = group_to_json(g);
  j["nondegenerate"] = theta.is_nondegenerate();
  if (theta.is_nondegenerate()) {
    CanonicalForm f = canonical_decomposition(theta);
    if (opt.oracle) ensure(isomorphic_by_search(recompose(f.factors), theta), "recomposition is not isomorphic");
    Json c = canonical_json(f, g);
    for (auto& [k, v] : c.items()) j[k] = v;
    PiClassReport p = pi_class_and_exponent(CommutationFunction::from_bicharacter(theta));
    ensure(p.exp == g.order(), "exp != |G|");
    j["exp"] = p.exp;
    j["pi_class"] = p.to_string();
  } else {
    Minimalization mz = radical_and_minimalize(theta);
    j["radical"] = labels(g, mz.radical);
    const FiniteGroup& q = *mz.quotient.group;
    j["quotient_order"] = q.order();
    CanonicalForm f = canonical_decomposition(mz.theta);
    Json c = canonical_json(f, q);
    Json wit = Json::array();
    // witnesses as coset representatives in G
    for (const auto& x : f.factors) {
      std::vector<int> reps;
      for (int y : x.generators) reps.push_back(mz.quotient.reps[y]);
      wit.push_back({{"factor", x.name()}, {"generators", labels(g, reps)}});
    }
    j["quotient_canonical"] = c["canonical"];
    j["quotient_form"] = c["form"];
    j["quotient_witnesses"] = wit;
  }
  return j;
}

Json analyze(const CatalogEntry& entry, const AnalyzeOptions& opt) {
  const CommutationFunction& theta = entry.theta;
  const FiniteGroup& g = *theta.group();
  const int n = g.order();
  Json j;
  j["input"] = {{"name", entry.name}, {"description", entry.description}, {"group", group_to_json(g)},
                {"value_order", theta.value_order()}};

  PsiReport pr = psi_and_kernel(theta);
  j["psi"] = {{"values", pr.psi}, {"trivial", theta.psi_trivial()}, {"H", labels(g, pr.kernel)},
              {"index", n / static_cast<int>(pr.kernel.size())}};

  GradedAlgebra model = model_algebra(theta, opt.rank());
  RegularityReport rr = check_regularity(model, opt.max_degree);
  ensure(rr.regular, "model algebra " + model.name() + " is not regular");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.commute(a, b) && rr.theta[a * n + b])
        ensure(*rr.theta[a * n + b] == theta.pair(a, b), "regularity theta differs from theta");
  j["regularity"] = {{"algebra", model.name()}, {"dim", model.dim()}, {"grassmann_rank", opt.rank()},
                     {"max_length", rr.max_length}, {"regular", rr.regular},
                     {"condition1", rr.condition1}, {"condition2", rr.condition2}};

  Nondegeneracy nd = is_nondegenerate(theta);
  Json ndj = {{"nondegenerate", nd.nondegenerate}};
  if (nd.witness) ndj["witness"] = g.label(*nd.witness);
  j["nondegeneracy"] = ndj;

  AlgebraPtr alg = make_algebra(theta.cocycle());
  RayReport rays = ray_classes(alg);
  Json tw;
  tw["center_dim"] = rays.center_dim;
  int ray_count = 0;
  for (const auto& c : rays.classes) ray_count += c.is_ray ? 1 : 0;
  tw["ray_classes"] = ray_count;
  if (opt.oracle) {
    int oracle = center_dim_oracle(alg);
    ensure(oracle == rays.center_dim, "center_dim from ray classes differs from the oracle");
    tw["center_dim_oracle"] = oracle;
  }
  Simplicity s = is_simple(alg);
  tw["simple"] = s.simple;
  if (s.simple) tw["matrix_size"] = s.size;
  if (theta.psi_trivial()) {
    // the Z2-grading is trivial
    tw["z2_simple"] = nullptr;
  } else {
    Z2Simplicity z = is_z2_simple(alg, pr.kernel);
    tw["z2_simple"] = z.z2_simple;
    if (opt.oracle) {
      bool o = z2_simple_oracle(alg, pr.kernel);
      ensure(o == z.z2_simple, "Z2-simplicity criterion differs from the oracle");
      tw["z2_simple_oracle"] = o;
    }
  }
  j["twisted"] = tw;

  Json mj = matrix_report(theta, opt);
  if (nd.nondegenerate) {
    TypeReport t = algebra_type(alg, pr.kernel);
    PiClassReport p = pi_class_and_exponent(theta);
    ensure(p.exp == n, "exp != |G|");
    ensure(p.type == static_cast<int>(t.type), "type mismatch");
    ensure((mj["trace"].get<long long>() == n) == (t.type == AlgebraType::Type1), "trace verdict does not match type");
    j["type"] = type_name(t.type);
    j["type_param"] = t.param;
    j["exp"] = p.exp;
    j["pi_class"] = p.to_string();
  } else {
    j["type"] = nullptr;
    j["exp"] = nullptr;
    j["pi_class"] = nullptr;
  }
  j["matrix"] = mj;

  if (entry.bicharacter) {
    ensure(entry.bicharacter->is_nondegenerate() == nd.nondegenerate, "bicharacter and theta disagree on nondegeneracy");
    Json c = classify_report(*entry.bicharacter, opt);
    c.erase("group");
    c.erase("nondegenerate");
    if (nd.nondegenerate) {
      c.erase("exp");
      c.erase("pi_class");
    }
    j["classification"] = c;
  }
  return j;
}

Json identity_report(const GradedAlgebra& a, const MultilinearPolynomial& f, const AnalyzeOptions& opt) {
  require(f.degree() <= opt.max_degree + 2, "identity: degree exceeds --max-degree + 2");
  require(same_group(*a.group(), *f.group()), "identity: polynomial and algebra use different groups");
  IdentityEvaluator ev(a);
  IdentityVerdict v = ev.check(f);
  Json j;
  j["algebra"] = {{"name", a.name()}, {"dim", a.dim()}, {"group", group_to_json(*a.group())}};
  j["polynomial"] = f.to_string();
  j["signature"] = labels(*a.group(), f.signature());
  j["identity"] = v.identity;
  j["vacuous"] = v.vacuous;
  j["constraint_rank"] = ev.constraint_rank(f.signature());
  j["admissible_permutations"] = admissible_permutations(*a.group(), f.signature()).size();
  if (opt.oracle) {
    IdentityVerdict d = is_graded_identity_direct(f, a);
    ensure(d.identity == v.identity, "direct evaluation disagrees");
    j["identity_direct"] = d.identity;
  }
  return j;
}

Json examples_report() {
  Json out = Json::array();
  for (const auto& name : catalog_examples()) {
    CatalogEntry e = catalog_lookup(name);
    out.push_back({{"name", name}, {"description", e.description}, {"group", e.theta.group()->name()},
                   {"order", e.theta.group()->order()}});
  }
  return out;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
  return true;
}

void render(const Json& j, int indent, std::ostringstream& out) {
  std::size_t width = 0;
  for (auto& [k, v] : j.items()) width = std::max(width, k.size());
  const std::string pad(indent, ' ');
  for (auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << pad << k << ":\n";
      render(v, indent + 2, out);
    } else if (v.is_array() && !is_flat(v)) {
      out << pad << k << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render(x, indent + 4, out);
        } else {
          out << pad << "  - " << x.dump() << "\n";
        }
      }
    } else {
      std::string text;
      if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) text += (i ? " " : "") + scalar_text(v[i]);
        text = "[" + text + "]";
      } else {
        text = scalar_text(v);
      }
      out << pad << k << std::string(width - k.size(), ' ') << " : " << text << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  if (j.is_array()) {
    for (const auto& x : j) {
      render(x, 0, out);
      out << "\n";
    }
  } else {
    render(j, 0, out);
  }
  return out.str();
}

}  // namespace regrade
