#include "regrade/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "regrade/errors.hpp"

namespace regrade {

namespace {

template <class T>
T get(const Json& j, const char* key, const std::string& ctx) {
  require(j.is_object() && j.contains(key), ctx + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ctx + ": field '" + key + "' has the wrong type");
  }
}

template <class T>
T as(const Json& j, const std::string& ctx) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ctx + ": wrong type");
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return FiniteGroup::builtin(j.get<std::string>());
  require(j.is_object(), "group: expected a name or an object");
  if (j.contains("abelian")) {
    auto moduli = get<std::vector<int>>(j, "abelian", "group");
    long long order = 1;
    for (int m : moduli) {
      require(m >= 1, "group: moduli must be positive");
      order *= m;
      require(order <= 4096, "group: order too large");
    }
    return FiniteGroup::abelian(moduli);
  }
  if (j.contains("table")) {
    auto table = get<std::vector<std::vector<int>>>(j, "table", "group");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels", "group");
    return FiniteGroup::from_table(table, labels);
  }
  if (j.contains("product")) {
    require(j.at("product").is_array() && j.at("product").size() == 2, "group: product takes two groups");
    return FiniteGroup::direct_product(group_from_json(j.at("product")[0]), group_from_json(j.at("product")[1]));
  }
  throw ValidationError("group: expected 'abelian', 'table' or 'product'");
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  if (g.kind() == FiniteGroup::Kind::Abelian) j["moduli"] = g.moduli();
  return j;
}

Json group_descriptor(const FiniteGroup& g) {
  if (g.kind() == FiniteGroup::Kind::Abelian) return {{"abelian", g.moduli()}};
  const int n = g.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = g.label(a);
    for (int b = 0; b < n; ++b) table[a][b] = g.mul(a, b);
  }
  return {{"table", table}, {"labels", labels}};
}

int element_from_json(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    int x = j.get<int>();
    g.check_element(x);
    return x;
  }
  require(j.is_string(), "element: expected an index or a label");
  std::string s = j.get<std::string>();
  for (int x = 0; x < g.order(); ++x)
    if (g.label(x) == s) return x;
  throw ValidationError("element: no element labelled '" + s + "' in " + g.name());
}

Bicharacter bicharacter_from_json(const Json& j) {
  require(j.is_object(), "bicharacter: expected an object");
  require(j.contains("group"), "bicharacter: missing field 'group'");
  GroupPtr g = group_from_json(j.at("group"));
  int order = get<int>(j, "order", "bicharacter");
  require(order >= 1 && order <= 4096, "bicharacter: order out of range");
  auto table = get<std::vector<std::vector<int>>>(j, "gen_table", "bicharacter");
  return Bicharacter(g, order, table);
}

Json bicharacter_to_json(const Bicharacter& b) {
  Json j;
  j["group"] = group_descriptor(*b.group());
  j["order"] = b.order();
  j["gen_table"] = b.gen_table();
  return j;
}

CatalogEntry theta_from_json(const Json& j) {
  require(j.is_object(), "theta: expected an object");
  if (j.contains("catalog")) return catalog_lookup(get<std::string>(j, "catalog", "theta"));
  if (j.contains("bicharacter")) {
    Bicharacter b = bicharacter_from_json(j.at("bicharacter"));
    return {"bicharacter", "bicharacter from JSON", CommutationFunction::from_bicharacter(b), b};
  }
  require(j.contains("group") && j.contains("cocycle"),
          "theta: expected 'catalog', 'bicharacter' or 'group' with 'cocycle'");
  GroupPtr g = group_from_json(j.at("group"));
  const Json& c = j.at("cocycle");
  int order = get<int>(c, "order", "cocycle");
  require(order >= 1 && order <= 4096, "cocycle: order out of range");
  auto rows = get<std::vector<std::vector<int>>>(c, "table", "cocycle");
  require(static_cast<int>(rows.size()) == g->order(), "cocycle: table must be |G| x |G|");
  std::vector<int> flat;
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == g->order(), "cocycle: table must be |G| x |G|");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  std::vector<int> psi(g->order(), 1);
  if (j.contains("psi")) psi = get<std::vector<int>>(j, "psi", "theta");
  CommutationFunction t(Cocycle(g, order, flat), psi);
  std::optional<Bicharacter> b;
  if (g->is_abelian()) b = as_bicharacter(t);
  return {"cocycle", "commutation function from JSON", t, b};
}

Json theta_to_json(const CommutationFunction& t) {
  Json j;
  j["group"] = group_descriptor(*t.group());
  const int n = t.group()->order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) rows[g][h] = t.cocycle().at(g, h);
  j["cocycle"] = {{"order", t.cocycle().order()}, {"table", rows}};
  j["psi"] = t.psi();
  return j;
}

CatalogEntry load_theta(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return theta_from_json(read_json_file(arg));
  return catalog_lookup(arg);
}

CycNumber coefficient_from_json(const Json& j) {
  if (j.is_number_integer()) return CycNumber::from_int(1, j.get<long long>());
  require(j.is_object(), "coefficient: expected an integer or {order, exp}");
  int order = get<int>(j, "order", "coefficient");
  require(order >= 1 && order <= 4096, "coefficient: order out of range");
  return CycNumber::from_root(RootOfUnity(order, get<long long>(j, "exp", "coefficient")));
}

Json root_to_json(const RootOfUnity& r) { return {{"order", r.order()}, {"exp", r.exponent()}}; }

MultilinearPolynomial polynomial_from_json(const Json& j, const GroupPtr& group) {
  require(j.is_object(), "polynomial: expected an object");
  require(j.contains("signature") && j.at("signature").is_array(), "polynomial: missing 'signature'");
  const Json& sig = j.at("signature");
  const int n = static_cast<int>(sig.size());
  require(n >= 1 && n <= 8, "polynomial: degree must be in [1, 8]");
  std::vector<int> degrees(n, -1);
  for (const auto& v : sig) {
    require(v.is_array() && v.size() == 2, "polynomial: signature entries are [g, i]");
    int i = as<int>(v[1], "polynomial: variable index");
    require(i >= 1 && i <= n && degrees[i - 1] < 0, "polynomial: variable indices must be 1..n");
    degrees[i - 1] = element_from_json(*group, v[0]);
  }
  MultilinearPolynomial f(group, degrees, 1);
  require(j.contains("terms") && j.at("terms").is_array(), "polynomial: missing 'terms'");
  for (const auto& t : j.at("terms")) {
    auto perm = get<std::vector<int>>(t, "perm", "polynomial term");
    for (int& p : perm) --p;
    require(t.contains("coeff"), "polynomial term: missing 'coeff'");
    f.add_term(perm, coefficient_from_json(t.at("coeff")));
  }
  return f;
}

GradedAlgebra algebra_from_json(const Json& j, int k) {
  if (j.is_string()) return model_algebra(catalog_lookup(j.get<std::string>()).theta, k);
  require(j.is_object(), "algebra: expected an object");
  if (j.contains("catalog")) return model_algebra(catalog_lookup(get<std::string>(j, "catalog", "algebra")).theta, k);
  std::string kind = get<std::string>(j, "kind", "algebra");
  if (kind == "grassmann") return truncated_grassmann(j.contains("k") ? get<int>(j, "k", "algebra") : k);
  if (kind == "symbol") {
    int n = get<int>(j, "n", "algebra");
    require(n >= 1 && n <= 12, "algebra: symbol size must be in [1, 12]");
    return symbol_algebra(n);
  }
  if (kind == "twisted") {
    require(j.contains("theta"), "algebra: missing 'theta'");
    return twisted_algebra(theta_from_json(j.at("theta")).theta.cocycle());
  }
  if (kind == "envelope") {
    require(j.contains("theta"), "algebra: missing 'theta'");
    CommutationFunction t = theta_from_json(j.at("theta")).theta;
    return grassmann_envelope(twisted_algebra(t.cocycle()), t.kernel(),
                              j.contains("k") ? get<int>(j, "k", "algebra") : k);
  }
  if (kind == "cyclic_quotient") {
    int n = get<int>(j, "n", "algebra");
    require(n >= 1 && n <= 64, "algebra: n must be in [1, 64]");
    return cyclic_quotient(n, j.contains("c") ? coefficient_from_json(j.at("c")) : CycNumber(1));
  }
  if (kind == "hat" || kind == "tensor") {
    require(j.contains("factors") && j.at("factors").is_array() && j.at("factors").size() == 2,
            "algebra: '" + kind + "' takes two factors");
    GradedAlgebra a = algebra_from_json(j.at("factors")[0], k), b = algebra_from_json(j.at("factors")[1], k);
    return kind == "hat" ? hat_tensor(a, b) : tensor(a, b);
  }
  if (kind == "regrade") {
    require(j.contains("algebra") && j.contains("group"), "algebra: regrade needs 'algebra' and 'group'");
    GradedAlgebra a = algebra_from_json(j.at("algebra"), k);
    GroupPtr target = group_from_json(j.at("group"));
    require(j.contains("map") && j.at("map").is_array(), "algebra: regrade needs 'map'");
    std::vector<int> phi;
    for (const auto& x : j.at("map")) phi.push_back(element_from_json(*target, x));
    return regrade_by(a, target, phi);
  }
  throw ValidationError("algebra: unknown kind '" + kind + "'");
}

GradedAlgebra load_algebra(const std::string& arg, int k) {
  if (std::filesystem::is_regular_file(arg)) return algebra_from_json(read_json_file(arg), k);
  return model_algebra(catalog_lookup(arg).theta, k);
}

}  // namespace regrade
