#include "regrade/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "regrade/classify.hpp"
#include "regrade/errors.hpp"

namespace regrade {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  require(!s.empty() && s.size() <= 6 &&
              std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }),
          "catalog: bad " + what + " '" + s + "'");
  return std::stoi(s);
}

// "(a,b)" with a and b possibly nested.
std::pair<std::string, std::string> split_pair(const std::string& s) {
  require(s.size() >= 5 && s.front() == '(' && s.back() == ')', "catalog: expected (a,b), got '" + s + "'");
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(1, i - 1), s.substr(i + 1, s.size() - i - 2)};
  }
  throw ValidationError("catalog: expected (a,b), got '" + s + "'");
}

CatalogEntry from_bicharacter(std::string name, std::string description, const Bicharacter& b) {
  return {std::move(name), std::move(description), CommutationFunction::from_bicharacter(b), b};
}

Bicharacter symbol(int n) { return Bicharacter(FiniteGroup::abelian({n, n}), n, {{0, n - 1}, {1, 0}}); }

std::vector<int> d8_envelope_psi() {
  std::vector<int> psi(8);
  for (int g = 0; g < 8; ++g) psi[g] = (g % 4) % 2 ? -1 : 1;
  return psi;
}

}  // namespace

CatalogEntry catalog_lookup(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (name == "grassmann")
    return from_bicharacter(name, "tau on C2; the Grassmann algebra",
                            Bicharacter(FiniteGroup::cyclic(2), 2, {{1}}));
  if (name == "klein")
    return from_bicharacter(name, "eta_2 on Z2 x Z2; M_2(F) by Pauli matrices",
                            Bicharacter(FiniteGroup::klein(), 2, {{0, 1}, {1, 0}}));
  if (head == "symbol") {
    int n = parse_int(arg, "symbol size");
    require(n >= 1 && n <= 12, "catalog: symbol size must be in [1, 12]");
    return from_bicharacter(name, "symbol grading of M_" + arg + "(F) by Z" + arg + " x Z" + arg, symbol(n));
  }
  if (head == "z4z4") {
    require(arg == "1" || arg == "3", "catalog: z4z4 takes 1 or 3");
    int k = parse_int(arg, "exponent");
    return from_bicharacter(name, "theta(e1,e2) = zeta_4^" + arg + " on Z4 x Z4",
                            Bicharacter(FiniteGroup::abelian({4, 4}), 4, {{0, k}, {4 - k, 0}}));
  }
  if (head == "eps") {
    int m = parse_int(arg, "eps exponent");
    require(m >= 1 && m <= 3, "catalog: eps exponent must be in [1, 3]");
    return from_bicharacter(name, "eps_{2^" + arg + "}", basic_bicharacter(BasicFactor::epsilon(m)));
  }
  if (name == "d8q16")
    return {name, "twisted D8 algebra from the extension by Q16",
            CommutationFunction(d8_q16_cocycle(), std::vector<int>(8, 1)), std::nullopt};
  if (name == "d8q16-envelope")
    return {name, "D8 twisted algebra with psi odd off K = <x^2, y>",
            CommutationFunction(d8_q16_cocycle(), d8_envelope_psi()), std::nullopt};
  if (head == "trivial") {
    GroupPtr g = FiniteGroup::builtin(arg);
    CommutationFunction t = CommutationFunction::trivial(g);
    std::optional<Bicharacter> b;
    if (g->is_abelian()) b = Bicharacter::trivial(g);
    return {name, "trivial theta on " + g->name(), t, b};
  }
  if (head == "product" || head == "hat") {
    auto [l, r] = split_pair(arg);
    CatalogEntry a = catalog_lookup(l), b = catalog_lookup(r);
    if (head == "product") {
      std::optional<Bicharacter> bc;
      if (a.bicharacter && b.bicharacter) bc = tensor(*a.bicharacter, *b.bicharacter);
      return {name, "tensor product of " + l + " and " + r, tensor(a.theta, b.theta), bc};
    }
    std::optional<Bicharacter> bc;
    if (a.bicharacter && b.bicharacter) bc = hat_product(*a.bicharacter, *b.bicharacter);
    return {name, "hat product of " + l + " and " + r, hat_product(a.theta, b.theta), bc};
  }
  throw ValidationError("catalog: unknown entry '" + name + "'");
}

std::vector<std::string> catalog_examples() {
  return {"grassmann",       "klein",          "symbol:3",         "symbol:4",
          "z4z4:1",          "z4z4:3",         "eps:1",            "eps:2",
          "d8q16",           "d8q16-envelope", "trivial:z2",       "trivial:s3",
          "product:(klein,klein)", "product:(grassmann,grassmann)", "hat:(symbol:3,symbol:3)"};
}

GradedAlgebra model_algebra(const CommutationFunction& theta, int grassmann_rank) {
  GradedAlgebra b = twisted_algebra(theta.cocycle());
  if (theta.psi_trivial()) return b;
  return grassmann_envelope(b, theta.kernel(), grassmann_rank);
}

}  // namespace regrade
