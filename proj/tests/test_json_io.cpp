#include "doctest.h"
#include "regrade/analyze.hpp"
#include "regrade/errors.hpp"

using namespace regrade;

TEST_CASE("groups and elements") {
  CHECK(group_from_json(Json("d8"))->order() == 8);
  GroupPtr g = group_from_json(Json::parse(R"({"abelian": [2, 4]})"));
  CHECK(g->order() == 8);
  CHECK(element_from_json(*g, Json("(1,3)")) == g->from_residues({1, 3}));
  CHECK(element_from_json(*g, Json(5)) == 5);
  CHECK_THROWS_AS(element_from_json(*g, Json("(2,0)")), ValidationError);
  CHECK_THROWS_AS(element_from_json(*g, Json(8)), ValidationError);
  GroupPtr t = group_from_json(Json::parse(R"({"table": [[0, 1], [1, 0]], "labels": ["e", "s"]})"));
  CHECK(element_from_json(*t, Json("s")) == 1);
  CHECK(group_from_json(Json::parse(R"({"product": ["z2", "s3"]})"))->order() == 12);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"table": [[0, 1], [0, 1]]})")), ValidationError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"cyclic": 3})")), ValidationError);
}

TEST_CASE("malformed JSON reports a location") {
  try {
    parse_json("{\"a\": [1, 2,", "input");
    FAIL("no throw");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("bicharacters and thetas") {
  Bicharacter b = bicharacter_from_json(Json::parse(R"({"group": "klein", "order": 2, "gen_table": [[0, 1], [1, 0]]})"));
  CHECK(b.is_nondegenerate());
  CHECK(bicharacter_from_json(bicharacter_to_json(b)).same_values(b));
  CHECK_THROWS_AS(bicharacter_from_json(Json::parse(R"({"group": "klein", "order": 2})")), ValidationError);
  CHECK_THROWS_AS(bicharacter_from_json(Json::parse(R"({"group": "klein", "order": "2", "gen_table": []})")),
                  ValidationError);
  CatalogEntry c = theta_from_json(Json::parse(R"({"catalog": "d8q16-envelope"})"));
  CatalogEntry r = theta_from_json(theta_to_json(c.theta));
  CHECK(same_commutation(c.theta, r.theta));
  CHECK_FALSE(r.bicharacter.has_value());
  CHECK(same_group(*r.theta.group(), *c.theta.group()));
  CatalogEntry k = theta_from_json(theta_to_json(catalog_lookup("klein").theta));
  REQUIRE(k.bicharacter.has_value());
  CHECK(k.bicharacter->same_values(*catalog_lookup("klein").bicharacter));
}

TEST_CASE("coefficients and polynomials") {
  CHECK(coefficient_from_json(Json(-2)) == CycNumber::from_int(1, -2));
  CHECK(coefficient_from_json(Json::parse(R"({"order": 4, "exp": 1})")) ==
        CycNumber::from_root(RootOfUnity(4, 1)));
  CHECK_THROWS_AS(coefficient_from_json(Json("1")), ValidationError);
  GroupPtr g = FiniteGroup::klein();
  // permutations are one-line on 1..n
  MultilinearPolynomial f = polynomial_from_json(
      Json::parse(R"J({"signature": [["(1,0)", 1], ["(0,1)", 2]],
                       "terms": [{"perm": [1, 2], "coeff": 1}, {"perm": [2, 1], "coeff": {"order": 2, "exp": 1}}]})J"),
      g);
  CHECK(f.degree() == 2);
  CHECK(f.coefficient({0, 1}) == CycNumber::from_int(1, 1));
  CHECK(cyc_is_zero(f.coefficient({1, 0}) + CycNumber::from_int(f.order(), 1)));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"signature": [[0, 1], [0, 1]], "terms": []})"), g),
                  ValidationError);
  CHECK_THROWS_AS(
      polynomial_from_json(Json::parse(R"({"signature": [[1, 1], [2, 2]], "terms": [{"perm": [1, 1], "coeff": 1}]})"), g),
      ValidationError);
}

TEST_CASE("algebra descriptors") {
  CHECK(algebra_from_json(Json::parse(R"({"kind": "grassmann", "k": 3})"), 4).dim() == 8);
  CHECK(algebra_from_json(Json::parse(R"({"kind": "symbol", "n": 3})"), 4).dim() == 9);
  CHECK(algebra_from_json(Json("klein"), 4).dim() == 4);
  CHECK(algebra_from_json(Json::parse(R"({"kind": "envelope", "theta": {"catalog": "grassmann"}, "k": 2})"), 4).dim() == 4);
  GradedAlgebra h = algebra_from_json(
      Json::parse(R"({"kind": "hat", "factors": [{"kind": "grassmann", "k": 2}, {"kind": "cyclic_quotient", "n": 2}]})"), 4);
  CHECK(h.dim() == 4);
  GradedAlgebra r = algebra_from_json(
      Json::parse(R"({"kind": "regrade", "algebra": {"kind": "symbol", "n": 2}, "group": "z2", "map": [0, 0, 1, 1]})"), 4);
  CHECK(r.group()->order() == 2);
  CHECK(r.component(1).size() == 2);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"kind": "banana"})"), 4), ValidationError);
  CHECK_THROWS_AS(
      algebra_from_json(Json::parse(R"({"kind": "regrade", "algebra": {"kind": "symbol", "n": 2}, "group": "z2", "map": [0, 1, 1, 1]})"), 4),
      ValidationError);
}

TEST_CASE("report invariants") {
  AnalyzeOptions opt;
  Json a = analyze(catalog_lookup("eps:1"), opt);
  CHECK(a["type"] == "Type2");
  CHECK(a["pi_class"] == "M_{2,1}(E)");
  CHECK(a["matrix"]["trace"] == 0);
  CHECK(a["matrix"]["alpha_plus"] == 2);
  Json c = classify_report(*catalog_lookup("product:(grassmann,grassmann)").bicharacter, opt);
  CHECK(c["canonical"] == Json::array({"eps_2"}));
  std::string text = render_text(a);
  CHECK(text.find("pi_class") != std::string::npos);
  CHECK(examples_report().size() == catalog_examples().size());
}
