#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "regrade/analyze.hpp"
#include "regrade/errors.hpp"

using namespace regrade;

namespace {

Bicharacter load_bicharacter(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    Json j = read_json_file(arg);
    if (j.is_object() && j.contains("gen_table")) return bicharacter_from_json(j);
    CatalogEntry e = theta_from_json(j);
    require(e.bicharacter.has_value(), "classify: input is not on an abelian group");
    return *e.bicharacter;
  }
  CatalogEntry e = catalog_lookup(arg);
  require(e.bicharacter.has_value(), "classify: '" + arg + "' is not on an abelian group");
  return *e.bicharacter;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regrade: regular group gradings with exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  AnalyzeOptions opt;
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--max-degree", opt.max_degree, "Word length for regularity and identity checks")
      ->check(CLI::Range(1, 6));
  app.add_option("--grassmann-rank", opt.grassmann_rank, "Truncation rank of E (default 2 * max degree)")
      ->check(CLI::Range(1, 12));
  app.add_flag("--oracle", opt.oracle, "Run brute-force cross-checks");
  app.add_flag("--dump-matrix", opt.dump_matrix, "Emit matrix entries as (exponent, commutator) pairs");

  std::string input, poly;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a catalog name or theta JSON");
  analyze_cmd->add_option("input", input)->required();
  auto* matrix_cmd = app.add_subcommand("matrix", "Commutation matrix checks");
  matrix_cmd->add_option("input", input)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Canonical form of a bicharacter");
  classify_cmd->add_option("input", input)->required();
  auto* identity_cmd = app.add_subcommand("identity", "Decide a graded identity");
  identity_cmd->add_option("algebra", input)->required();
  identity_cmd->add_option("polynomial", poly)->required();
  app.add_subcommand("examples", "List the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json out;
    if (*analyze_cmd) {
      out = analyze(load_theta(input), opt);
    } else if (*matrix_cmd) {
      out = matrix_report(load_theta(input).theta, opt);
    } else if (*classify_cmd) {
      out = classify_report(load_bicharacter(input), opt);
    } else if (*identity_cmd) {
      GradedAlgebra a = load_algebra(input, opt.rank());
      Json pj = std::filesystem::is_regular_file(poly) ? read_json_file(poly) : parse_json(poly, "polynomial");
      out = identity_report(a, polynomial_from_json(pj, a.group()), opt);
    } else {
      out = examples_report();
    }
    if (as_json)
      std::cout << out.dump(2) << "\n";
    else
      std::cout << render_text(out);
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
