#pragma once

#include <string>

#include "regrade/catalog.hpp"
#include "regrade/json_io.hpp"

namespace regrade {

struct AnalyzeOptions {
  int max_degree = 3;
  int grassmann_rank = 0;  // 0: 2 * max_degree
  bool oracle = false;
  bool dump_matrix = false;

  int rank() const { return grassmann_rank > 0 ? grassmann_rank : 2 * max_degree; }
};

// Full pipeline: psi and H, regularity of the model algebra, nondegeneracy,
// center and simplicity of F^alpha G, type, exponent, the commutation matrix
// and, for abelian groups, the canonical form. Cross-module consistency is
// enforced with InvariantViolation.
Json analyze(const CatalogEntry& entry, const AnalyzeOptions& opt);

Json matrix_report(const CommutationFunction& theta, const AnalyzeOptions& opt);
// Nondegenerate bicharacters get their canonical form, exponent and PI class;
// degenerate ones the radical and the canonical form of the quotient.
Json classify_report(const Bicharacter& theta, const AnalyzeOptions& opt);
Json identity_report(const GradedAlgebra& a, const MultilinearPolynomial& f, const AnalyzeOptions& opt);
Json examples_report();

// Aligned "key: value" text, nested objects indented.
std::string render_text(const Json& j);

}  // namespace regrade
