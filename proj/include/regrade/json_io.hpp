#pragma once

#include <string>

#include "json.hpp"
#include "regrade/bicharacter.hpp"
#include "regrade/catalog.hpp"
#include "regrade/commfun.hpp"
#include "regrade/envelopes.hpp"
#include "regrade/identities.hpp"

namespace regrade {

using Json = nlohmann::ordered_json;

// Parses a file; syntax errors become ValidationError with the byte offset.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source);

// "d8", "z4", ... or {"abelian": [n1, ...]} or {"table": [[...]], "labels": [...]}.
GroupPtr group_from_json(const Json& j);
// Summary for reports.
Json group_to_json(const FiniteGroup& g);
// Descriptor accepted by group_from_json.
Json group_descriptor(const FiniteGroup& g);
// Index or label.
int element_from_json(const FiniteGroup& g, const Json& j);

// {"group": ..., "order": N, "gen_table": [[...]]}
Bicharacter bicharacter_from_json(const Json& j);
Json bicharacter_to_json(const Bicharacter& b);

// {"catalog": name} | {"bicharacter": {...}} |
// {"group": ..., "cocycle": {"order": N, "table": [[...]]}, "psi": [...]}
CatalogEntry theta_from_json(const Json& j);
Json theta_to_json(const CommutationFunction& t);

// Either a catalog name or a JSON file holding a theta descriptor.
CatalogEntry load_theta(const std::string& arg);

// int or {"order": N, "exp": k}
CycNumber coefficient_from_json(const Json& j);
Json root_to_json(const RootOfUnity& r);

// {"signature": [[g, i], ...], "terms": [{"perm": [...], "coeff": c}, ...]}
// with variable indices i = 1..n and permutations in one-line notation on 1..n.
MultilinearPolynomial polynomial_from_json(const Json& j, const GroupPtr& group);

// {"catalog": name} (the model algebra) | {"kind": "grassmann", "k": k} |
// {"kind": "symbol", "n": n} | {"kind": "twisted", "theta": ...} |
// {"kind": "envelope", "theta": ...} | {"kind": "cyclic_quotient", "n": n, "c": c} |
// {"kind": "hat", "factors": [a, b]} | {"kind": "tensor", "factors": [a, b]} |
// {"kind": "regrade", "algebra": a, "group": g, "map": [...]}
GradedAlgebra algebra_from_json(const Json& j, int grassmann_rank);
GradedAlgebra load_algebra(const std::string& arg, int grassmann_rank);

}  // namespace regrade
