#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regrade/bicharacter.hpp"
#include "regrade/commfun.hpp"
#include "regrade/envelopes.hpp"

namespace regrade {

struct CatalogEntry {
  std::string name;
  std::string description;
  CommutationFunction theta;
  std::optional<Bicharacter> bicharacter;  // set for abelian entries
};

// Names: grassmann, symbol:n, klein, z4z4:1, z4z4:3, eps:m, d8q16,
// d8q16-envelope, trivial:<group>, product:(a,b), hat:(a,b).
CatalogEntry catalog_lookup(const std::string& name);
// Representative names, one per family.
std::vector<std::string> catalog_examples();

// The regular algebra realizing theta: F^alpha G, or its Grassmann envelope
// with E^(k) when psi is nontrivial.
GradedAlgebra model_algebra(const CommutationFunction& theta, int grassmann_rank);

}  // namespace regrade
