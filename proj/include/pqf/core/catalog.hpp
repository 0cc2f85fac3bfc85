#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqf/core/lattice.hpp"

namespace pqf {

/// A named lattice or form. The integer (or half-integer) Gram matrix is
/// always present; a rational basis only where one exists in Q^n.
struct CatalogEntry {
  std::string name;
  QuadraticForm form;
  std::optional<Basis> basis;
};

/// Accepted names: Zn(n) or Z<n>, A2, D3, D4, D5, E6, E7, E8, A3star,
/// U(n) or U<n> (n >= 2), V(n) or V<n> (n >= 4), W5.
/// Throws kSchemaViolation for unknown names.
CatalogEntry catalog(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace pqf
