#pragma once

#include <optional>

#include "wickrot/metric.hpp"

namespace wickrot {

/// A documented example: algebra, metric, and (when one exists) the known
/// Lie Cartan involution of the metric.
struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  Metric metric;
  std::optional<LinearMap> cartan;
};

std::vector<std::string> catalog_names();

/// Throws std::invalid_argument listing the available names when the
/// entry is unknown.
CatalogEntry catalog(const std::string& name);

/// Direct sum with block metrics; used by the product entries.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& name);

}  // namespace wickrot
