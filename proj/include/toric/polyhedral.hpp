#pragma once

#include <cstddef>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// cone(rays) + span(lineality); rays primitive, pointed modulo the lineality space.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

/// Inequalities <a, x> >= 0 and equations <e, x> = 0 cutting out a cone. Inequality normals
/// are primitive and lie in the linear span of the cone, so the list is irredundant.
struct ConeFacets {
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equations;
};

/// Double description (Motzkin) enumeration of {x : <a, x> >= 0 for every row a}, with the
/// combinatorial adjacency test. Rows are processed in the given order.
ConeGenerators cone_generators(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Facet description of cone(rays) + span(lineality), computed as the generators of the
/// dual cone.
ConeFacets cone_facets(const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality,
                       std::size_t dim);

/// Irredundant form of the system <a, x> >= 0.
ConeFacets irredundant(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Irredundant form of the system <a, x> >= 0 found with one linear program per row, for
/// cones with too many extreme rays to enumerate. Equations are a saturated basis in Hermite
/// form; inequality normals are projected into the cone's linear span and made primitive,
/// so the output is canonical.
ConeFacets irredundant_by_lp(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Cells of the coherent subdivision of a pointed, full-dimensional vector configuration
/// induced by `heights`: the index sets tight on the lower facets of
/// cone{(v_i, h_i)} + cone{(0, 1)}. Each cell is sorted; cells are sorted.
std::vector<std::vector<std::size_t>> lower_cells(const std::vector<IntVector>& vectors,
                                                  const RatVector& heights);

/// Scales a rational row by the lcm of its denominators (a positive factor).
IntVector clear_denominators(const RatVector& row);

}  // namespace toric
