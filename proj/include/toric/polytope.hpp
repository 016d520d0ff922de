#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/arith.hpp"
#include "toric/int_matrix.hpp"

namespace toric {

enum class LatticeName { M, N };

/// Names the lattice a polytope or fan lives in. Polar duality swaps M and N.
struct LatticeTag {
  LatticeName name = LatticeName::M;
  std::size_t rank = 0;

  LatticeTag dual() const {
    return {name == LatticeName::M ? LatticeName::N : LatticeName::M, rank};
  }
  bool operator==(const LatticeTag&) const = default;
};

std::string to_string(LatticeName name);

/// Half-space <normal, y> >= -offset, i.e. <normal, y> + offset >= 0.
struct Facet {
  IntVector normal;
  Integer offset;

  Integer evaluate(const IntVector& y) const { return dot(normal, y) + offset; }
  bool operator==(const Facet&) const = default;
};

/// Full-dimensional integral polytope with matching vertex and facet descriptions.
/// Vertices are sorted lexicographically; facets by normal. Normals are primitive.
class LatticePolytope {
 public:
  const LatticeTag& lattice() const { return lattice_; }
  std::size_t dim() const { return lattice_.rank; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const IntVector& y) const;
  bool origin_interior() const;

  bool operator==(const LatticePolytope& o) const {
    return lattice_ == o.lattice_ && vertices_ == o.vertices_;
  }

 private:
  friend LatticePolytope hull(const std::vector<IntVector>&, LatticeTag);
  LatticePolytope(LatticeTag lattice, std::vector<IntVector> vertices, std::vector<Facet> facets);

  LatticeTag lattice_;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
};

/// Convex hull of lattice points. Throws PreconditionError("not full-dimensional") when the
/// points do not affinely span the ambient space.
LatticePolytope hull(const std::vector<IntVector>& points, LatticeTag lattice);

/// Vertices (possibly rational) and boundedness of {y : <n_i, y> + c_i >= 0}.
struct PolyhedronVertices {
  std::vector<RatVector> vertices;
  bool empty = false;
  bool bounded = true;
};
PolyhedronVertices polyhedron_vertices(const std::vector<Facet>& inequalities, std::size_t dim);

/// Builds the polytope of an H-description whose vertices are integral.
LatticePolytope from_inequalities(const std::vector<Facet>& inequalities, LatticeTag lattice);

/// Vertices of {x : <x, y> >= -1 for all y in P}: facet normals divided by offsets.
std::vector<RatVector> polar_vertices(const LatticePolytope& P);
/// Throws "origin not interior" or "polar not integral".
LatticePolytope polar(const LatticePolytope& P);
bool is_reflexive(const LatticePolytope& P);

/// All lattice points, lexicographic order.
std::vector<IntVector> lattice_points(const LatticePolytope& P);
/// Lattice points of a bounded H-description (rational vertices allowed). Throws
/// PreconditionError("unbounded") when the region is unbounded.
std::vector<IntVector> lattice_points(const std::vector<Facet>& inequalities, std::size_t dim);

struct PointClassification {
  bool origin_interior = false;
  std::vector<IntVector> interior_points;
  std::vector<IntVector> facet_interior_points;
  std::vector<IntVector> boundary_nonfacet_points;  // boundary points that are neither vertices
                                                    // nor in the relative interior of a facet
  std::vector<IntVector> vertices;
};

/// Requires P reflexive.
PointClassification classify_points(const LatticePolytope& P);

/// Lattice points of P that are not interior to any facet, lexicographic, origin included.
std::vector<IntVector> reduced_points(const LatticePolytope& P);

struct Face {
  std::vector<std::size_t> vertices;  // indices into P.vertices()
  std::vector<std::size_t> facets;    // indices into P.facets() containing the face
  int dim = -1;
};

/// faces[k + 1] holds the k-dimensional faces, k = -1 .. dim.
std::vector<std::vector<Face>> face_lattice(const LatticePolytope& P);

/// Facets x vertices matrix of <n_i, v_j> + c_i.
IntMatrix vertex_facet_pairing(const LatticePolytope& P);

/// Normal form under GL(n, Z) and vertex relabelling: the Hermite normal form of the vertex
/// matrix, taken over the vertex orders that put the pairing matrix in lexicographically
/// minimal form, minimised lexicographically.
IntMatrix canonical_form(const LatticePolytope& P);

}  // namespace toric
