#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/arith.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct Cone {
  std::vector<IntVector> rays;
  std::size_t dim = 0;
  bool simplicial = false;

  bool contains(const IntVector& x) const;
};

/// Rational polyhedral fan given by primitive ray generators and maximal cones (sorted ray
/// index lists).
struct Fan {
  LatticeTag lattice;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  bool complete = false;
  /// Ray values of a strictly convex function that is linear on each maximal cone, when
  /// one is known. Used to steer later refinements.
  std::optional<RatVector> heights;

  std::size_t dim() const { return lattice.rank; }
  Cone cone(std::size_t i) const;
  bool simplicial() const;
  std::optional<std::size_t> ray_index(const IntVector& v) const;
};

/// Validates and assembles a fan. Rays must be distinct nonzero primitive vectors, every
/// ray must lie in some cone, and (for at most 32 rays) listed cones must meet in common
/// faces. Completeness is detected from the codimension-one faces.
Fan make_fan(LatticeTag lattice, std::vector<IntVector> rays,
             std::vector<std::vector<std::size_t>> max_cones,
             std::optional<RatVector> heights = std::nullopt);

/// Cones over the faces of P's normal fan: rays are the facet normals (in facet order),
/// one maximal cone per vertex (in vertex order).
Fan normal_fan(const LatticePolytope& P);

/// Simplicial regular refinement with rays exactly `ray_set` (in the given order).
/// Without `heights` the refinement is taken from a seeded generic lift; with `heights`
/// (one value per ray_set entry) it is the coherent subdivision they induce inside each
/// cone. The returned fan carries a strictly convex certificate in `heights`.
Fan subdivide(const Fan& fan, const std::vector<IntVector>& ray_set,
              const std::optional<RatVector>& heights = std::nullopt, std::uint64_t seed = 0);

/// Interior wall between two simplicial maximal cones, with the linear relation among the
/// n + 1 rays involved, oriented positive on the ray of `first` off the wall. Indexed by
/// the fan's rays; zero elsewhere.
struct Wall {
  std::size_t first = 0;
  std::size_t second = 0;
  IntVector relation;
};
std::vector<Wall> walls(const Fan& fan);

/// A function on rays is convex and linear on cones iff every wall relation pairs it
/// nonnegatively; strictly convex iff every pairing is positive.
bool strictly_convex_on(const Fan& fan, const std::vector<Wall>& ws, const RatVector& eta);

struct SupportFunction {
  Fan fan;
  /// psi(gen(rho)) = -d_rho
  IntVector values;
  /// u_sigma with <gen(rho), u_sigma> = values[rho] on the rays of sigma
  std::vector<RatVector> functionals;

  Rational evaluate(const IntVector& x) const;
};

/// Per-cone linear functionals of psi_D for D = sum d_rho D_rho. Throws PreconditionError when
/// a non-simplicial cone admits no functional.
SupportFunction support_function(const Fan& fan, const IntVector& coefficients);
bool is_cartier(const SupportFunction& sf);
Integer cartier_index(const SupportFunction& sf);

enum class Convexity { StrictlyConvex, Convex, NotConvex };
std::string to_string(Convexity c);

/// Classifies eta = psi (or -psi when `negate`) by the scan eta(a) >= <a, u_sigma> over all
/// rays a and maximal cones sigma, with equality allowed only for a in sigma.
Convexity convexity(const SupportFunction& sf, bool negate);

/// Cone of convex piecewise linear functions modulo linear ones, in the free coordinates of
/// Z^rays / M. A divisor (coefficient vector) belongs to it iff its negated support function
/// is convex.
struct CplCone {
  CokernelPresentation ambient;
  std::vector<IntVector> inequalities;  // <c, x> >= 0, irredundant
  std::vector<IntVector> equations;     // <e, x> = 0
  bool full_dimensional = false;

  bool contains_coordinates(const RatVector& x) const;
  bool contains_divisor(const IntVector& coefficients) const;
};
CplCone cpl_cone(const Fan& fan);
/// Image of the cone under forgetting the coefficients of rays outside `kept` (sorted ray
/// indices); the ambient is Z^kept / M and divisors are given by their kept coefficients.
CplCone cpl_cone(const Fan& fan, const std::vector<std::size_t>& kept);

}  // namespace toric
