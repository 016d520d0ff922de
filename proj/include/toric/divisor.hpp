#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/arith.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// sum_rho coefficients[rho] D_rho, indexed by the fan's rays.
struct ToricDivisor {
  Fan fan;
  IntVector coefficients;
};

ToricDivisor make_divisor(const Fan& fan, IntVector coefficients);
/// sum_rho D_rho
ToricDivisor anticanonical(const Fan& fan);
/// div(chi^m) = sum_rho <gen(rho), m> D_rho
ToricDivisor principal_divisor(const Fan& fan, const IntVector& m);

/// Z^rays / M restricted to a subset of the fan's rays (all of them for the class group).
struct ClassGroupPresentation {
  std::vector<std::size_t> rays;
  CokernelPresentation cokernel;

  std::size_t free_rank() const { return cokernel.free_rank; }
  const std::vector<Integer>& torsion() const { return cokernel.torsion; }
};

struct DivisorClass {
  IntVector free;
  IntVector torsion;
  bool operator==(const DivisorClass&) const = default;
  bool is_zero() const;
};

/// Throws PreconditionError("rays do not span") when the rays do not span the lattice.
ClassGroupPresentation class_group(const Fan& fan);
/// Class of a coefficient vector indexed by all of the fan's rays; coordinates outside
/// pres.rays are ignored.
DivisorClass class_of_coefficients(const ClassGroupPresentation& pres, const IntVector& coefficients);
DivisorClass divisor_class(const ToricDivisor& D, const ClassGroupPresentation& pres);

/// Rays kept on a hypersurface: those not in the relative interior of a facet of `polar`.
struct HypersurfaceRestriction {
  std::vector<std::size_t> xi0;
  ClassGroupPresentation presentation;
};
HypersurfaceRestriction restrict_to_hypersurface(const Fan& fan, const LatticePolytope& polar);

/// Global sections of O(D): lattice points m of {y : <a, y> >= -d_a} with exponent vectors
/// <a, m> + d_a. The region may be rational or lower-dimensional; `polytope` is set when it
/// is a full-dimensional lattice polytope.
struct SectionsBasis {
  ToricDivisor divisor;
  std::vector<Facet> inequalities;
  std::optional<LatticePolytope> polytope;
  std::vector<IntVector> points;
  std::vector<IntVector> exponents;
};
SectionsBasis sections(const ToricDivisor& D);

/// m with <a, m> <= 1 for every ray a, with equality for exactly one ray. Lexicographic.
std::vector<IntVector> roots_of_rays(const std::vector<IntVector>& rays, std::size_t dim);
std::vector<IntVector> roots(const Fan& fan);
/// #rays + #roots
std::size_t aut_dimension(const Fan& fan);

}  // namespace toric
