#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// A reflexive polytope P in M, its polar in N, and a simplicial regular refinement of
/// P's normal fan with rays in the polar.
struct MirrorPair {
  LatticePolytope P;
  LatticePolytope polar;
  Fan fanX;
  std::optional<Fan> fanY;
};

/// Rays default to the nonzero points of the polar that are not interior to a facet. A
/// supplied `ray_choice` must contain those and lie among the nonzero points of the polar.
/// Rays are stored in lexicographic order.
MirrorPair make_mirror_pair(const LatticePolytope& P,
                     const std::optional<std::vector<IntVector>>& ray_choice = std::nullopt,
                     const std::optional<RatVector>& heights = std::nullopt,
                     std::uint64_t seed = 0, bool with_mirror_fan = false);

/// The pair with the roles of P and its polar exchanged, using default rays.
MirrorPair swapped(const MirrorPair& pair, std::uint64_t seed = 0);

/// Rank of the toric divisor classes restricted to the hypersurface.
std::size_t h11_toric(const MirrorPair& pair);
/// Polynomial deformations: |points of P not interior to a facet| - 1 - rank M.
std::size_t hd11_poly(const MirrorPair& pair);

enum class Dominance { Holds, Unknown };
std::string to_string(Dominance d);
/// Holds when the fan has no roots; otherwise not decided.
Dominance dominance_status(const Fan& fan);
Dominance dominance_of_rays(const std::vector<IntVector>& rays, std::size_t dim);

struct CorrespondenceEntry {
  IntVector point;
  DivisorClass monomial_class;  // deformation of the mirror hypersurface
  DivisorClass divisor_class;   // toric divisor on the hypersurface
};

struct Correspondence {
  std::vector<CorrespondenceEntry> entries;  // points in lexicographic order
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  /// Status for the polynomial family on the mirror side, whose ambient rays are the
  /// nonzero points of P not interior to a facet.
  Dominance dominance = Dominance::Unknown;
};

/// Pairs each nonzero point of the polar not interior to a facet with its class computed
/// on both sides. Throws PreconditionError("hypothesis violated") when the sides disagree.
Correspondence correspondence(const MirrorPair& pair);

struct KaehlerModuliData {
  std::size_t torus_rank = 0;
  CplCone cpl;  // in Z^xi0 / M
  bool large_radius = false;
};
KaehlerModuliData kaehler_moduli(const MirrorPair& pair);

}  // namespace toric
