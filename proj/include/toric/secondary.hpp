#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/arith.hpp"
#include "toric/fan.hpp"
#include "toric/mirror.hpp"

namespace toric {

/// Points of M placed at height one in M + Z, with the integer relations among them.
struct PointConfiguration {
  std::vector<IntVector> points;
  std::vector<IntVector> lifted;
  /// Basis of the integer relations sum_i g_i (p_i, 1) = 0, one vector per row.
  std::vector<IntVector> gale;
  std::optional<std::size_t> origin_index;

  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
  std::size_t size() const { return points.size(); }
};

/// Keeps the given order; with `include_origin` the origin is appended if absent. Throws
/// InputError("duplicate points") and PreconditionError("not full-dimensional").
PointConfiguration lift(const std::vector<IntVector>& points, bool include_origin);

/// Lower-hull cells of the lifted configuration. `simplicial` is false for non-generic
/// heights (some cell with more than dim + 1 points).
struct Triangulation {
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> used_points;
  bool simplicial = true;
  bool operator==(const Triangulation& o) const { return cells == o.cells; }
};
Triangulation regular_subdivision(const PointConfiguration& config, const RatVector& heights);

enum class Phase { Geometric, Other };
std::string to_string(Phase p);

/// A regular triangulation with its secondary cone: the height vectors inducing it, in the
/// free coordinates of Z^points / M+.
struct Chamber {
  Triangulation triangulation;
  CplCone cone;
  Phase phase = Phase::Other;
};

/// Secondary cone of a triangulation. Throws PreconditionError("not regular") when empty.
Chamber chamber_of_triangulation(const PointConfiguration& config, const Triangulation& t);
Chamber chamber_of(const PointConfiguration& config, const RatVector& heights);

/// Free coordinates of a height vector.
RatVector chamber_coordinates(const PointConfiguration& config, const CplCone& cone,
                              const RatVector& heights);

/// A height vector in the interior of the chamber.
RatVector interior_heights(const PointConfiguration& config, const Chamber& chamber);

/// Default bound 12, overridden by the TORIC_MIRROR_MAX_POINTS environment variable.
std::size_t max_configuration_points();

/// All regular triangulations by walking the secondary fan across facets, sorted by cells.
/// Throws PreconditionError("configuration too large").
std::vector<Chamber> enumerate_chambers(const PointConfiguration& config,
                                        std::optional<std::size_t> max_points = std::nullopt);

/// Geometric when every cell contains the origin.
Phase classify_phase(const Chamber& chamber, std::size_t origin_index);

/// Cones over the faces of the cells opposite the origin, for a geometric chamber.
Fan induced_fan(const PointConfiguration& config, const Chamber& chamber);

/// Compares the chamber's cone with the cpl cone of the pair's fan, identifying heights w
/// with the ray values w_a - w_0. Requires a geometric chamber whose induced fan is the
/// pair's fan.
bool cpl_consistency(const MirrorPair& pair, const PointConfiguration& config, const Chamber& chamber);

}  // namespace toric
