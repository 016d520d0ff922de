#include "toric/secondary.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "toric/error.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/int_matrix.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

namespace {

IntMatrix lifted_matrix(const PointConfiguration& config) {
  return IntMatrix::from_rows(config.lifted, config.dim() + 1);
}

RatVector seeded_heights(const PointConfiguration& config, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RatVector h;
  for (const auto& p : config.points)
    h.push_back(Rational(dot(p, p)) + Rational(Integer(static_cast<unsigned long>(rng() >> 44)), Integer(1UL << 24)));
  return h;
}

}  // namespace

PointConfiguration lift(const std::vector<IntVector>& points, bool include_origin) {
  if (points.empty()) throw InputError("empty configuration");
  const std::size_t n = points.front().size();
  PointConfiguration c;
  c.points = points;
  for (const auto& p : points)
    if (p.size() != n) throw InputError("points have different dimensions");
  if (std::set<IntVector>(points.begin(), points.end()).size() != points.size())
    throw InputError("duplicate points");
  IntVector zero(n);
  auto it = std::find(c.points.begin(), c.points.end(), zero);
  if (it == c.points.end() && include_origin) {
    c.points.push_back(zero);
    it = c.points.end() - 1;
  }
  if (it != c.points.end()) c.origin_index = static_cast<std::size_t>(it - c.points.begin());
  for (const auto& p : c.points) {
    IntVector q = p;
    q.push_back(1);
    c.lifted.push_back(std::move(q));
  }
  if (rank(c.lifted, n + 1) != n + 1) throw PreconditionError("not full-dimensional");
  c.gale = integer_kernel(IntMatrix::from_columns(c.lifted, n + 1));
  return c;
}

Triangulation regular_subdivision(const PointConfiguration& config, const RatVector& heights) {
  if (heights.size() != config.size()) throw InputError("height count mismatch");
  Triangulation t;
  t.cells = lower_cells(config.lifted, heights);
  std::set<std::size_t> used;
  for (const auto& cell : t.cells) {
    if (cell.size() != config.dim() + 1) t.simplicial = false;
    used.insert(cell.begin(), cell.end());
  }
  t.used_points.assign(used.begin(), used.end());
  return t;
}

std::string to_string(Phase p) { return p == Phase::Geometric ? "geometric" : "other"; }

Phase classify_phase(const Chamber& chamber, std::size_t origin_index) {
  for (const auto& cell : chamber.triangulation.cells)
    if (!std::binary_search(cell.begin(), cell.end(), origin_index)) return Phase::Other;
  return Phase::Geometric;
}

Chamber chamber_of_triangulation(const PointConfiguration& config, const Triangulation& t) {
  if (!t.simplicial) throw PreconditionError("non-generic heights");
  const std::size_t n = config.dim();
  const std::size_t N = config.size();
  std::vector<IntVector> rows;

  // interior walls: two cells sharing n points, with the circuit on their n + 2 points
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> faces;
  for (std::size_t c = 0; c < t.cells.size(); ++c)
    for (std::size_t j = 0; j <= n; ++j) {
      std::vector<std::size_t> face;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != j) face.push_back(t.cells[c][k]);
      faces[face].push_back(c);
    }
  for (const auto& [face, cells] : faces) {
    if (cells.size() != 2) continue;
    auto opposite = [&](std::size_t c) {
      for (auto i : t.cells[c])
        if (!std::binary_search(face.begin(), face.end(), i)) return i;
      throw Error("chamber: no opposite point");
    };
    std::size_t b = opposite(cells[0]), e = opposite(cells[1]);
    std::vector<IntVector> cols;
    for (auto i : face) cols.push_back(config.lifted[i]);
    cols.push_back(config.lifted[b]);
    cols.push_back(config.lifted[e]);
    auto ker = integer_kernel(IntMatrix::from_columns(cols, n + 1));
    if (ker.size() != 1) throw Error("chamber: degenerate wall");
    IntVector lambda = ker[0];
    if (lambda[n] < 0) lambda = -lambda;
    IntVector row(N);
    for (std::size_t k = 0; k < n; ++k) row[face[k]] = lambda[k];
    row[b] = lambda[n];
    row[e] = lambda[n + 1];
    rows.push_back(std::move(row));
  }

  // unused points lie strictly above the piecewise linear interpolation
  std::set<std::size_t> used(t.used_points.begin(), t.used_points.end());
  for (std::size_t p = 0; p < N; ++p) {
    if (used.count(p)) continue;
    bool placed = false;
    for (const auto& cell : t.cells) {
      std::vector<IntVector> cols;
      for (auto i : cell) cols.push_back(config.lifted[i]);
      auto mu = solve_rational(IntMatrix::from_columns(cols, n + 1), to_rational(config.lifted[p]));
      if (!mu || !std::all_of(mu->begin(), mu->end(), [](const Rational& q) { return q >= 0; })) continue;
      RatVector r(N);
      r[p] = 1;
      for (std::size_t k = 0; k < cell.size(); ++k) r[cell[k]] -= (*mu)[k];
      rows.push_back(primitive(clear_denominators(r)));
      placed = true;
      break;
    }
    if (!placed) throw Error("chamber: point outside every cell");
  }

  Chamber ch;
  ch.triangulation = t;
  ch.cone.ambient = cokernel(lifted_matrix(config));
  std::set<IntVector> coords;
  for (const auto& r : rows) {
    auto c = ch.cone.ambient.functional_coordinates(to_rational(r));
    if (!c) throw Error("chamber: relation does not vanish on linear functions");
    IntVector v = primitive(clear_denominators(*c));
    if (!is_zero(v)) coords.insert(std::move(v));
  }
  ConeFacets f = irredundant_by_lp({coords.begin(), coords.end()}, ch.cone.ambient.free_rank);
  ch.cone.inequalities = std::move(f.inequalities);
  ch.cone.equations = std::move(f.equations);
  ch.cone.full_dimensional = ch.cone.equations.empty();
  if (!ch.cone.full_dimensional) throw PreconditionError("not regular");
  if (config.origin_index) ch.phase = classify_phase(ch, *config.origin_index);
  return ch;
}

Chamber chamber_of(const PointConfiguration& config, const RatVector& heights) {
  Triangulation t = regular_subdivision(config, heights);
  if (!t.simplicial) throw PreconditionError("non-generic heights");
  return chamber_of_triangulation(config, t);
}

RatVector chamber_coordinates(const PointConfiguration& config, const CplCone& cone,
                              const RatVector& heights) {
  if (heights.size() != config.size()) throw InputError("height count mismatch");
  RatVector x(cone.ambient.free_rank);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t j = 0; j < heights.size(); ++j) x[k] += Rational(cone.ambient.projection(k, j)) * heights[j];
  return x;
}

RatVector interior_heights(const PointConfiguration& config, const Chamber& chamber) {
  const auto& amb = chamber.cone.ambient;
  const std::size_t k = amb.free_rank;
  std::vector<LinearInequality> sys;
  for (const auto& a : chamber.cone.inequalities) sys.push_back({to_rational(a), 0, Relation::Positive});
  auto x = lp_feasible_strict(sys, k);
  if (!x) throw PreconditionError("not regular");
  std::vector<RatVector> F(k, RatVector(config.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < config.size(); ++j) F[i][j] = amb.projection(i, j);
  auto w = solve_rational(F, *x, config.size());
  if (!w) throw Error("interior_heights: projection not surjective");
  return *w;
}

std::size_t max_configuration_points() {
  if (const char* s = std::getenv("TORIC_MIRROR_MAX_POINTS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 12;
}

std::vector<Chamber> enumerate_chambers(const PointConfiguration& config,
                                        std::optional<std::size_t> max_points) {
  const std::size_t bound = max_points ? *max_points : max_configuration_points();
  if (config.size() > bound) throw PreconditionError("configuration too large");
  const std::size_t N = config.size();

  Chamber start;
  bool have_start = false;
  for (std::uint64_t seed = 0; seed < 64 && !have_start; ++seed) {
    Triangulation t = regular_subdivision(config, seeded_heights(config, seed));
    if (!t.simplicial) continue;
    start = chamber_of_triangulation(config, t);
    have_start = true;
  }
  if (!have_start) throw Error("enumerate_chambers: no generic starting heights");

  const CokernelPresentation& amb = start.cone.ambient;
  const std::size_t k = amb.free_rank;
  // a section of the free projection: heights with prescribed free coordinates
  std::vector<RatVector> F(k, RatVector(N));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < N; ++j) F[i][j] = amb.projection(i, j);
  auto heights_of = [&](const RatVector& x) {
    auto w = solve_rational(F, x, N);
    if (!w) throw Error("enumerate_chambers: projection not surjective");
    return *w;
  };
  auto strict_point = [&](const CplCone& cone, std::optional<std::size_t> on_facet) {
    std::vector<LinearInequality> sys;
    for (std::size_t i = 0; i < cone.inequalities.size(); ++i) {
      RatVector a = to_rational(cone.inequalities[i]);
      if (on_facet && *on_facet == i) {
        sys.push_back({a, 0, Relation::NonNegative});
        RatVector neg = a;
        for (auto& q : neg) q = -q;
        sys.push_back({neg, 0, Relation::NonNegative});
      } else {
        sys.push_back({a, 0, Relation::Positive});
      }
    }
    auto x = lp_feasible_strict(sys, k);
    if (!x) throw Error("enumerate_chambers: empty facet interior");
    return *x;
  };

  std::map<std::vector<std::vector<std::size_t>>, Chamber> found;
  std::vector<std::vector<std::vector<std::size_t>>> queue{start.triangulation.cells};
  found.emplace(start.triangulation.cells, start);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Chamber current = found.at(queue[qi]);
    const CplCone& cone = current.cone;
    if (cone.inequalities.empty()) continue;
    RatVector inside = strict_point(cone, std::nullopt);
    for (std::size_t f = 0; f < cone.inequalities.size(); ++f) {
      RatVector on = strict_point(cone, f);
      Rational eps = 1;
      bool crossed = false;
      for (int attempt = 0; attempt < 200 && !crossed; ++attempt, eps /= 2) {
        RatVector x(k);
        for (std::size_t j = 0; j < k; ++j) x[j] = on[j] - eps * (inside[j] - on[j]);
        Triangulation t = regular_subdivision(config, heights_of(x));
        if (!t.simplicial || t.cells == current.triangulation.cells) continue;
        auto it = found.find(t.cells);
        if (it == found.end()) {
          Chamber next = chamber_of_triangulation(config, t);
          // only accept the chamber on the other side of this facet
          if (!next.cone.contains_coordinates(on)) continue;
          it = found.emplace(t.cells, std::move(next)).first;
          queue.push_back(t.cells);
        } else if (!it->second.cone.contains_coordinates(on)) {
          continue;
        }
        crossed = true;
      }
      if (!crossed) throw Error("enumerate_chambers: could not cross a facet");
    }
  }
  std::vector<Chamber> out;
  for (auto& [cells, ch] : found) out.push_back(std::move(ch));
  return out;
}

Fan induced_fan(const PointConfiguration& config, const Chamber& chamber) {
  if (!config.origin_index) throw PreconditionError("origin not in configuration");
  const std::size_t o = *config.origin_index;
  if (classify_phase(chamber, o) != Phase::Geometric) throw PreconditionError("chamber not geometric");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (i != o) rays.push_back(config.points[i]);
  std::sort(rays.begin(), rays.end());
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& cell : chamber.triangulation.cells) {
    std::vector<std::size_t> cone;
    for (auto i : cell)
      if (i != o) cone.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), config.points[i]) - rays.begin()));
    cones.push_back(std::move(cone));
  }
  LatticeTag tag{LatticeName::M, config.dim()};
  return make_fan(tag, rays, cones);
}

bool cpl_consistency(const MirrorPair& pair, const PointConfiguration& config, const Chamber& chamber) {
  Fan induced = induced_fan(config, chamber);
  const Fan& fan = pair.fanX;
  auto cone_sets = [](const Fan& f) {
    std::set<std::set<IntVector>> out;
    for (const auto& c : f.max_cones) {
      std::set<IntVector> s;
      for (auto i : c) s.insert(f.rays[i]);
      out.insert(std::move(s));
    }
    return out;
  };
  if (cone_sets(induced) != cone_sets(fan)) throw PreconditionError("fan does not match chamber");

  CplCone fan_side = cpl_cone(fan);
  // chamber rows as functionals on heights, then on ray values by dropping the origin
  const std::size_t o = *config.origin_index;
  const auto& amb = chamber.cone.ambient;
  std::vector<RatVector> F(amb.free_rank, RatVector(config.size()));
  for (std::size_t i = 0; i < amb.free_rank; ++i)
    for (std::size_t j = 0; j < config.size(); ++j) F[i][j] = amb.projection(i, j);
  auto to_fan = [&](const IntVector& c) {
    RatVector ell(config.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < config.size(); ++j) ell[j] += Rational(c[i]) * F[i][j];
    RatVector on_rays(fan.rays.size());
    for (std::size_t j = 0; j < config.size(); ++j) {
      if (j == o) continue;
      auto r = fan.ray_index(config.points[j]);
      if (!r) throw PreconditionError("fan does not match chamber");
      on_rays[*r] = ell[j];
    }
    auto coords = fan_side.ambient.functional_coordinates(on_rays);
    if (!coords) throw Error("cpl_consistency: functional does not descend");
    return primitive(clear_denominators(*coords));
  };
  std::vector<IntVector> ineq;
  for (const auto& c : chamber.cone.inequalities) ineq.push_back(to_fan(c));
  for (const auto& e : chamber.cone.equations) {
    ineq.push_back(to_fan(e));
    ineq.push_back(-to_fan(e));
  }
  ConeFacets mapped = irredundant_by_lp(ineq, fan_side.ambient.free_rank);
  return mapped.inequalities == fan_side.inequalities && mapped.equations == fan_side.equations;
}

}  // namespace toric
