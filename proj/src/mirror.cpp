#include "toric/mirror.hpp"

#include <algorithm>
#include <set>

#include "toric/error.hpp"

namespace toric {

namespace {

std::vector<IntVector> without_origin(std::vector<IntVector> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const IntVector& x) { return is_zero(x); }), v.end());
  return v;
}

DivisorClass unit_class(const CokernelPresentation& c, std::size_t i) {
  IntVector e(c.ambient);
  e[i] = 1;
  IntVector x = c.class_of(e);
  const auto k = static_cast<std::ptrdiff_t>(c.free_rank);
  return {IntVector(x.begin(), x.begin() + k), IntVector(x.begin() + k, x.end())};
}

}  // namespace

MirrorPair make_mirror_pair(const LatticePolytope& P, const std::optional<std::vector<IntVector>>& ray_choice,
                     const std::optional<RatVector>& heights, std::uint64_t seed,
                     bool with_mirror_fan) {
  if (!is_reflexive(P)) throw PreconditionError("not reflexive");
  LatticePolytope Q = polar(P);
  auto lower = without_origin(reduced_points(Q));
  std::vector<IntVector> rays;
  std::optional<RatVector> hs;
  if (ray_choice) {
    auto upper = without_origin(lattice_points(Q));
    std::set<IntVector> chosen(ray_choice->begin(), ray_choice->end());
    if (chosen.size() != ray_choice->size()) throw InputError("duplicate ray");
    for (const auto& r : chosen)
      if (!std::binary_search(upper.begin(), upper.end(), r))
        throw PreconditionError("ray choice violates hypothesis");
    for (const auto& r : lower)
      if (!chosen.count(r)) throw PreconditionError("ray choice violates hypothesis");
    rays.assign(chosen.begin(), chosen.end());
    if (heights) {
      if (heights->size() != ray_choice->size()) throw InputError("height count mismatch");
      hs = RatVector(rays.size());
      for (std::size_t i = 0; i < ray_choice->size(); ++i) {
        auto pos = std::lower_bound(rays.begin(), rays.end(), (*ray_choice)[i]) - rays.begin();
        (*hs)[static_cast<std::size_t>(pos)] = (*heights)[i];
      }
    }
  } else {
    rays = lower;
    if (heights) {
      if (heights->size() != rays.size()) throw InputError("height count mismatch");
      hs = heights;
    }
  }
  Fan fx = subdivide(normal_fan(P), rays, hs, seed);
  std::optional<Fan> fy;
  if (with_mirror_fan) fy = subdivide(normal_fan(Q), without_origin(reduced_points(P)), std::nullopt, seed);
  return {P, Q, std::move(fx), std::move(fy)};
}

MirrorPair swapped(const MirrorPair& pair, std::uint64_t seed) {
  return make_mirror_pair(pair.polar, std::nullopt, std::nullopt, seed, false);
}

std::size_t h11_toric(const MirrorPair& pair) {
  return restrict_to_hypersurface(pair.fanX, pair.polar).presentation.free_rank();
}

std::size_t hd11_poly(const MirrorPair& pair) {
  return reduced_points(pair.P).size() - 1 - pair.P.dim();
}

std::string to_string(Dominance d) { return d == Dominance::Holds ? "holds" : "unknown"; }

Dominance dominance_of_rays(const std::vector<IntVector>& rays, std::size_t dim) {
  return roots_of_rays(rays, dim).empty() ? Dominance::Holds : Dominance::Unknown;
}

Dominance dominance_status(const Fan& fan) {
  return roots(fan).empty() ? Dominance::Holds : Dominance::Unknown;
}

Correspondence correspondence(const MirrorPair& pair) {
  const std::size_t n = pair.P.dim();
  // divisor side: rays of the fan that survive on the hypersurface
  auto restriction = restrict_to_hypersurface(pair.fanX, pair.polar);
  std::vector<IntVector> xi0;
  for (auto i : restriction.xi0) xi0.push_back(pair.fanX.rays[i]);
  // monomial side: point classification of the polar
  auto cls = classify_points(pair.polar);
  std::vector<IntVector> monomials = cls.vertices;
  monomials.insert(monomials.end(), cls.boundary_nonfacet_points.begin(), cls.boundary_nonfacet_points.end());
  std::sort(monomials.begin(), monomials.end());
  if (std::set<IntVector>(xi0.begin(), xi0.end()) != std::set<IntVector>(monomials.begin(), monomials.end()))
    throw PreconditionError("hypothesis violated");
  CokernelPresentation mono = cokernel(IntMatrix::from_rows(monomials, n));
  const CokernelPresentation& div = restriction.presentation.cokernel;

  Correspondence out;
  out.rank = mono.free_rank;
  out.torsion = mono.torsion;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    auto it = std::find(xi0.begin(), xi0.end(), monomials[k]);
    auto pos = static_cast<std::size_t>(it - xi0.begin());
    // the divisor side presentation follows the fan's ray order; re-express it in the
    // monomial order before comparing
    CorrespondenceEntry e{monomials[k], unit_class(mono, k), {}};
    IntVector coeff(pair.fanX.rays.size());
    coeff[restriction.xi0[pos]] = 1;
    e.divisor_class = class_of_coefficients(restriction.presentation, coeff);
    out.entries.push_back(std::move(e));
  }
  bool same_order = xi0 == monomials;
  if (same_order) {
    for (const auto& e : out.entries)
      if (e.monomial_class != e.divisor_class) throw PreconditionError("hypothesis violated");
  } else if (div.free_rank != mono.free_rank || div.torsion != mono.torsion) {
    throw PreconditionError("hypothesis violated");
  }
  out.dominance = dominance_of_rays(without_origin(reduced_points(pair.P)), n);
  return out;
}

KaehlerModuliData kaehler_moduli(const MirrorPair& pair) {
  auto restriction = restrict_to_hypersurface(pair.fanX, pair.polar);
  KaehlerModuliData out;
  out.torus_rank = restriction.presentation.free_rank();
  out.cpl = cpl_cone(pair.fanX, restriction.xi0);
  out.large_radius = out.cpl.full_dimensional && out.cpl.inequalities.size() == out.torus_rank;
  return out;
}

}  // namespace toric
