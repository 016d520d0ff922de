#include "toric/divisor.hpp"

#include <algorithm>

#include "toric/error.hpp"
#include "toric/int_matrix.hpp"

namespace toric {

ToricDivisor make_divisor(const Fan& fan, IntVector coefficients) {
  if (coefficients.size() != fan.rays.size()) throw InputError("coefficient count mismatch");
  return {fan, std::move(coefficients)};
}

ToricDivisor anticanonical(const Fan& fan) { return {fan, IntVector(fan.rays.size(), 1)}; }

ToricDivisor principal_divisor(const Fan& fan, const IntVector& m) {
  if (m.size() != fan.dim()) throw InputError("character has wrong dimension");
  IntVector c;
  for (const auto& a : fan.rays) c.push_back(dot(a, m));
  return {fan, std::move(c)};
}

bool DivisorClass::is_zero() const {
  return toric::is_zero(free) && toric::is_zero(torsion);
}

ClassGroupPresentation class_group(const Fan& fan) {
  if (rank(fan.rays, fan.dim()) != fan.dim()) throw PreconditionError("rays do not span");
  ClassGroupPresentation p;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) p.rays.push_back(i);
  p.cokernel = cokernel(IntMatrix::from_rows(fan.rays, fan.dim()));
  return p;
}

DivisorClass class_of_coefficients(const ClassGroupPresentation& pres, const IntVector& coefficients) {
  IntVector x;
  for (auto i : pres.rays) {
    if (i >= coefficients.size()) throw InputError("coefficient count mismatch");
    x.push_back(coefficients[i]);
  }
  IntVector c = pres.cokernel.class_of(x);
  const auto k = static_cast<std::ptrdiff_t>(pres.cokernel.free_rank);
  return {IntVector(c.begin(), c.begin() + k), IntVector(c.begin() + k, c.end())};
}

DivisorClass divisor_class(const ToricDivisor& D, const ClassGroupPresentation& pres) {
  return class_of_coefficients(pres, D.coefficients);
}

HypersurfaceRestriction restrict_to_hypersurface(const Fan& fan, const LatticePolytope& polar) {
  if (polar.dim() != fan.dim()) throw InputError("dimension mismatch");
  HypersurfaceRestriction out;
  std::vector<IntVector> kept;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const IntVector& a = fan.rays[i];
    if (!polar.contains(a)) throw PreconditionError("ray outside polar polytope");
    std::size_t tight = 0;
    for (const auto& f : polar.facets())
      if (f.evaluate(a) == 0) ++tight;
    if (tight == 1) continue;
    out.xi0.push_back(i);
    kept.push_back(a);
  }
  out.presentation.rays = out.xi0;
  out.presentation.cokernel = cokernel(IntMatrix::from_rows(kept, fan.dim()));
  return out;
}

SectionsBasis sections(const ToricDivisor& D) {
  const Fan& fan = D.fan;
  if (D.coefficients.size() != fan.rays.size()) throw InputError("coefficient count mismatch");
  SectionsBasis out{D, {}, std::nullopt, {}, {}};
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    out.inequalities.push_back({fan.rays[i], D.coefficients[i]});
  PolyhedronVertices pv = polyhedron_vertices(out.inequalities, fan.dim());
  if (pv.empty) return out;
  if (!pv.bounded) throw PreconditionError("unbounded sections polytope");
  out.points = lattice_points(out.inequalities, fan.dim());
  for (const auto& m : out.points) {
    IntVector e;
    for (const auto& f : out.inequalities) e.push_back(f.evaluate(m));
    out.exponents.push_back(std::move(e));
  }
  bool integral = std::all_of(pv.vertices.begin(), pv.vertices.end(),
                              [](const RatVector& v) { return is_integral(v); });
  if (integral) {
    std::vector<IntVector> verts;
    for (const auto& v : pv.vertices) verts.push_back(to_integral(v));
    try {
      out.polytope = hull(verts, fan.lattice.dual());
    } catch (const PreconditionError&) {
      // lower-dimensional
    }
  }
  return out;
}

std::vector<IntVector> roots_of_rays(const std::vector<IntVector>& rays, std::size_t dim) {
  std::vector<Facet> ineq;
  for (const auto& a : rays) ineq.push_back({-a, 1});
  std::vector<IntVector> out;
  for (const auto& m : lattice_points(ineq, dim)) {
    std::size_t tight = 0;
    for (const auto& f : ineq)
      if (f.evaluate(m) == 0) ++tight;
    if (tight == 1) out.push_back(m);
  }
  return out;
}

std::vector<IntVector> roots(const Fan& fan) {
  if (!fan.complete) throw PreconditionError("fan not complete");
  return roots_of_rays(fan.rays, fan.dim());
}

std::size_t aut_dimension(const Fan& fan) { return fan.rays.size() + roots(fan).size(); }

}  // namespace toric
