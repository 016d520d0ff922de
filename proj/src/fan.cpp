#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "toric/error.hpp"
#include "toric/int_matrix.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

RatVector functional_on(const std::vector<IntVector>& rays, const RatVector& values,
                        std::size_t dim) {
  std::vector<RatVector> rows;
  for (const auto& r : rays) rows.push_back(to_rational(r));
  auto u = solve_rational(rows, values, dim);
  if (!u) throw PreconditionError("no linear functional on cone");
  return *u;
}

// Deterministic value in [0, 1) from the seed and the point.
Rational jitter(std::uint64_t seed, const IntVector& p) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (const auto& x : p) words.push_back(static_cast<std::uint32_t>(x.get_si()));
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 rng(seq);
  return Rational(Integer(static_cast<unsigned long>(rng() >> 44)), Integer(1UL << 20));
}

bool cones_meet_properly(const std::vector<IntVector>& rays, const std::vector<std::size_t>& a,
                         const std::vector<std::size_t>& b, std::size_t dim) {
  std::vector<LinearInequality> sys;
  auto push = [&](const IntVector& r, int sign, Relation rel) {
    RatVector c(dim);
    for (std::size_t j = 0; j < dim; ++j) c[j] = sign * Rational(r[j]);
    sys.push_back({c, 0, rel});
  };
  for (auto i : a) {
    if (std::binary_search(b.begin(), b.end(), i)) {
      push(rays[i], 1, Relation::NonNegative);
      push(rays[i], -1, Relation::NonNegative);
    } else {
      push(rays[i], 1, Relation::Positive);
    }
  }
  for (auto i : b)
    if (!std::binary_search(a.begin(), a.end(), i)) push(rays[i], -1, Relation::Positive);
  return lp_feasible_strict(sys, dim).has_value();
}

bool detect_complete(const Fan& f) {
  const std::size_t n = f.dim();
  std::map<std::vector<std::size_t>, int> faces;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    Cone cone = f.cone(c);
    if (cone.dim != n) return false;
    const auto& idx = f.max_cones[c];
    if (cone.simplicial) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        std::vector<std::size_t> face;
        for (std::size_t k = 0; k < idx.size(); ++k)
          if (k != j) face.push_back(idx[k]);
        ++faces[face];
      }
    } else {
      ConeFacets cf = cone_facets(cone.rays, {}, n);
      for (const auto& a : cf.inequalities) {
        std::vector<std::size_t> face;
        for (std::size_t k = 0; k < idx.size(); ++k)
          if (dot(a, cone.rays[k]) == 0) face.push_back(idx[k]);
        ++faces[face];
      }
    }
  }
  if (faces.empty()) return false;
  for (const auto& [face, count] : faces)
    if (count != 2) return false;
  return true;
}

}  // namespace

bool Cone::contains(const IntVector& x) const {
  if (rays.empty()) return is_zero(x);
  const std::size_t n = x.size();
  if (simplicial) {
    IntMatrix A = IntMatrix::from_columns(rays, n);
    auto mu = solve_rational(A, to_rational(x));
    if (!mu) return false;
    // independent columns: the solution is unique
    return std::all_of(mu->begin(), mu->end(), [](const Rational& q) { return q >= 0; });
  }
  ConeFacets f = cone_facets(rays, {}, n);
  for (const auto& e : f.equations)
    if (dot(e, x) != 0) return false;
  for (const auto& a : f.inequalities)
    if (dot(a, x) < 0) return false;
  return true;
}

Cone Fan::cone(std::size_t i) const {
  Cone c;
  for (auto r : max_cones.at(i)) c.rays.push_back(rays[r]);
  c.dim = rank(c.rays, dim());
  c.simplicial = c.dim == c.rays.size();
  return c;
}

bool Fan::simplicial() const {
  for (std::size_t i = 0; i < max_cones.size(); ++i)
    if (!cone(i).simplicial) return false;
  return true;
}

std::optional<std::size_t> Fan::ray_index(const IntVector& v) const {
  auto it = std::find(rays.begin(), rays.end(), v);
  if (it == rays.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rays.begin());
}

Fan make_fan(LatticeTag lattice, std::vector<IntVector> rays,
             std::vector<std::vector<std::size_t>> max_cones, std::optional<RatVector> heights) {
  const std::size_t n = lattice.rank;
  for (const auto& r : rays) {
    if (r.size() != n) throw InputError("ray has wrong dimension");
    if (is_zero(r) || !is_primitive(r)) throw InputError("ray not primitive");
  }
  {
    std::set<IntVector> seen(rays.begin(), rays.end());
    if (seen.size() != rays.size()) throw InputError("duplicate ray");
  }
  if (heights && heights->size() != rays.size()) throw InputError("height count mismatch");
  std::vector<bool> used(rays.size(), false);
  for (auto& c : max_cones) {
    if (c.empty()) throw InputError("empty cone");
    for (auto i : c) {
      if (i >= rays.size()) throw InputError("ray index out of range");
      used[i] = true;
    }
    c = sorted_unique(std::move(c));
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw InputError("ray not in any cone");
  std::sort(max_cones.begin(), max_cones.end());
  if (std::adjacent_find(max_cones.begin(), max_cones.end()) != max_cones.end())
    throw InputError("duplicate cone");

  Fan f{lattice, std::move(rays), std::move(max_cones), false, std::move(heights)};
  if (f.rays.size() <= 32) {
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
      for (std::size_t j = i + 1; j < f.max_cones.size(); ++j)
        if (!cones_meet_properly(f.rays, f.max_cones[i], f.max_cones[j], n))
          throw PreconditionError("cones do not form a fan");
  }
  f.complete = detect_complete(f);
  return f;
}

Fan normal_fan(const LatticePolytope& P) {
  Fan f;
  f.lattice = P.lattice().dual();
  RatVector h;
  for (const auto& facet : P.facets()) {
    f.rays.push_back(facet.normal);
    h.push_back(facet.offset);
  }
  for (const auto& v : P.vertices()) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < P.facets().size(); ++i)
      if (P.facets()[i].evaluate(v) == 0) cone.push_back(i);
    f.max_cones.push_back(std::move(cone));
  }
  f.complete = true;
  f.heights = std::move(h);
  return f;
}

std::vector<Wall> walls(const Fan& fan) {
  const std::size_t n = fan.dim();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> faces;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& idx = fan.max_cones[c];
    if (idx.size() != n || rank(fan.cone(c).rays, n) != n)
      throw PreconditionError("fan not simplicial");
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> face;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) face.push_back(idx[k]);
      faces[face].push_back(c);
    }
  }
  std::vector<Wall> out;
  for (const auto& [face, cones] : faces) {
    if (cones.size() == 1) continue;
    if (cones.size() > 2) throw PreconditionError("cones do not form a fan");
    auto other = [&](std::size_t c) {
      for (auto i : fan.max_cones[c])
        if (!std::binary_search(face.begin(), face.end(), i)) return i;
      throw Error("wall: no opposite ray");
    };
    std::size_t b = other(cones[0]), c = other(cones[1]);
    std::vector<IntVector> cols;
    for (auto i : face) cols.push_back(fan.rays[i]);
    cols.push_back(fan.rays[b]);
    cols.push_back(fan.rays[c]);
    auto ker = integer_kernel(IntMatrix::from_columns(cols, n));
    if (ker.size() != 1) throw PreconditionError("degenerate wall");
    IntVector lambda = ker[0];
    if (lambda[n - 1] < 0) lambda = -lambda;
    if (lambda[n - 1] == 0 || lambda[n] <= 0) throw PreconditionError("cones do not form a fan");
    Wall w{cones[0], cones[1], IntVector(fan.rays.size())};
    for (std::size_t k = 0; k + 1 < n; ++k) w.relation[face[k]] = lambda[k];
    w.relation[b] = lambda[n - 1];
    w.relation[c] = lambda[n];
    out.push_back(std::move(w));
  }
  return out;
}

bool strictly_convex_on(const Fan& fan, const std::vector<Wall>& ws, const RatVector& eta) {
  if (eta.size() != fan.rays.size()) throw InputError("height count mismatch");
  for (const auto& w : ws) {
    Rational s = 0;
    for (std::size_t i = 0; i < eta.size(); ++i)
      if (w.relation[i] != 0) s += Rational(w.relation[i]) * eta[i];
    if (s <= 0) return false;
  }
  return true;
}

Fan subdivide(const Fan& fan, const std::vector<IntVector>& ray_set,
              const std::optional<RatVector>& heights, std::uint64_t seed) {
  const std::size_t n = fan.dim();
  for (const auto& p : ray_set) {
    if (p.size() != n) throw InputError("ray has wrong dimension");
    if (is_zero(p) || !is_primitive(p)) throw InputError("ray not primitive");
  }
  if (std::set<IntVector>(ray_set.begin(), ray_set.end()).size() != ray_set.size())
    throw InputError("duplicate ray");
  if (heights && heights->size() != ray_set.size()) throw InputError("height count mismatch");
  for (const auto& r : fan.rays)
    if (std::find(ray_set.begin(), ray_set.end(), r) == ray_set.end())
      throw PreconditionError("ray set must contain the fan's rays");

  std::vector<Cone> cones;
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
    cones.push_back(fan.cone(i));
    if (cones.back().dim != n) throw PreconditionError("maximal cone not full-dimensional");
  }
  std::vector<std::vector<std::size_t>> members(cones.size());
  std::vector<std::size_t> home(ray_set.size(), cones.size());
  for (std::size_t p = 0; p < ray_set.size(); ++p) {
    for (std::size_t i = 0; i < cones.size(); ++i) {
      if (!cones[i].contains(ray_set[p])) continue;
      members[i].push_back(p);
      if (home[p] == cones.size()) home[p] = i;
    }
    if (home[p] == cones.size()) throw PreconditionError("point outside support");
  }

  // ell: a positive function, linear on the input cones, strictly convex when the input is
  // regular.
  RatVector base;
  if (fan.heights)
    base = *fan.heights;
  else if (fan.simplicial())
    base = RatVector(fan.rays.size(), Rational(1));
  else
    throw PreconditionError("fan has no convexity certificate");
  std::vector<RatVector> u;
  for (const auto& c : fan.max_cones) {
    std::vector<IntVector> rays;
    RatVector vals;
    for (auto r : c) {
      rays.push_back(fan.rays[r]);
      vals.push_back(base[r]);
    }
    u.push_back(functional_on(rays, vals, n));
  }
  if (fan.complete && !u.empty()) {
    RatVector avg(n);
    for (const auto& x : u)
      for (std::size_t j = 0; j < n; ++j) avg[j] += x[j];
    for (auto& x : u)
      for (std::size_t j = 0; j < n; ++j) x[j] -= avg[j] / Rational(static_cast<long>(u.size()));
  }
  RatVector ell(ray_set.size());
  for (std::size_t p = 0; p < ray_set.size(); ++p) {
    ell[p] = dot(ray_set[p], u[home[p]]);
    if (ell[p] <= 0) throw PreconditionError("fan not regular");
  }

  auto perturbation = [&](int attempt) {
    if (heights) return *heights;
    Rational delta(1, 1024);
    RatVector g(ray_set.size());
    for (int k = 0; k < attempt; ++k) delta /= 2;
    for (std::size_t p = 0; p < ray_set.size(); ++p) {
      Rational sq = Rational(dot(ray_set[p], ray_set[p]));
      g[p] = sq / ell[p] + delta * ell[p] * jitter(seed + static_cast<std::uint64_t>(attempt), ray_set[p]);
    }
    return g;
  };

  std::set<std::vector<std::size_t>> cells;
  RatVector g;
  bool found = false;
  const int attempts = heights ? 1 : 24;
  for (int attempt = 0; attempt < attempts && !found; ++attempt) {
    g = perturbation(attempt);
    cells.clear();
    bool generic = true;
    std::vector<bool> used(ray_set.size(), false);
    for (std::size_t i = 0; i < cones.size() && generic; ++i) {
      const auto& mem = members[i];
      if (cones[i].simplicial && mem.size() == n) {
        cells.insert(sorted_unique(mem));
        for (auto p : mem) used[p] = true;
        continue;
      }
      std::vector<IntVector> vecs;
      RatVector hs;
      for (auto p : mem) {
        vecs.push_back(ray_set[p]);
        hs.push_back(g[p]);
      }
      for (const auto& local : lower_cells(vecs, hs)) {
        if (local.size() != n) {
          generic = false;
          break;
        }
        std::vector<std::size_t> cell;
        for (auto k : local) {
          cell.push_back(mem[k]);
          used[mem[k]] = true;
        }
        cells.insert(sorted_unique(std::move(cell)));
      }
    }
    if (!generic) {
      if (heights) throw PreconditionError("heights not generic");
      continue;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      if (heights) throw PreconditionError("heights leave a ray unused");
      continue;
    }
    found = true;
  }
  if (!found) throw Error("subdivide: no generic lift found");

  Fan out{fan.lattice, ray_set, {cells.begin(), cells.end()}, fan.complete, std::nullopt};
  auto ws = walls(out);
  Rational eps = 1;
  RatVector eta(ray_set.size());
  bool certified = false;
  for (int k = 0; k < 64 && !certified; ++k, eps /= 2) {
    for (std::size_t p = 0; p < ray_set.size(); ++p) eta[p] = ell[p] + eps * g[p];
    certified = strictly_convex_on(out, ws, eta);
  }
  if (!certified) {
    std::vector<LinearInequality> sys;
    for (const auto& w : ws) sys.push_back({to_rational(w.relation), 0, Relation::Positive});
    auto x = lp_feasible_strict(sys, ray_set.size());
    if (!x) throw PreconditionError("subdivision not regular");
    eta = *x;
  }
  if (ray_set.size() <= 32) return make_fan(out.lattice, out.rays, out.max_cones, eta);
  out.heights = eta;
  return out;
}

Rational SupportFunction::evaluate(const IntVector& x) const {
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
    if (fan.cone(i).contains(x)) return dot(x, functionals[i]);
  throw PreconditionError("point outside support");
}

SupportFunction support_function(const Fan& fan, const IntVector& coefficients) {
  if (coefficients.size() != fan.rays.size()) throw InputError("coefficient count mismatch");
  SupportFunction sf{fan, -coefficients, {}};
  for (const auto& c : fan.max_cones) {
    std::vector<IntVector> rays;
    RatVector vals;
    for (auto r : c) {
      rays.push_back(fan.rays[r]);
      vals.push_back(Rational(sf.values[r]));
    }
    try {
      sf.functionals.push_back(functional_on(rays, vals, fan.dim()));
    } catch (const PreconditionError&) {
      throw PreconditionError("divisor not Q-Cartier");
    }
  }
  return sf;
}

bool is_cartier(const SupportFunction& sf) {
  return std::all_of(sf.functionals.begin(), sf.functionals.end(),
                     [](const RatVector& u) { return is_integral(u); });
}

Integer cartier_index(const SupportFunction& sf) {
  Integer k = 1;
  for (const auto& u : sf.functionals) {
    Integer d = lcm_of_denominators(u);
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
  }
  return k;
}

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::StrictlyConvex:
      return "strictly_convex";
    case Convexity::Convex:
      return "convex";
    case Convexity::NotConvex:
      return "not_convex";
  }
  return "not_convex";
}

Convexity convexity(const SupportFunction& sf, bool negate) {
  const Fan& fan = sf.fan;
  const int sign = negate ? -1 : 1;
  bool strict = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& idx = fan.max_cones[c];
    for (std::size_t a = 0; a < fan.rays.size(); ++a) {
      Rational eta = sign * Rational(sf.values[a]);
      Rational lin = sign * dot(fan.rays[a], sf.functionals[c]);
      if (eta < lin) return Convexity::NotConvex;
      if (eta == lin && !std::binary_search(idx.begin(), idx.end(), a)) strict = false;
    }
  }
  return strict ? Convexity::StrictlyConvex : Convexity::Convex;
}

bool CplCone::contains_coordinates(const RatVector& x) const {
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  for (const auto& a : inequalities)
    if (dot(a, x) < 0) return false;
  return true;
}

bool CplCone::contains_divisor(const IntVector& coefficients) const {
  return contains_coordinates(to_rational(ambient.free_coordinates(coefficients)));
}

CplCone cpl_cone(const Fan& fan) {
  std::vector<std::size_t> all(fan.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return cpl_cone(fan, all);
}

CplCone cpl_cone(const Fan& fan, const std::vector<std::size_t>& kept) {
  if (!fan.complete) throw PreconditionError("fan not complete");
  if (!std::is_sorted(kept.begin(), kept.end()) ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      (!kept.empty() && kept.back() >= fan.rays.size()))
    throw InputError("kept rays must be sorted distinct ray indices");
  auto ws = walls(fan);
  const std::size_t total = fan.rays.size();
  std::vector<IntVector> rows;
  for (const auto& w : ws) rows.push_back(w.relation);

  // Fourier-Motzkin: the dual of the projection is the dual cone cut by the forgotten
  // coordinates.
  std::vector<bool> keep(total, false);
  for (auto i : kept) keep[i] = true;
  for (std::size_t j = 0; j < total; ++j) {
    if (keep[j]) continue;
    std::vector<IntVector> next, pos, neg;
    for (auto& r : rows) {
      if (r[j] > 0)
        pos.push_back(std::move(r));
      else if (r[j] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) next.push_back(primitive(Integer(-n[j]) * p + Integer(p[j]) * n));
    rows = irredundant_by_lp(next, total).inequalities;
  }

  std::vector<IntVector> kept_rays;
  for (auto i : kept) kept_rays.push_back(fan.rays[i]);
  CplCone out;
  out.ambient = cokernel(IntMatrix::from_rows(kept_rays, fan.dim()));
  std::set<IntVector> coords;
  for (const auto& r : rows) {
    RatVector ell;
    for (auto i : kept) ell.push_back(r[i]);
    auto c = out.ambient.functional_coordinates(ell);
    if (!c) throw Error("cpl_cone: wall relation does not vanish on linear functions");
    IntVector v = primitive(clear_denominators(*c));
    if (!is_zero(v)) coords.insert(std::move(v));
  }
  ConeFacets f = irredundant_by_lp({coords.begin(), coords.end()}, out.ambient.free_rank);
  out.inequalities = std::move(f.inequalities);
  out.equations = std::move(f.equations);
  out.full_dimensional = out.equations.empty();
  return out;
}

}  // namespace toric
