#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/error.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

std::string to_string(LatticeName name) { return name == LatticeName::M ? "M" : "N"; }

namespace {

std::size_t affine_rank(const std::vector<IntVector>& pts) {
  if (pts.empty()) return 0;
  std::vector<IntVector> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    IntVector r = p;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  return rank(rows, pts.front().size() + 1);
}

}  // namespace

LatticePolytope::LatticePolytope(LatticeTag lattice, std::vector<IntVector> vertices,
                                 std::vector<Facet> facets)
    : lattice_(lattice), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  const std::size_t d = lattice_.rank;
  for (const auto& v : vertices_) {
    std::vector<IntVector> tight;
    for (const auto& f : facets_) {
      Integer s = f.evaluate(v);
      if (s < 0) throw Error("polytope: vertex violates a facet");
      if (s == 0) tight.push_back(f.normal);
    }
    if (rank(tight, d) != d) throw Error("polytope: listed vertex is not extreme");
  }
  for (const auto& f : facets_) {
    if (!is_primitive(f.normal)) throw Error("polytope: facet normal not primitive");
    std::vector<IntVector> on;
    for (const auto& v : vertices_)
      if (f.evaluate(v) == 0) on.push_back(v);
    if (affine_rank(on) != d) throw Error("polytope: facet does not span a hyperplane");
  }
}

bool LatticePolytope::contains(const IntVector& y) const {
  for (const auto& f : facets_)
    if (f.evaluate(y) < 0) return false;
  return true;
}

bool LatticePolytope::origin_interior() const {
  for (const auto& f : facets_)
    if (f.offset <= 0) return false;
  return true;
}

LatticePolytope hull(const std::vector<IntVector>& points_in, LatticeTag lattice) {
  const std::size_t d = lattice.rank;
  if (d == 0) throw InputError("hull: lattice rank must be positive");
  for (const auto& p : points_in)
    if (p.size() != d) throw InputError("hull: point dimension does not match lattice rank");
  std::vector<IntVector> points = points_in;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (affine_rank(points) != d + 1) throw PreconditionError("not full-dimensional");

  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    IntVector r = p;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  ConeGenerators g = cone_generators(rows, d + 1);
  if (!g.lineality.empty()) throw PreconditionError("not full-dimensional");

  std::vector<Facet> facets;
  for (auto& ray : g.rays) {
    Facet f;
    f.offset = ray.back();
    ray.pop_back();
    f.normal = std::move(ray);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

  std::vector<IntVector> vertices;
  for (const auto& p : points) {
    std::vector<IntVector> tight;
    for (const auto& f : facets)
      if (f.evaluate(p) == 0) tight.push_back(f.normal);
    if (rank(tight, d) == d) vertices.push_back(p);
  }
  return LatticePolytope(lattice, std::move(vertices), std::move(facets));
}

PolyhedronVertices polyhedron_vertices(const std::vector<Facet>& inequalities, std::size_t dim) {
  std::vector<IntVector> rows;
  for (const auto& f : inequalities) {
    if (f.normal.size() != dim) throw InputError("inequality dimension mismatch");
    IntVector r = f.normal;
    r.push_back(f.offset);
    rows.push_back(std::move(r));
  }
  IntVector t(dim + 1);
  t[dim] = 1;
  rows.push_back(t);
  ConeGenerators g = cone_generators(rows, dim + 1);

  PolyhedronVertices out;
  bool has_direction = !g.lineality.empty();
  for (const auto& ray : g.rays) {
    if (ray[dim] == 0) {
      has_direction = true;
      continue;
    }
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(ray[i], ray[dim]);
    for (auto& x : v) x.canonicalize();
    out.vertices.push_back(std::move(v));
  }
  out.empty = out.vertices.empty();
  out.bounded = out.empty || !has_direction;
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

LatticePolytope from_inequalities(const std::vector<Facet>& inequalities, LatticeTag lattice) {
  PolyhedronVertices pv = polyhedron_vertices(inequalities, lattice.rank);
  if (pv.empty) throw PreconditionError("empty polytope");
  if (!pv.bounded) throw PreconditionError("unbounded");
  std::vector<IntVector> verts;
  for (const auto& v : pv.vertices) {
    if (!is_integral(v)) throw PreconditionError("polytope has non-integral vertices");
    verts.push_back(to_integral(v));
  }
  return hull(verts, lattice);
}

std::vector<RatVector> polar_vertices(const LatticePolytope& P) {
  if (!P.origin_interior()) throw PreconditionError("origin not interior");
  std::vector<RatVector> out;
  for (const auto& f : P.facets()) {
    RatVector v(f.normal.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = Rational(f.normal[i], f.offset);
      v[i].canonicalize();
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope polar(const LatticePolytope& P) {
  std::vector<IntVector> verts;
  for (const auto& v : polar_vertices(P)) {
    if (!is_integral(v)) throw PreconditionError("polar not integral");
    verts.push_back(to_integral(v));
  }
  return hull(verts, P.lattice().dual());
}

bool is_reflexive(const LatticePolytope& P) {
  for (const auto& f : P.facets())
    if (f.offset != 1) return false;
  return true;
}

namespace {

void enumerate_points(const std::vector<Facet>& F, const IntVector& lo, const IntVector& hi,
                      const std::vector<IntVector>& suffix_max, IntVector& x, std::size_t k,
                      std::vector<IntVector>& out) {
  const std::size_t d = lo.size();
  if (k == d) {
    for (const auto& f : F)
      if (f.evaluate(x) < 0) return;
    out.push_back(x);
    return;
  }
  Integer L = lo[k], H = hi[k];
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto& a = F[i].normal;
    Integer s = F[i].offset + suffix_max[i][k + 1];
    for (std::size_t j = 0; j < k; ++j) s += a[j] * x[j];
    // a_k x_k + s >= 0 is necessary
    if (a[k] > 0) {
      Integer b = ceil_div(-s, a[k]);
      if (b > L) L = b;
    } else if (a[k] < 0) {
      Integer b = floor_div(s, -a[k]);
      if (b < H) H = b;
    } else if (s < 0) {
      return;
    }
    if (L > H) return;
  }
  for (Integer v = L; v <= H; ++v) {
    x[k] = v;
    enumerate_points(F, lo, hi, suffix_max, x, k + 1, out);
  }
}

std::vector<IntVector> points_in_box(const std::vector<Facet>& F, const IntVector& lo,
                                     const IntVector& hi) {
  const std::size_t d = lo.size();
  // suffix_max[i][k] = sum_{j >= k} max(a_j lo_j, a_j hi_j)
  std::vector<IntVector> suffix_max(F.size(), IntVector(d + 1));
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = d; j-- > 0;) {
      Integer a = F[i].normal[j] * lo[j], b = F[i].normal[j] * hi[j];
      suffix_max[i][j] = suffix_max[i][j + 1] + (a > b ? a : b);
    }
  std::vector<IntVector> out;
  IntVector x(d);
  enumerate_points(F, lo, hi, suffix_max, x, 0, out);
  return out;
}

}  // namespace

std::vector<IntVector> lattice_points(const LatticePolytope& P) {
  const std::size_t d = P.dim();
  IntVector lo = P.vertices().front(), hi = P.vertices().front();
  for (const auto& v : P.vertices())
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  return points_in_box(P.facets(), lo, hi);
}

std::vector<IntVector> lattice_points(const std::vector<Facet>& inequalities, std::size_t dim) {
  PolyhedronVertices pv = polyhedron_vertices(inequalities, dim);
  if (pv.empty) return {};
  if (!pv.bounded) throw PreconditionError("unbounded");
  IntVector lo(dim), hi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    lo[i] = ceil_of(pv.vertices.front()[i]);
    hi[i] = floor_of(pv.vertices.front()[i]);
    for (const auto& v : pv.vertices) {
      Integer c = ceil_of(v[i]), f = floor_of(v[i]);
      if (c < lo[i]) lo[i] = c;
      if (f > hi[i]) hi[i] = f;
    }
    if (lo[i] > hi[i]) return {};
  }
  return points_in_box(inequalities, lo, hi);
}

PointClassification classify_points(const LatticePolytope& P) {
  if (!is_reflexive(P)) throw PreconditionError("not reflexive");
  PointClassification out;
  out.origin_interior = P.origin_interior();
  std::set<IntVector> verts(P.vertices().begin(), P.vertices().end());
  for (const auto& p : lattice_points(P)) {
    if (verts.count(p)) {
      out.vertices.push_back(p);
      continue;
    }
    std::size_t tight = 0;
    for (const auto& f : P.facets())
      if (f.evaluate(p) == 0) ++tight;
    if (tight == 0)
      out.interior_points.push_back(p);
    else if (tight == 1)
      out.facet_interior_points.push_back(p);
    else
      out.boundary_nonfacet_points.push_back(p);
  }
  return out;
}

std::vector<IntVector> reduced_points(const LatticePolytope& P) {
  PointClassification c = classify_points(P);
  std::vector<IntVector> out = c.interior_points;
  out.insert(out.end(), c.boundary_nonfacet_points.begin(), c.boundary_nonfacet_points.end());
  out.insert(out.end(), c.vertices.begin(), c.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Face>> face_lattice(const LatticePolytope& P) {
  const std::size_t d = P.dim();
  const auto& V = P.vertices();
  const auto& F = P.facets();
  std::vector<std::vector<std::size_t>> facet_vertices(F.size());
  for (std::size_t f = 0; f < F.size(); ++f)
    for (std::size_t v = 0; v < V.size(); ++v)
      if (F[f].evaluate(V[v]) == 0) facet_vertices[f].push_back(v);

  auto containing_facets = [&](const std::vector<std::size_t>& vs) {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < F.size(); ++f)
      if (std::includes(facet_vertices[f].begin(), facet_vertices[f].end(), vs.begin(), vs.end()))
        out.push_back(f);
    return out;
  };
  auto face_dim = [&](const std::vector<std::size_t>& vs) {
    std::vector<IntVector> pts;
    for (auto v : vs) pts.push_back(V[v]);
    return static_cast<int>(affine_rank(pts)) - 1;
  };

  std::vector<std::vector<Face>> faces(d + 2);
  std::vector<std::size_t> all(V.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  faces[d + 1].push_back(Face{all, {}, static_cast<int>(d)});
  for (std::size_t f = 0; f < F.size(); ++f)
    faces[d].push_back(Face{facet_vertices[f], containing_facets(facet_vertices[f]),
                            static_cast<int>(d) - 1});
  for (int k = static_cast<int>(d) - 2; k >= 0; --k) {
    std::set<std::vector<std::size_t>> seen;
    for (const auto& G : faces[static_cast<std::size_t>(k) + 2])
      for (const auto& fv : facet_vertices) {
        std::vector<std::size_t> I;
        std::set_intersection(G.vertices.begin(), G.vertices.end(), fv.begin(), fv.end(),
                              std::back_inserter(I));
        if (I.empty() || seen.count(I) || face_dim(I) != k) continue;
        seen.insert(I);
      }
    for (const auto& I : seen)
      faces[static_cast<std::size_t>(k) + 1].push_back(Face{I, containing_facets(I), k});
  }
  std::vector<std::size_t> every_facet(F.size());
  for (std::size_t i = 0; i < every_facet.size(); ++i) every_facet[i] = i;
  faces[0].push_back(Face{{}, every_facet, -1});
  return faces;
}

IntMatrix vertex_facet_pairing(const LatticePolytope& P) {
  IntMatrix pm(P.facets().size(), P.vertices().size());
  for (std::size_t i = 0; i < P.facets().size(); ++i)
    for (std::size_t j = 0; j < P.vertices().size(); ++j)
      pm(i, j) = P.facets()[i].evaluate(P.vertices()[j]);
  return pm;
}

namespace {

struct OrderState {
  std::vector<bool> used;
  std::vector<std::vector<std::size_t>> blocks;  // ordered partition of columns

  bool operator<(const OrderState& o) const {
    if (used != o.used) return used < o.used;
    return blocks < o.blocks;
  }
};

}  // namespace

IntMatrix canonical_form(const LatticePolytope& P) {
  const IntMatrix pm = vertex_facet_pairing(P);
  const std::size_t nf = pm.rows(), nv = pm.cols();

  std::vector<std::size_t> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = i;
  std::vector<OrderState> states{OrderState{std::vector<bool>(nf, false), {all}}};

  for (std::size_t step = 0; step < nf; ++step) {
    std::optional<IntVector> best;
    std::set<OrderState> next;
    for (const auto& s : states)
      for (std::size_t f = 0; f < nf; ++f) {
        if (s.used[f]) continue;
        IntVector row;
        row.reserve(nv);
        OrderState ns{s.used, {}};
        ns.used[f] = true;
        for (const auto& block : s.blocks) {
          std::vector<std::size_t> cols = block;
          std::stable_sort(cols.begin(), cols.end(),
                           [&](std::size_t a, std::size_t b) { return pm(f, a) < pm(f, b); });
          std::size_t start = 0;
          for (std::size_t i = 0; i < cols.size(); ++i) {
            row.push_back(pm(f, cols[i]));
            if (i + 1 == cols.size() || pm(f, cols[i + 1]) != pm(f, cols[i])) {
              std::vector<std::size_t> sub(cols.begin() + static_cast<std::ptrdiff_t>(start),
                                           cols.begin() + static_cast<std::ptrdiff_t>(i + 1));
              std::sort(sub.begin(), sub.end());
              ns.blocks.push_back(std::move(sub));
              start = i + 1;
            }
          }
        }
        if (!best || row < *best) {
          best = row;
          next.clear();
        }
        if (row == *best) next.insert(std::move(ns));
      }
    states.assign(next.begin(), next.end());
  }

  std::optional<IntMatrix> canonical;
  std::optional<IntVector> canonical_flat;
  for (const auto& s : states) {
    std::vector<IntVector> cols;
    for (const auto& block : s.blocks)
      for (auto c : block) cols.push_back(P.vertices()[c]);
    IntMatrix h = hermite_normal_form(IntMatrix::from_columns(cols)).H;
    IntVector flat;
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) flat.push_back(h(i, j));
    if (!canonical_flat || flat < *canonical_flat) {
      canonical_flat = std::move(flat);
      canonical = std::move(h);
    }
  }
  return *canonical;
}

}  // namespace toric
