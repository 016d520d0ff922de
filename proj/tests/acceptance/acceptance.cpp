// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/fan.hpp"
#include "toric/mirror.hpp"
#include "toric/polytope.hpp"
#include "toric/secondary.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed expectations without stopping at the first one.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (out.pass) out.detail = what;
      out.pass = false;
    }
  }
};

using P2 = std::array<long, 2>;

long cross(const P2& o, const P2& a, const P2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Strictly convex hull, counterclockwise, collinear points dropped.
std::vector<P2> hull2(std::vector<P2> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<P2> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

bool strictly_inside(const std::vector<P2>& h, const P2& q) {
  if (h.size() < 3) return false;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (cross(h[i], h[(i + 1) % h.size()], q) <= 0) return false;
  return true;
}

// Whether a linear map in GL(2,Z) carries polygon a onto polygon b (both counterclockwise,
// origin strictly inside).
bool equivalent2(const std::vector<P2>& a, const std::vector<P2>& b) {
  if (a.size() != b.size()) return false;
  const std::set<P2> target(b.begin(), b.end());
  const P2 a0 = a[0], a1 = a[1];
  const long det = a0[0] * a1[1] - a0[1] * a1[0];
  for (std::size_t k = 0; k < b.size(); ++k)
    for (int step : {1, -1}) {
      const P2 b0 = b[k], b1 = b[(k + b.size() + step) % b.size()];
      // M = [b0 b1] adj([a0 a1]) / det
      long m[2][2];
      bool integral = true;
      for (int r = 0; r < 2; ++r) {
        long x = b0[r] * a1[1] - b1[r] * a0[1];
        long y = -b0[r] * a1[0] + b1[r] * a0[0];
        if (x % det || y % det) integral = false;
        m[r][0] = x / det;
        m[r][1] = y / det;
      }
      if (!integral) continue;
      long dm = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      if (dm != 1 && dm != -1) continue;
      bool onto = true;
      for (const auto& v : a)
        if (!target.count(P2{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]})) onto = false;
      if (onto) return true;
    }
  return false;
}

std::vector<IntVector> from_p2(const std::vector<P2>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) out.push_back(IntVector{Integer(v[0]), Integer(v[1])});
  return out;
}

std::string key(const IntMatrix& m) {
  std::ostringstream s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s << m(i, j) << ',';
    s << ';';
  }
  return s.str();
}

// Box scan over [-b, b]^n.
void for_box(std::size_t n, long b, const std::function<void(const IntVector&)>& f) {
  IntVector x(n, Integer(-b));
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == b) x[i++] = -b;
    if (i == n) return;
    x[i] += 1;
  }
}

long box_bound(const LatticePolytope& P) {
  long b = 0;
  for (const auto& v : P.vertices())
    for (const auto& x : v) b = std::max(b, std::abs(x.get_si()));
  return b;
}

struct PointCounts {
  std::size_t total = 0;
  std::size_t facet_interior = 0;
};

// Counts lattice points and points interior to exactly one facet by scanning a box.
PointCounts scan_counts(const LatticePolytope& P) {
  PointCounts c;
  for_box(P.dim(), box_bound(P), [&](const IntVector& x) {
    std::size_t tight = 0;
    for (const auto& f : P.facets()) {
      Integer s = f.evaluate(x);
      if (s < 0) return;
      if (s == 0) ++tight;
    }
    ++c.total;
    if (tight == 1) ++c.facet_interior;
  });
  return c;
}

std::vector<IntVector> scan_facet_interior(const LatticePolytope& P) {
  std::vector<IntVector> out;
  for_box(P.dim(), box_bound(P), [&](const IntVector& x) {
    std::size_t tight = 0;
    for (const auto& f : P.facets()) {
      Integer s = f.evaluate(x);
      if (s < 0) return;
      if (s == 0) ++tight;
    }
    if (tight == 1) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Functionals at most 1 on every ray with equality at exactly one.
std::vector<IntVector> scan_roots(const std::vector<IntVector>& rays, std::size_t dim, long b) {
  std::vector<IntVector> out;
  for_box(dim, b, [&](const IntVector& m) {
    std::size_t eq = 0;
    for (const auto& r : rays) {
      Integer s = dot(r, m);
      if (s > 1) return;
      if (s == 1) ++eq;
    }
    if (eq == 1) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Integer determinant of a square matrix by cofactor expansion.
long det_small(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * a[0][j] * det_small(minor);
  }
  return d;
}

// gcd of the maximal minors of the ray matrix: 1 exactly when Z^rays / M is torsion free.
long maximal_minor_gcd(const std::vector<IntVector>& rays, std::size_t n) {
  long g = 0;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<std::vector<long>> a;
      for (auto i : pick) {
        std::vector<long> row;
        for (const auto& x : rays[i]) row.push_back(x.get_si());
        a.push_back(row);
      }
      g = std::gcd(g, std::abs(det_small(a)));
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return g;
}

// u with <r1,u> = c1, <r2,u> = c2 by Cramer's rule.
RatVector cramer2(const IntVector& r1, const IntVector& r2, const Rational& c1, const Rational& c2) {
  Rational d = Rational(r1[0] * r2[1] - r1[1] * r2[0]);
  return {(c1 * Rational(r2[1]) - c2 * Rational(r1[1])) / d, (Rational(r1[0]) * c2 - Rational(r2[0]) * c1) / d};
}

// Lower triangles of a planar point configuration with generic heights.
std::vector<std::vector<std::size_t>> lower_triangles(const std::vector<IntVector>& p, const RatVector& h) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational x1(p[j][0] - p[i][0]), y1(p[j][1] - p[i][1]);
        Rational x2(p[k][0] - p[i][0]), y2(p[k][1] - p[i][1]);
        Rational det = x1 * y2 - x2 * y1;
        if (det == 0) continue;
        Rational h1 = h[j] - h[i], h2 = h[k] - h[i];
        Rational a = (h1 * y2 - h2 * y1) / det, b = (x1 * h2 - x2 * h1) / det;
        bool lower = true;
        for (std::size_t t = 0; t < n && lower; ++t) {
          if (t == i || t == j || t == k) continue;
          Rational z = h[i] + a * Rational(p[t][0] - p[i][0]) + b * Rational(p[t][1] - p[i][1]);
          if (h[t] <= z) lower = false;
        }
        if (lower) out.push_back({i, j, k});
      }
  return out;
}

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

// ---------------------------------------------------------------------------------------

Outcome quintic_pipeline() {
  Checker c;
  auto P = quintic();
  // monomials of degree 5 in five variables, x0^a0 ... x4^a4, correspond to m_i = a_i - 1
  std::set<IntVector> monomials;
  std::size_t one_zero = 0;
  for (int a1 = 0; a1 <= 5; ++a1)
    for (int a2 = 0; a1 + a2 <= 5; ++a2)
      for (int a3 = 0; a1 + a2 + a3 <= 5; ++a3)
        for (int a4 = 0; a1 + a2 + a3 + a4 <= 5; ++a4) {
          int a0 = 5 - a1 - a2 - a3 - a4;
          monomials.insert(iv({a1 - 1, a2 - 1, a3 - 1, a4 - 1}));
          one_zero += ((a0 == 0) + (a1 == 0) + (a2 == 0) + (a3 == 0) + (a4 == 0)) == 1;
        }
  auto pts = lattice_points(P);
  auto cls = classify_points(P);
  c.expect(pts.size() == 126 && monomials.size() == 126, "lattice point count");
  c.expect(as_set(pts) == monomials, "lattice points differ from degree-5 monomials");
  c.expect(cls.facet_interior_points.size() == 20 && one_zero == 20, "facet-interior count");

  auto pair = make_mirror_pair(P);
  std::size_t hd = hd11_poly(pair), h = h11_toric(pair);
  // Z^5 / M for the five vertices of the polar simplex: rank 5 - 4, torsion free
  auto rays = polar(P).vertices();
  std::size_t h_oracle = rays.size() - 4;
  c.expect(maximal_minor_gcd(rays, 4) == 1, "polar vertex lattice has torsion");
  c.expect(hd == 126 - 20 - 1 - 4 && hd == 101, "hd11_poly = " + std::to_string(hd));
  c.expect(h == h_oracle && h == 1, "h11_toric = " + std::to_string(h));

  auto mirror = swapped(pair);
  std::size_t mh = h11_toric(mirror), mhd = hd11_poly(mirror);
  c.expect(mh == 101 && mhd == 1, "swapped pair gives " + std::to_string(mh) + "/" + std::to_string(mhd));
  c.out.detail = c.out.pass ? "126 points, 20 facet-interior, 1/101 and 101/1" : c.out.detail;
  return c.out;
}

struct PolygonClasses {
  std::vector<LatticePolytope> reps;
  std::size_t polygons = 0;
  bool ok = false;
};

PolygonClasses& polygon_classes() {
  static PolygonClasses pc;
  return pc;
}

Outcome reflexive_polygons() {
  Checker c;
  std::vector<P2> grid;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) grid.push_back({x, y});
  // every other grid point could become an interior point
  std::vector<P2> forbidden;
  for (const auto& p : grid)
    if (p != P2{0, 0}) forbidden.push_back(p);

  // Depth-first search over vertex sets in convex position whose hull has no interior
  // lattice point other than the origin. Both conditions pass to subsets.
  std::vector<std::vector<P2>> found;
  std::vector<P2> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    auto h = hull2(chosen);
    if (h.size() >= 3 && strictly_inside(h, {0, 0})) found.push_back(h);
    for (std::size_t i = next; i < grid.size(); ++i) {
      chosen.push_back(grid[i]);
      auto g = hull2(chosen);
      bool ok = g.size() == chosen.size();
      if (ok && g.size() >= 3)
        for (const auto& q : forbidden)
          if (strictly_inside(g, q)) {
            ok = false;
            break;
          }
      if (ok) dfs(i + 1);
      chosen.pop_back();
    }
  };
  dfs(0);

  // oracle classes by explicit GL(2,Z) maps, library classes by canonical form
  std::vector<std::vector<P2>> oracle_reps;
  std::map<std::string, std::size_t> canonical_class;
  std::map<std::size_t, std::size_t> oracle_to_canonical;
  std::vector<LatticePolytope> reps;
  bool consistent = true;
  for (const auto& poly : found) {
    std::size_t o = 0;
    while (o < oracle_reps.size() && !equivalent2(oracle_reps[o], poly)) ++o;
    if (o == oracle_reps.size()) oracle_reps.push_back(poly);
    auto P = hull(from_p2(poly), M(2));
    std::string k = key(canonical_form(P));
    auto [it, fresh] = canonical_class.emplace(k, canonical_class.size());
    if (fresh) reps.push_back(P);
    auto [jt, fresh2] = oracle_to_canonical.emplace(o, it->second);
    if (!fresh2 && jt->second != it->second) consistent = false;
  }
  c.expect(oracle_reps.size() == 16, std::to_string(oracle_reps.size()) + " oracle classes");
  c.expect(canonical_class.size() == 16, std::to_string(canonical_class.size()) + " canonical-form classes");
  c.expect(consistent && oracle_to_canonical.size() == canonical_class.size(),
           "canonical form disagrees with explicit equivalence");

  std::size_t self_dual = 0;
  for (const auto& R : reps) {
    c.expect(is_reflexive(R), "class representative not reflexive");
    auto Q = polar(R);
    c.expect(polar(Q) == R, "polar not an involution");
    auto qc = canonical_class.find(key(canonical_form(hull(Q.vertices(), M(2)))));
    c.expect(qc != canonical_class.end(), "polar outside the classification");
    if (qc == canonical_class.end()) continue;
    auto back = polar(hull(reps[qc->second].vertices(), N(2)));
    c.expect(key(canonical_form(hull(back.vertices(), M(2)))) == key(canonical_form(R)),
             "polar does not act as an involution on classes");
    if (key(canonical_form(hull(Q.vertices(), M(2)))) == key(canonical_form(R))) ++self_dual;
    // boundary points of a reflexive polygon and its polar add to 12
    c.expect(lattice_points(R).size() + lattice_points(Q).size() - 2 == 12, "boundary points do not sum to 12");
  }
  auto& pc = polygon_classes();
  pc.reps = reps;
  pc.polygons = found.size();
  pc.ok = c.out.pass;
  if (c.out.pass)
    c.out.detail = std::to_string(found.size()) + " polygons, 16 classes, " + std::to_string(self_dual) +
                   " self-dual";
  return c.out;
}

Outcome rank_duality() {
  Checker c;
  std::vector<LatticePolytope> suite = polygon_classes().reps;
  c.expect(suite.size() == 16, "polygon classification unavailable");
  suite.push_back(cube());
  suite.push_back(octahedron());
  suite.push_back(quintic());
  std::size_t checked = 0;
  for (const auto& P : suite) {
    auto Q = polar(P);
    c.expect(polar(Q) == P, "polar not an involution");
    auto here = make_mirror_pair(P);
    auto there = make_mirror_pair(Q);
    std::size_t a = h11_toric(here), b = hd11_poly(there);
    std::size_t a2 = hd11_poly(here), b2 = h11_toric(there);
    c.expect(a == b && a2 == b2, "rank duality fails");
    // point-count oracle on each side
    auto cp = scan_counts(P), cq = scan_counts(Q);
    std::size_t n = P.dim();
    c.expect(a2 == cp.total - cp.facet_interior - 1 - n, "hd11_poly disagrees with point counts");
    c.expect(a == cq.total - cq.facet_interior - 1 - n, "h11_toric disagrees with point counts");
    ++checked;
  }
  auto cube_pair = make_mirror_pair(cube());
  c.expect(h11_toric(cube_pair) == 3 && hd11_poly(cube_pair) == 17, "cube pair is not 3/17");
  auto oct_pair = make_mirror_pair(octahedron());
  c.expect(h11_toric(oct_pair) == 17 && hd11_poly(oct_pair) == 3, "octahedron pair is not 17/3");
  if (c.out.pass) c.out.detail = std::to_string(checked) + " pairs, both orientations";
  return c.out;
}

Outcome exact_sequence() {
  Checker c;
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> coord(-20, 20);
  struct Case {
    const char* name;
    Fan fan;
    std::size_t rank;
  };
  std::vector<Case> cases = {
      {"P2", make_fan(N(2), pts({{1, 0}, {0, 1}, {-1, -1}}), {{0, 1}, {1, 2}, {0, 2}}), 1},
      {"P1xP1", make_fan(N(2), pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), 2},
      {"P(1,1,2)", make_fan(N(2), pts({{1, 0}, {0, 1}, {-1, -2}}), {{0, 1}, {1, 2}, {0, 2}}), 1},
  };
  for (const auto& cs : cases) {
    auto pres = class_group(cs.fan);
    std::string name = cs.name;
    c.expect(pres.free_rank() == cs.rank && pres.torsion().empty(), name + " class group");
    std::vector<DivisorClass> images;
    for (std::size_t i = 0; i < cs.fan.rays.size(); ++i) {
      IntVector e(cs.fan.rays.size(), 0);
      e[i] = 1;
      images.push_back(class_of_coefficients(pres, e));
    }
    if (cs.rank == 1) {
      // weights of the single relation among three rays in the plane, by 2x2 determinants
      const auto& r = cs.fan.rays;
      IntVector w{r[1][0] * r[2][1] - r[1][1] * r[2][0], r[2][0] * r[0][1] - r[2][1] * r[0][0],
                  r[0][0] * r[1][1] - r[0][1] * r[1][0]};
      w = primitive(w);
      IntVector got{images[0].free[0], images[1].free[0], images[2].free[0]};
      c.expect(got == w || got == -w, name + " generator images");
    } else {
      c.expect(images[0] == images[1] && images[2] == images[3], name + " generator images");
      Integer d = images[0].free[0] * images[2].free[1] - images[0].free[1] * images[2].free[0];
      c.expect(d == 1 || d == -1, name + " images do not form a basis");
    }
    for (int t = 0; t < 50; ++t) {
      IntVector m{Integer(coord(rng)), Integer(coord(rng))};
      c.expect(divisor_class(principal_divisor(cs.fan, m), pres).is_zero(), name + " principal class nonzero");
      // a random divisor has zero class exactly when it is principal
      IntVector d;
      for (std::size_t i = 0; i < cs.fan.rays.size(); ++i) d.push_back(Integer(coord(rng) % 3));
      const auto& r = cs.fan.rays;
      std::size_t j = 1;
      while (r[0][0] * r[j][1] - r[0][1] * r[j][0] == 0) ++j;
      RatVector u = cramer2(r[0], r[j], Rational(d[0]), Rational(d[j]));
      bool principal = u[0].get_den() == 1 && u[1].get_den() == 1;
      for (std::size_t i = 1; i < r.size() && principal; ++i) principal = dot(r[i], u) == Rational(d[i]);
      c.expect(class_of_coefficients(pres, d).is_zero() == principal, name + " kernel is not the image of M");
    }
  }
  if (c.out.pass) c.out.detail = "Z, Z^2, Z with expected images; 50 characters per fan";
  return c.out;
}

Outcome roots_check() {
  Checker c;
  auto P2fan = normal_fan(p2_anticanonical());
  auto r = roots(P2fan);
  auto neg = r;
  for (auto& x : neg) x = -x;
  std::sort(neg.begin(), neg.end());
  c.expect(r.size() == 6, std::to_string(r.size()) + " roots of P2");
  c.expect(as_set(r) == as_set(scan_roots(P2fan.rays, 2, 3)), "P2 roots disagree with box scan");
  c.expect(neg == scan_facet_interior(p2_anticanonical()), "negated P2 roots are not the edge-interior points");

  auto mq = make_mirror_pair(polar(quintic())).fanX;
  auto cube_fan = make_mirror_pair(octahedron()).fanX;  // rays: the cube's vertices and edge midpoints
  for (auto [name, fan] : {std::pair<std::string, const Fan*>{"mirror quintic", &mq}, {"cube", &cube_fan}}) {
    auto rr = roots(*fan);
    c.expect(rr.empty(), name + " fan has roots");
    c.expect(scan_roots(fan->rays, fan->dim(), 5).empty(), name + " box scan finds roots");
    c.expect(dominance_status(*fan) == Dominance::Holds, name + " dominance not established");
  }
  if (c.out.pass)
    c.out.detail = "P2: 6 roots = -(edge-interior points); mirror quintic (" + std::to_string(mq.rays.size()) +
                   " rays) and cube (" + std::to_string(cube_fan.rays.size()) + " rays): none, dominance holds";
  return c.out;
}

Outcome cartier_arithmetic() {
  Checker c;
  auto fan = make_fan(N(2), pts({{1, 0}, {0, 1}, {-1, -2}}), {{0, 1}, {1, 2}, {0, 2}});
  IntVector d{1, 0, 0};
  auto sf = support_function(fan, d);
  // oracle: per cone solve <r, u> = -d_r
  Integer index = 1;
  bool seen_half = false;
  for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
    auto i = fan.max_cones[s][0], j = fan.max_cones[s][1];
    RatVector u = cramer2(fan.rays[i], fan.rays[j], Rational(-d[i]), Rational(-d[j]));
    c.expect(u == sf.functionals[s], "functional differs from Cramer's rule");
    for (const auto& x : u) index = lcm(index, Integer(x.get_den()));
    if (u == RatVector{-1, Rational(1, 2)}) seen_half = true;
  }
  c.expect(seen_half, "no cone with functional (-1, 1/2)");
  c.expect(index == 2 && cartier_index(sf) == 2 && !is_cartier(sf), "Cartier index of D_(1,0) is not 2");

  auto p2 = make_fan(N(2), pts({{1, 0}, {0, 1}, {-1, -1}}), {{0, 1}, {1, 2}, {0, 2}});
  auto ak = anticanonical(p2);
  auto sk = support_function(p2, ak.coefficients);
  c.expect(is_cartier(sk) && cartier_index(sk) == 1, "anticanonical on P2 not Cartier");
  c.expect(convexity(sk, true) == Convexity::StrictlyConvex, "negated support function not strictly convex");
  // oracle: -psi(a) > <a, -u_sigma> for every ray a outside sigma
  bool strict = true;
  for (std::size_t s = 0; s < p2.max_cones.size(); ++s) {
    auto i = p2.max_cones[s][0], j = p2.max_cones[s][1];
    RatVector u = cramer2(p2.rays[i], p2.rays[j], Rational(-1), Rational(-1));
    for (std::size_t a = 0; a < p2.rays.size(); ++a)
      if (a != i && a != j && !(Rational(1) > -dot(p2.rays[a], u))) strict = false;
  }
  c.expect(strict, "oracle finds the anticanonical function not strictly convex");
  if (c.out.pass) c.out.detail = "index 2 on P(1,1,2); -K on P2 Cartier and strictly convex";
  return c.out;
}

Outcome secondary_fan() {
  Checker c;
  auto geometric = [](const std::vector<Chamber>& cs) {
    return std::count_if(cs.begin(), cs.end(), [](const Chamber& ch) { return ch.phase == Phase::Geometric; });
  };
  auto sq = lift(pts({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {0, 0}}), false);
  auto p2 = lift(reduced_points(p2_anticanonical()), true);
  auto sq_ch = enumerate_chambers(sq);
  auto p2_ch = enumerate_chambers(p2);
  c.expect(sq_ch.size() == 3, std::to_string(sq_ch.size()) + " chambers for the square with center");
  c.expect(p2_ch.size() == 2 && geometric(p2_ch) == 1, "P2 configuration chambers");

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(-1000, 1000);
  std::size_t landed = 0;
  for (const auto& [config, chambers] : {std::pair{&sq, &sq_ch}, std::pair{&p2, &p2_ch}})
    for (int t = 0; t < 200; ++t) {
      RatVector h;
      for (std::size_t i = 0; i < config->size(); ++i) h.push_back(Rational(d(rng), 101));
      auto oracle = lower_triangles(config->points, h);
      std::size_t hits = 0;
      for (const auto& ch : *chambers) {
        RatVector x = chamber_coordinates(*config, ch.cone, h);
        bool interior = std::all_of(ch.cone.inequalities.begin(), ch.cone.inequalities.end(),
                                    [&](const IntVector& a) { return dot(a, x) > 0; });
        if (interior) {
          ++hits;
          c.expect(ch.triangulation.cells == oracle, "triangulation differs from the lower-hull oracle");
        }
      }
      c.expect(hits == 1, "heights in " + std::to_string(hits) + " chambers");
      landed += hits == 1;
    }
  if (c.out.pass)
    c.out.detail = "3 and 2 (1 geometric) chambers; " + std::to_string(landed) + "/400 random heights in one chamber";
  return c.out;
}

Outcome cpl_identification() {
  Checker c;
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> d(-40, 40);
  std::size_t geometric = 0, samples = 0;
  for (const auto& Q : {p2_small(), hexagon()}) {
    auto config = lift(reduced_points(Q), true);
    const std::size_t o = *config.origin_index;
    for (const auto& ch : enumerate_chambers(config)) {
      if (ch.phase != Phase::Geometric) continue;
      ++geometric;
      RatVector w = interior_heights(config, ch);
      std::vector<IntVector> rays;
      RatVector phi;
      for (std::size_t i = 0; i < config.size(); ++i)
        if (i != o) {
          rays.push_back(config.points[i]);
          phi.push_back(w[i] - w[o]);
        }
      auto pair = make_mirror_pair(polar(Q), rays, phi);
      c.expect(cpl_consistency(pair, config, ch), "chamber cone differs from the fan's cpl cone");
      // oracle: integer heights lie inside the chamber exactly when their differences from
      // the origin's height give a strictly convex function on the fan
      const Fan& fan = pair.fanX;
      for (int t = 0; t < 100; ++t) {
        IntVector h;
        for (std::size_t i = 0; i < config.size(); ++i) h.push_back(Integer(d(rng)));
        IntVector coeff(fan.rays.size());
        for (std::size_t i = 0; i < config.size(); ++i)
          if (i != o) coeff[*fan.ray_index(config.points[i])] = h[i] - h[o];
        Convexity cv = convexity(support_function(fan, coeff), true);
        bool convex = cv == Convexity::StrictlyConvex;
        RatVector hr = to_rational(h);
        RatVector x = chamber_coordinates(config, ch.cone, hr);
        bool inside = std::all_of(ch.cone.inequalities.begin(), ch.cone.inequalities.end(),
                                  [&](const IntVector& a) { return dot(a, x) > 0; });
        c.expect(convex == inside, "chamber membership differs from strict convexity");
        c.expect(ch.cone.contains_coordinates(x) == (cv != Convexity::NotConvex), "closed cones differ");
        ++samples;
      }
    }
  }
  c.expect(geometric == 2, std::to_string(geometric) + " geometric chambers");
  if (c.out.pass)
    c.out.detail = std::to_string(geometric) + " geometric chambers; " + std::to_string(samples) +
                   " sampled heights agree with strict convexity";
  return c.out;
}

Outcome sections_check() {
  Checker c;
  const auto& reps = polygon_classes().reps;
  c.expect(reps.size() == 16, "polygon classification unavailable");
  for (const auto& P : reps) {
    auto fan = normal_fan(P);
    auto D = anticanonical(fan);
    auto s = sections(D);
    c.expect(s.polytope && as_set(s.polytope->vertices()) == as_set(P.vertices()), "sections polytope is not P");
    std::vector<IntVector> scan;
    for_box(2, box_bound(P), [&](const IntVector& x) {
      if (std::all_of(P.facets().begin(), P.facets().end(), [&](const Facet& f) { return f.evaluate(x) >= 0; }))
        scan.push_back(x);
    });
    c.expect(as_set(s.points) == as_set(scan), "section monomials differ from the lattice points of P");
    auto pres = class_group(fan);
    auto degree = divisor_class(D, pres);
    for (std::size_t k = 0; k < s.exponents.size(); ++k) {
      c.expect(std::all_of(s.exponents[k].begin(), s.exponents[k].end(), [](const Integer& x) { return x >= 0; }),
               "negative exponent");
      // exponent of ray r is <r, m> + d_r
      IntVector expected;
      for (std::size_t r = 0; r < fan.rays.size(); ++r) expected.push_back(dot(fan.rays[r], s.points[k]) + D.coefficients[r]);
      c.expect(expected == s.exponents[k], "exponent vector");
      c.expect(class_of_coefficients(pres, s.exponents[k]) == degree, "Cox degree not constant");
    }
  }
  if (c.out.pass) c.out.detail = "16 polygons: sections polytope equals P, exponents nonnegative, degree constant";
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no runtime limit
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "quintic pipeline", 5.0, quintic_pipeline},
      {2, "reflexive polygon classification", 60.0, reflexive_polygons},
      {3, "polar involution and rank duality", 0, rank_duality},
      {4, "class group exact sequence", 0, exact_sequence},
      {5, "roots and dominance", 0, roots_check},
      {6, "Cartier arithmetic", 0, cartier_arithmetic},
      {7, "secondary fan chambers", 30.0, secondary_fan},
      {8, "geometric chambers are cpl cones", 0, cpl_identification},
      {9, "sections of the anticanonical divisor", 0, sections_check},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && (cr.limit_seconds == 0 || secs < cr.limit_seconds);
    if (o.pass && !pass) o.detail += "; over the time limit";
    all = all && pass;
    char timing[64];
    if (cr.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, cr.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::printf("%s criterion %d: %s (%s; exact; %s)\n", pass ? "PASS" : "FAIL", cr.id, cr.name, o.detail.c_str(),
                timing);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
