#include "toric/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "toric/error.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/int_matrix.hpp"

namespace toric {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector y;
  Bitset zeros;
};

// Extreme rays of the pointed cone {y : M y >= 0}, M of full column rank k.
std::vector<IntVector> pointed_rays(const std::vector<IntVector>& M, std::size_t k) {
  const std::size_t m = M.size();
  // greedy choice of k independent rows
  std::vector<std::size_t> basis_rows;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < m && basis_rows.size() < k; ++i) {
    chosen.push_back(M[i]);
    if (rank(chosen, k) == chosen.size())
      basis_rows.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis_rows.size() != k) throw Error("double description: rank deficiency");

  std::vector<RatVector> AI;
  for (auto i : basis_rows) AI.push_back(to_rational(M[i]));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < k; ++j) {
    RatVector e(k);
    e[j] = 1;
    auto sol = solve_rational(AI, e, k);
    if (!sol) throw Error("double description: singular initial basis");
    Ray r{primitive_integral(*sol), Bitset(m)};
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) r.zeros.set(basis_rows[t]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> is_basis(m, false);
  for (auto i : basis_rows) is_basis[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (is_basis[i]) continue;
    const IntVector& a = M[i];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].y);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zeros.set(i);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bitset common = rays[p].zeros & rays[n].zeros;
        if (k >= 2 && common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (rays[r].zeros.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector y = val[p] * rays[n].y - val[n] * rays[p].y;
        if (is_zero(y)) continue;
        Ray nr{primitive(std::move(y)), common};
        nr.zeros.set(i);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      if (val[r] == 0) rays[r].zeros.set(i);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

}  // namespace

IntVector clear_denominators(const RatVector& row) {
  Integer l = lcm_of_denominators(row);
  IntVector out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rational s = row[i] * l;
    out[i] = s.get_num();
  }
  return out;
}

ConeGenerators cone_generators(const std::vector<IntVector>& inequalities, std::size_t dim) {
  for (const auto& a : inequalities)
    if (a.size() != dim) throw InputError("cone_generators: dimension mismatch");
  ConeGenerators out;
  IntMatrix A = IntMatrix::from_rows(inequalities, dim);
  out.lineality = integer_kernel(A);

  // basis of the row space: x = B y with B's columns independent rows of A
  std::vector<IntVector> basis;
  for (const auto& a : inequalities) {
    if (is_zero(a)) continue;
    basis.push_back(a);
    if (rank(basis, dim) < basis.size()) basis.pop_back();
    if (basis.size() + out.lineality.size() == dim) break;
  }
  const std::size_t k = basis.size();
  if (k == 0) return out;

  std::vector<IntVector> reduced;
  reduced.reserve(inequalities.size());
  for (const auto& a : inequalities) {
    IntVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, basis[j]);
    reduced.push_back(std::move(row));
  }
  for (const auto& y : pointed_rays(reduced, k)) {
    IntVector x(dim);
    for (std::size_t j = 0; j < k; ++j)
      if (y[j] != 0)
        for (std::size_t t = 0; t < dim; ++t) x[t] += y[j] * basis[j][t];
    out.rays.push_back(primitive(std::move(x)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

ConeFacets cone_facets(const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality,
                       std::size_t dim) {
  std::vector<IntVector> rows = rays;
  for (const auto& l : lineality) {
    rows.push_back(l);
    rows.push_back(-l);
  }
  ConeGenerators dual = cone_generators(rows, dim);
  ConeFacets out{std::move(dual.rays), std::move(dual.lineality)};
  return out;
}

ConeFacets irredundant(const std::vector<IntVector>& inequalities, std::size_t dim) {
  ConeGenerators g = cone_generators(inequalities, dim);
  return cone_facets(g.rays, g.lineality, dim);
}

ConeFacets irredundant_by_lp(const std::vector<IntVector>& inequalities, std::size_t dim) {
  std::vector<IntVector> rows;
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw InputError("irredundant: dimension mismatch");
    if (!is_zero(a)) rows.push_back(primitive(a));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  auto system = [&](const std::vector<IntVector>& eq, const std::vector<IntVector>& ge) {
    std::vector<LinearInequality> sys;
    for (const auto& e : eq) {
      sys.push_back({to_rational(e), 0, Relation::NonNegative});
      sys.push_back({to_rational(-e), 0, Relation::NonNegative});
    }
    for (const auto& a : ge) sys.push_back({to_rational(a), 0, Relation::NonNegative});
    return sys;
  };

  // implicit equalities: rows that cannot be made positive
  std::vector<IntVector> implicit, proper;
  {
    std::vector<LinearInequality> all;
    for (const auto& a : rows) all.push_back({to_rational(a), 0, Relation::Positive});
    if (lp_feasible_strict(all, dim)) {
      proper = rows;
    } else {
      auto base = system({}, rows);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        base[i].relation = Relation::Positive;
        if (lp_feasible_strict(base, dim))
          proper.push_back(rows[i]);
        else
          implicit.push_back(rows[i]);
        base[i].relation = Relation::NonNegative;
      }
    }
  }
  ConeFacets out;
  std::vector<IntVector> span_basis;  // basis of the cone's linear span
  if (!implicit.empty()) {
    span_basis = integer_kernel(IntMatrix::from_rows(implicit, dim));
    out.equations = integer_kernel(IntMatrix::from_rows(span_basis, dim));
  }

  // drop rows implied by the others, one at a time
  std::vector<bool> keep(proper.size(), true);
  for (std::size_t i = 0; i < proper.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < proper.size(); ++j)
      if (j != i && keep[j]) others.push_back(proper[j]);
    auto sys = system(out.equations, others);
    sys.push_back({to_rational(-proper[i]), 0, Relation::Positive});
    if (!lp_feasible_strict(sys, dim)) keep[i] = false;
  }

  // project normals onto the span: a - E^T (E E^T)^{-1} E a
  std::vector<RatVector> E;
  for (const auto& e : out.equations) E.push_back(to_rational(e));
  std::vector<RatVector> gram(E.size(), RatVector(E.size()));
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j) gram[i][j] = dot(E[i], E[j]);
  for (std::size_t i = 0; i < proper.size(); ++i) {
    if (!keep[i]) continue;
    RatVector a = to_rational(proper[i]);
    if (!E.empty()) {
      RatVector rhs(E.size());
      for (std::size_t k = 0; k < E.size(); ++k) rhs[k] = dot(E[k], a);
      auto c = solve_rational(gram, rhs, E.size());
      if (!c) throw Error("irredundant: singular Gram matrix");
      for (std::size_t k = 0; k < E.size(); ++k)
        for (std::size_t t = 0; t < dim; ++t) a[t] -= (*c)[k] * E[k][t];
    }
    out.inequalities.push_back(primitive(clear_denominators(a)));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end());
  out.inequalities.erase(std::unique(out.inequalities.begin(), out.inequalities.end()),
                         out.inequalities.end());
  return out;
}

std::vector<std::vector<std::size_t>> lower_cells(const std::vector<IntVector>& vectors,
                                                  const RatVector& heights) {
  if (vectors.empty()) return {};
  if (heights.size() != vectors.size()) throw InputError("lower_cells: height count mismatch");
  const std::size_t n = vectors.front().size();
  std::vector<IntVector> lifted;
  lifted.reserve(vectors.size() + 1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Integer& den = heights[i].get_den();
    IntVector v(n + 1);
    for (std::size_t j = 0; j < n; ++j) v[j] = vectors[i][j] * den;
    v[n] = heights[i].get_num();
    lifted.push_back(std::move(v));
  }
  IntVector up(n + 1);
  up[n] = 1;
  std::vector<IntVector> gens = lifted;
  gens.push_back(up);
  ConeFacets f = cone_facets(gens, {}, n + 1);
  if (!f.equations.empty()) throw PreconditionError("configuration not full-dimensional");
  std::vector<std::vector<std::size_t>> cells;
  for (const auto& a : f.inequalities) {
    if (a[n] <= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (dot(a, lifted[i]) == 0) cell.push_back(i);
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace toric
