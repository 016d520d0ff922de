#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "toric/error.hpp"

namespace toric {

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntVector SmithDecomposition::diagonal() const {
  IntVector d(std::min(S.rows(), S.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = S(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  SmithDecomposition out{IntMatrix::identity(m), A, IntMatrix::identity(n), 0};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found_any = false;
    while (true) {
      // smallest |entry| of the active block; strict comparison keeps the first
      // position in row-major order on ties
      std::size_t bi = 0, bj = 0;
      Integer best = 0;
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          Integer a = abs_of(S(i, j));
          if (!found || a < best) {
            best = a;
            bi = i;
            bj = j;
            found = true;
          }
        }
      if (!found) break;
      found_any = true;
      S.swap_rows(t, bi);
      U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      V.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = tdiv(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = tdiv(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_any) break;
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  HermiteDecomposition out{A, IntMatrix::identity(m), 0};
  IntMatrix& H = out.H;
  IntMatrix& T = out.T;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, j) != 0 && (best == m || abs_of(H(i, j)) < abs_of(H(best, j)))) best = i;
      if (best == m) break;
      H.swap_rows(r, best);
      T.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        Integer q = floor_div(H(i, j), H(r, j));
        H.add_row_multiple(i, r, -q);
        T.add_row_multiple(i, r, -q);
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) {
      H.negate_row(r);
      T.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, j), H(r, j));
      H.add_row_multiple(i, r, -q);
      T.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

IntVector CokernelPresentation::class_of(const IntVector& x) const {
  if (x.size() != ambient) throw InputError("class_of: dimension mismatch");
  IntVector y = projection * x;
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    Integer& c = y[free_rank + k];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), torsion[k].get_mpz_t());
  }
  return y;
}

IntVector CokernelPresentation::free_coordinates(const IntVector& x) const {
  IntVector y = class_of(x);
  y.resize(free_rank);
  return y;
}

std::optional<RatVector> CokernelPresentation::functional_coordinates(const RatVector& ell) const {
  if (ell.size() != ambient) throw InputError("functional_coordinates: dimension mismatch");
  // ell = c * F  <=>  F^T c = ell
  std::vector<RatVector> rows(ambient, RatVector(free_rank));
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t k = 0; k < free_rank; ++k) rows[i][k] = projection(k, i);
  return solve_rational(rows, ell, free_rank);
}

CokernelPresentation cokernel(const IntMatrix& A) {
  SmithDecomposition snf = smith_normal_form(A);
  const std::size_t m = A.rows();
  CokernelPresentation out;
  out.ambient = m;
  out.free_rank = m - snf.rank;

  IntMatrix free_rows(out.free_rank, m);
  for (std::size_t k = 0; k < out.free_rank; ++k)
    for (std::size_t j = 0; j < m; ++j) free_rows(k, j) = snf.U(snf.rank + k, j);
  IntMatrix free_hnf = hermite_normal_form(free_rows).H;

  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) > 1) {
      out.torsion.push_back(snf.S(i, i));
      torsion_rows.push_back(i);
    }

  out.projection = IntMatrix(out.free_rank + torsion_rows.size(), m);
  for (std::size_t k = 0; k < out.free_rank; ++k)
    for (std::size_t j = 0; j < m; ++j) out.projection(k, j) = free_hnf(k, j);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    for (std::size_t j = 0; j < m; ++j)
      out.projection(out.free_rank + k, j) = snf.U(torsion_rows[k], j);
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& A) {
  SmithDecomposition snf = smith_normal_form(A);
  const std::size_t n = A.cols();
  const std::size_t k = n - snf.rank;
  if (k == 0) return {};
  IntMatrix basis(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < n; ++j) basis(r, j) = snf.V(j, snf.rank + r);
  IntMatrix h = hermite_normal_form(basis).H;
  return h.row_vectors();
}

std::size_t rank(const std::vector<IntVector>& rows_in, std::size_t cols) {
  std::vector<IntVector> M = rows_in;
  const std::size_t m = M.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[r], M[p]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = M[r][c] * M[i][k] - M[i][c] * M[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][k] = v;
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& A) { return rank(A.row_vectors(), A.cols()); }

std::optional<RatVector> solve_rational(const std::vector<RatVector>& A, const RatVector& b,
                                        std::size_t cols) {
  const std::size_t m = A.size();
  if (b.size() != m) throw InputError("solve_rational: dimension mismatch");
  std::vector<RatVector> M(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != cols) throw InputError("solve_rational: ragged matrix");
    M[i] = A[i];
    M[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[r], M[p]);
    Rational inv = 1 / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t k = c; k <= cols; ++k) M[i][k] -= f * M[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (M[i][cols] != 0) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = M[i][cols];
  return x;
}

std::optional<RatVector> solve_rational(const IntMatrix& A, const RatVector& b) {
  std::vector<RatVector> rows(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) rows[i] = to_rational(A.row(i));
  return solve_rational(rows, b, A.cols());
}

// ---------------------------------------------------------------------------
// Dense tableau simplex, Bland's rule.

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows + 1, RatVector(cols + 1)), basis_(rows, kNone) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  Rational& objective(std::size_t j) { return t_[rows_][j]; }
  Rational& objective_value() { return t_[rows_][cols_]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return rows_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t k = 0; k <= cols_; ++k)
        if (t_[r][k] != 0) t_[i][k] -= f * t_[r][k];
    }
    basis_[r] = c;
  }

  // false when unbounded
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < cols_; ++c)
        if (allowed[c] && t_[rows_][c] < 0) {
          enter = c;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVector solution;
  Rational value;
};

// maximize c.z  subject to  A z <= b,  z >= 0
LpResult simplex_maximize(const std::vector<RatVector>& A, const RatVector& b,
                          const RatVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  const std::size_t art = n + m;
  Tableau tab(m, n + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = A[i][j];
    tab.at(i, n + i) = 1;
    tab.at(i, art) = -1;
    tab.rhs(i) = b[i];
    tab.basis(i) = n + i;
  }
  std::vector<bool> allowed(n + m + 1, true);

  std::size_t most_negative = kNone;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0 && (most_negative == kNone || b[i] < b[most_negative])) most_negative = i;

  if (most_negative != kNone) {
    tab.objective(art) = 1;  // maximize -x0
    tab.pivot(most_negative, art);
    tab.optimize(allowed);
    if (tab.objective_value() < 0) return {};
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis(i) != art) continue;
      for (std::size_t j = 0; j < n + m; ++j)
        if (tab.at(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
    }
  }
  allowed[art] = false;
  for (std::size_t j = 0; j <= n + m; ++j) tab.objective(j) = 0;
  tab.objective_value() = 0;
  for (std::size_t j = 0; j < n; ++j) tab.objective(j) = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bcol = tab.basis(i);
    Rational f = tab.objective(bcol);
    if (f == 0) continue;
    for (std::size_t j = 0; j <= n + m; ++j) tab.objective(j) -= f * tab.at(i, j);
    tab.objective_value() -= f * tab.rhs(i);
  }
  LpResult res;
  if (!tab.optimize(allowed)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.solution.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis(i) < n) res.solution[tab.basis(i)] = tab.rhs(i);
  res.value = tab.objective_value();
  return res;
}

bool satisfies(const LinearInequality& ineq, const RatVector& x) {
  Rational v = dot(ineq.coefficients, x) + ineq.constant;
  return ineq.relation == Relation::Positive ? v > 0 : v >= 0;
}

}  // namespace

std::optional<RatVector> lp_feasible_strict(const std::vector<LinearInequality>& system,
                                            std::size_t dim) {
  bool any_strict = false;
  for (const auto& ineq : system) {
    if (ineq.coefficients.size() != dim) throw InputError("lp_feasible_strict: dimension mismatch");
    any_strict = any_strict || ineq.relation == Relation::Positive;
  }
  // columns: x+ (dim), x- (dim), margin t (when strict rows exist)
  const std::size_t nvars = 2 * dim + (any_strict ? 1 : 0);
  std::vector<RatVector> A;
  RatVector b;
  for (const auto& ineq : system) {
    RatVector row(nvars);
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] = -ineq.coefficients[j];
      row[dim + j] = ineq.coefficients[j];
    }
    if (ineq.relation == Relation::Positive) row[2 * dim] = 1;
    A.push_back(std::move(row));
    b.push_back(ineq.constant);
  }
  RatVector objective(nvars);
  if (any_strict) {
    RatVector cap(nvars);
    cap[2 * dim] = 1;
    A.push_back(std::move(cap));
    b.push_back(1);
    objective[2 * dim] = 1;
  }
  LpResult res = simplex_maximize(A, b, objective);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  if (any_strict && res.value <= 0) return std::nullopt;
  RatVector x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = res.solution[j] - res.solution[dim + j];
  for (const auto& ineq : system)
    if (!satisfies(ineq, x)) throw Error("lp_feasible_strict: witness check failed");
  return x;
}

}  // namespace toric
