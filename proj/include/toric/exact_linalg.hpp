#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/arith.hpp"
#include "toric/int_matrix.hpp"

namespace toric {

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... .
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;

  IntVector diagonal() const;
};

/// Pivot rule: smallest absolute nonzero entry of the active block, ties broken by
/// (row, column) position. Output is a deterministic function of the input.
SmithDecomposition smith_normal_form(const IntMatrix& A);

/// Row-style Hermite normal form H = T * A (T unimodular): echelon form with positive
/// pivots and entries above each pivot reduced into [0, pivot). Zero rows come last.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix T;
  std::size_t rank = 0;
};
HermiteDecomposition hermite_normal_form(const IntMatrix& A);

/// Presentation of Z^rows / colspan(A) as Z^free_rank (+) (+)_i Z/torsion_i.
struct CokernelPresentation {
  std::size_t ambient = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  /// (free_rank + torsion.size()) x ambient: free rows first (in Hermite form), then
  /// one row per torsion factor.
  IntMatrix projection;

  /// Free coordinates followed by torsion coordinates reduced into [0, d).
  IntVector class_of(const IntVector& x) const;
  IntVector free_coordinates(const IntVector& x) const;
  /// Writes a functional on Z^ambient that vanishes on colspan(A) in the dual of the free
  /// coordinates, i.e. returns c with ell = c * F. Empty when ell does not vanish there.
  std::optional<RatVector> functional_coordinates(const RatVector& ell) const;
};
CokernelPresentation cokernel(const IntMatrix& A);

/// Saturated integer basis of {x : A x = 0}, one basis vector per returned entry,
/// in row Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& A);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& A);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

/// A particular solution of A x = b (free variables set to zero), or nothing.
std::optional<RatVector> solve_rational(const IntMatrix& A, const RatVector& b);
std::optional<RatVector> solve_rational(const std::vector<RatVector>& A, const RatVector& b,
                                        std::size_t cols);

enum class Relation { NonNegative, Positive };

/// <coefficients, x> + constant  (>= 0 | > 0)
struct LinearInequality {
  RatVector coefficients;
  Rational constant = 0;
  Relation relation = Relation::NonNegative;
};

/// Exact feasibility of a mixed strict / non-strict linear system over Q^dim. Strict rows
/// are handled by maximising a common margin (capped at 1) and requiring it to be
/// positive. Simplex with Bland's rule. Returns a witness that satisfies every row exactly.
std::optional<RatVector> lp_feasible_strict(const std::vector<LinearInequality>& system,
                                            std::size_t dim);

}  // namespace toric
