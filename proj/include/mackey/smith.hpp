#pragma once

#include <optional>
#include <vector>

#include "mackey/integer.hpp"

namespace mackey {

/// U * A * V == D with U, V unimodular and d_1 | d_2 | ... on the diagonal of D.
/// The inverses of U and V are tracked alongside so callers never invert.
struct SmithResult {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  /// Diagonal entries d_1..d_min(m,n) (zeros past the rank).
  IntVector diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

struct SmithWork {
  IntMatrix D, U, V, U_inv, V_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
  // row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& c) {
    D.add_row(dst, src, c);
    U.add_row(dst, src, c);
    U_inv.add_col(src, dst, -c);
  }
  // col[dst] += c * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& c) {
    D.add_col(dst, src, c);
    V.add_col(dst, src, c);
    V_inv.add_row(src, dst, -c);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, r) = -U_inv(i, r);
  }
};

}  // namespace detail

/// Pivot policy: smallest-magnitude nonzero entry of the active submatrix,
/// ties broken by row-major position. Deterministic for a given input.
inline SmithResult smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  detail::SmithWork w{A, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m), IntMatrix::identity(n)};
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool any = false;
    while (true) {
      // pick pivot
      std::size_t pi = 0, pj = 0;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& v = w.D(i, j);
          if (v == 0) continue;
          Int a = abs(v);
          if (best == 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;
      any = true;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      const Int pivot = w.D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = w.D(i, t) / pivot;
        if (q != 0) w.add_row(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = w.D(t, j) / pivot;
        if (q != 0) w.add_col(j, t, -q);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = w.D(i, t) == 0;
      for (std::size_t j = t + 1; j < n && clean; ++j) clean = w.D(t, j) == 0;
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.D(i, j) % pivot != 0) {
            w.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!any) break;
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  SmithResult out{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.U_inv), std::move(w.V_inv), t};
  return out;
}

/// Some integral x with A x = b, or nullopt when none exists.
inline std::optional<IntVector> solve_integer_linear(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong length");
  const SmithResult s = smith_normal_form(A);
  const IntVector c = s.U.apply(b);
  IntVector y(A.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      const Int& d = s.D(i, i);
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

/// Columns form a basis of {x in Z^n : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& A) {
  const SmithResult s = smith_normal_form(A);
  const std::size_t n = A.cols();
  IntMatrix K(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) K(i, j - s.rank) = s.V(i, j);
  return K;
}

/// Rows form a basis of the lattice spanned by the rows of G.
inline IntMatrix row_lattice_basis(const IntMatrix& G) {
  const SmithResult s = smith_normal_form(G);
  IntMatrix B(s.rank, G.cols());
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < G.cols(); ++j) B(i, j) = s.D(i, i) * s.V_inv(i, j);
  return B;
}

/// Coefficients c with sum_i c_i * row_i(B) == x, if x lies in the row lattice.
inline std::optional<IntVector> express_in_row_basis(const IntMatrix& B, const IntVector& x) {
  return solve_integer_linear(B.transpose(), x);
}

}  // namespace mackey
