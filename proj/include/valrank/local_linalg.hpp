#pragma once

// Normal forms over local principal ideal rings. The templates accept any
// scalar type providing valuation(), exact_quotient(), pi_power() and the
// is_zero/zero_like/one_like free functions: Zpk, GaloisRingElement,
// PAdicRational and TAdicFunction all qualify. Field routines (rref, kernels)
// accept Fp and Rational.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "valrank/error.hpp"
#include "valrank/fields.hpp"
#include "valrank/matrix.hpp"
#include "valrank/valuation.hpp"

namespace valrank {

template <class T>
struct SmithDecomposition {
  std::vector<Valuation> divisor_valuations;
  Matrix<T> left;
  Matrix<T> right;
  Matrix<T> diagonal;
};

struct RankProfile {
  std::size_t inner_rank = 0;
  std::size_t free_rank_kernel = 0;
  std::vector<Valuation> divisor_valuations;
};

namespace detail {

template <class T, bool Track>
SmithDecomposition<T> smith_impl(const Matrix<T>& m) {
  const T one = one_like(m.zero());
  Matrix<T> d = m;
  Matrix<T> left = Track ? Matrix<T>::identity(m.rows(), one) : Matrix<T>(0, 0, one);
  Matrix<T> right = Track ? Matrix<T>::identity(m.cols(), one) : Matrix<T>(0, 0, one);
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<Valuation> vals;
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = 0, pj = 0;
    Valuation best = Valuation::infinity();
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (is_zero(d(i, j))) continue;
        const Valuation v = d(i, j).valuation();
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best.is_infinite()) {
      vals.resize(steps, Valuation::infinity());
      break;
    }
    d.swap_rows(t, pi);
    d.swap_cols(t, pj);
    if constexpr (Track) {
      left.swap_rows(t, pi);
      right.swap_cols(t, pj);
    }
    const T target = one.pi_power(best.value());
    const T unit = d(t, t).exact_quotient(target);
    const T unit_inv = one.exact_quotient(unit);
    d.scale_row(t, unit_inv);
    if constexpr (Track) left.scale_row(t, unit_inv);
    d(t, t) = target;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (is_zero(d(i, t))) continue;
      const T q = d(i, t).exact_quotient(target);
      d.row_axpy(i, q, t);
      if constexpr (Track) left.row_axpy(i, q, t);
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (is_zero(d(t, j))) continue;
      const T q = d(t, j).exact_quotient(target);
      d.col_axpy(j, q, t);
      if constexpr (Track) right.col_axpy(j, q, t);
    }
    vals.push_back(best);
  }
  return {std::move(vals), std::move(left), std::move(right), std::move(d)};
}

}  // namespace detail

/// left * M * right = diag(pi^v_1, ...), pivoting on minimal valuation with
/// ties broken row-major.
template <class T>
SmithDecomposition<T> smith_form(const Matrix<T>& m) {
  return detail::smith_impl<T, true>(m);
}

template <class T>
std::vector<Valuation> smith_valuations(const Matrix<T>& m) {
  return detail::smith_impl<T, false>(m).divisor_valuations;
}

/// Number of elementary divisors that are nonzero (finite valuation).
inline std::size_t count_finite(const std::vector<Valuation>& vals) {
  std::size_t r = 0;
  for (const auto& v : vals) r += v.is_finite() ? 1 : 0;
  return r;
}

template <class T>
std::size_t inner_rank(const Matrix<T>& m) {
  return count_finite(smith_valuations(m));
}

template <class T>
std::size_t free_rank_kernel(const Matrix<T>& m) {
  return m.cols() - inner_rank(m);
}

template <class T>
RankProfile rank_profile(const Matrix<T>& m) {
  RankProfile r;
  r.divisor_valuations = smith_valuations(m);
  r.inner_rank = count_finite(r.divisor_valuations);
  r.free_rank_kernel = m.cols() - r.inner_rank;
  return r;
}

/// Determinant over a local ring by elimination on minimal-valuation pivots.
template <class T>
T local_determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Matrix<T> a = m;
  T det = one_like(m.zero());
  const std::size_t n = a.rows();
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t piv = n;
    Valuation best = Valuation::infinity();
    for (std::size_t i = t; i < n; ++i) {
      if (is_zero(a(i, t))) continue;
      const Valuation v = a(i, t).valuation();
      if (v < best) {
        best = v;
        piv = i;
      }
    }
    if (piv == n) return m.zero();
    if (piv != t) {
      a.swap_rows(t, piv);
      det = -det;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      if (is_zero(a(i, t))) continue;
      a.row_axpy(i, a(i, t).exact_quotient(a(t, t)), t);
    }
    det = det * a(t, t);
  }
  return det;
}

/// Inverse by Gauss-Jordan. Over a ring every pivot must be a unit (valuation 0);
/// over a field any nonzero pivot is accepted.
template <class T>
Matrix<T> invert(const Matrix<T>& m, bool field) {
  if (m.rows() != m.cols()) fail(ErrorCode::SingularMatrix, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const T one = one_like(m.zero());
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n, one);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t piv = n;
    Valuation best = Valuation::infinity();
    for (std::size_t i = t; i < n; ++i) {
      if (is_zero(a(i, t))) continue;
      const Valuation v = a(i, t).valuation();
      if (v < best) {
        best = v;
        piv = i;
      }
    }
    if (piv == n || (!field && best != Valuation(0)))
      fail(ErrorCode::SingularMatrix, "matrix is not invertible");
    a.swap_rows(t, piv);
    inv.swap_rows(t, piv);
    const T s = one.exact_quotient(a(t, t));
    a.scale_row(t, s);
    inv.scale_row(t, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == t || is_zero(a(i, t))) continue;
      const T q = a(i, t);
      a.row_axpy(i, q, t);
      inv.row_axpy(i, q, t);
    }
  }
  return inv;
}

/// Column-style lower-triangular Hermite form of the lattice spanned by the
/// columns of a d x e generator matrix (e >= d, full row rank) over a DVR.
/// Diagonal entries are pi^a_i; each entry below the diagonal in row i is the
/// canonical representative modulo pi^a_i.
template <class T>
Matrix<T> hermite_form(const Matrix<T>& gens) {
  const std::size_t d = gens.rows(), e = gens.cols();
  const T one = one_like(gens.zero());
  Matrix<T> w = gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t best = e;
    Valuation bv = Valuation::infinity();
    for (std::size_t j = i; j < e; ++j) {
      if (is_zero(w(i, j))) continue;
      const Valuation v = w(i, j).valuation();
      if (v < bv) {
        bv = v;
        best = j;
      }
    }
    if (best == e) fail(ErrorCode::SingularMatrix, "generators do not span a full-rank lattice");
    w.swap_cols(i, best);
    const T target = one.pi_power(bv.value());
    w.scale_col(i, target.exact_quotient(w(i, i)));
    w(i, i) = target;
    for (std::size_t j = i + 1; j < e; ++j) {
      if (is_zero(w(i, j))) continue;
      w.col_axpy(j, w(i, j).exact_quotient(target), i);
    }
  }
  Matrix<T> h(d, d, gens.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) h(i, j) = w(i, j);
  for (std::size_t i = 1; i < d; ++i) {
    const std::int64_t a = h(i, i).valuation().value();
    for (std::size_t j = 0; j < i; ++j) {
      const T rep = h(i, j).residue_representative(a);
      const T q = (h(i, j) - rep).exact_quotient(h(i, i));
      if (!is_zero(q)) h.col_axpy(j, q, i);
      h(i, j) = rep;
    }
  }
  return h;
}

// ------------------------------------------------------------ fields

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
template <class F>
Echelon<F> rref(const Matrix<F>& m) {
  Matrix<F> a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = row; i < a.rows(); ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    a.swap_rows(row, piv);
    a.scale_row(row, one_like(a(row, c)) / a(row, c));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, c))) continue;
      const F q = a(i, c);
      a.row_axpy(i, q, row);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class F>
std::size_t field_rank(const Matrix<F>& m) {
  return rref(m).pivot_columns.size();
}

/// Echelonized basis of the right kernel {x : M x = 0}.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  const Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), m.zero());
    v[f] = one_like(m.zero());
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace valrank
