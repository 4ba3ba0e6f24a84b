#pragma once

// Vertices of the Bruhat-Tits building of PGL_d over PAdicRational or
// TAdicFunction. A lattice is the column span M O^d of an invertible matrix.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "valrank/error.hpp"
#include "valrank/local_linalg.hpp"
#include "valrank/valued.hpp"

namespace valrank {

template <class T>
int compare_matrices(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (const int c = T::compare(a(i, j), b(i, j)); c != 0) return c;
  return 0;
}

template <class T>
void require_same_backend(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.zero().same_backend(b.zero()))
    fail(ErrorCode::BackendMismatch, "lattices live over different fields or dimensions");
}

template <class T>
void require_square_invertible(const Matrix<T>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) fail(ErrorCode::SingularMatrix, "lattice matrix must be square");
  if (is_zero(local_determinant(m))) fail(ErrorCode::SingularMatrix, "lattice matrix is singular");
}

/// Homothety-normalized lower-triangular Hermite form of M O^d.
template <class T>
Matrix<T> canonical_form(const Matrix<T>& m) {
  require_square_invertible(m);
  const Matrix<T> h = hermite_form(m);
  const std::int64_t s = min_valuation(h).value();
  if (s == 0) return h;
  return hermite_form(scale(h, m.zero().pi_power(-s)));
}

template <class T>
class LatticeClass {
 public:
  explicit LatticeClass(const Matrix<T>& representative) : canonical_(canonical_form(representative)) {}

  const Matrix<T>& canonical() const { return canonical_; }
  std::size_t dimension() const { return canonical_.rows(); }

  friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.canonical_ == b.canonical_; }
  friend bool operator<(const LatticeClass& a, const LatticeClass& b) {
    return compare_matrices(a.canonical_, b.canonical_) < 0;
  }

 private:
  Matrix<T> canonical_;
};

template <class T>
Matrix<T> field_inverse(const Matrix<T>& m) {
  return invert(m, true);
}

/// Lambda_2 is a sublattice of Lambda_1.
template <class T>
bool contains(const Matrix<T>& m1, const Matrix<T>& m2) {
  require_same_backend(m1, m2);
  return is_integral(field_inverse(m1) * m2);
}

template <class T>
bool adjacent(const LatticeClass<T>& a, const LatticeClass<T>& b) {
  require_same_backend(a.canonical(), b.canonical());
  if (a == b) return false;
  const Matrix<T>& m1 = a.canonical();
  const Matrix<T>& m2 = b.canonical();
  // Largest m with Lambda_2 inside pi^m Lambda_1, then test pi^(m+1) Lambda_1 inside Lambda_2.
  const std::int64_t m = min_valuation(field_inverse(m1) * m2).value();
  const Valuation back = min_valuation(field_inverse(m2) * m1);
  return back.value() + m + 1 >= 0;
}

namespace detail {

template <class T>
Matrix<T> dual_lattice(const Matrix<T>& m) {
  return field_inverse(m).transpose();
}

/// Lambda_1 cap Lambda_2 from the two dual generator matrices: the dual of
/// the intersection is the sum of the duals.
template <class T>
Matrix<T> meet_from_duals(const Matrix<T>& dual1, const Matrix<T>& dual2) {
  return dual_lattice(hermite_form(hconcat(dual1, dual2)));
}

}  // namespace detail

/// Generator matrix (in Hermite form) of Lambda_1 cap Lambda_2, through duals.
template <class T>
Matrix<T> intersect(const Matrix<T>& m1, const Matrix<T>& m2) {
  require_same_backend(m1, m2);
  require_square_invertible(m1);
  require_square_invertible(m2);
  const Matrix<T> meet = hermite_form(detail::meet_from_duals(detail::dual_lattice(m1), detail::dual_lattice(m2)));
  if (!contains(m1, meet) || !contains(m2, meet))
    fail(ErrorCode::TheoremViolation, "intersection is not contained in both lattices");
  return meet;
}

/// Invariant-factor valuations of M1^-1 M2, in increasing order.
template <class T>
std::vector<std::int64_t> relative_invariants(const Matrix<T>& m1, const Matrix<T>& m2) {
  std::vector<std::int64_t> out;
  for (const Valuation& v : smith_valuations(field_inverse(m1) * m2)) out.push_back(v.value());
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
struct ConvexHull {
  std::vector<LatticeClass<T>> vertices;  // sorted by canonical form
  std::vector<LatticeClass<T>> generators;
};

template <class T>
bool hull_member(const LatticeClass<T>& l, const ConvexHull<T>& h) {
  if (!h.vertices.empty()) require_same_backend(l.canonical(), h.vertices.front().canonical());
  return std::binary_search(h.vertices.begin(), h.vertices.end(), l);
}

/// Smallest set of classes containing gamma and closed under
/// [Lambda_a cap pi^m Lambda_b]. The initial pass intersects all shifted
/// generators over the box of relevant shifts; a pairwise closure loop then
/// runs to a fixed point.
template <class T>
ConvexHull<T> convex_hull(const std::vector<LatticeClass<T>>& gamma) {
  if (gamma.empty()) fail(ErrorCode::InvalidArgument, "convex hull of an empty set");
  for (const auto& g : gamma) require_same_backend(gamma.front().canonical(), g.canonical());
  const T zero = gamma.front().canonical().zero();
  std::vector<LatticeClass<T>> found;  // sorted
  std::vector<Matrix<T>> order;        // insertion order, drives the closure
  auto insert = [&](const Matrix<T>& m) {
    LatticeClass<T> c(m);
    auto it = std::lower_bound(found.begin(), found.end(), c);
    if (it != found.end() && *it == c) return;
    order.push_back(c.canonical());
    found.insert(it, std::move(c));
  };

  const Matrix<T>& base = gamma.front().canonical();
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges{{0, 0}};
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    const auto inv = relative_invariants(base, gamma[i].canonical());
    // pi^m Lambda_i contains Lambda_1 for m <= -max and sits inside it for m >= -min.
    ranges.emplace_back(-inv.back(), -inv.front());
  }
  std::vector<std::int64_t> shift(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) shift[i] = ranges[i].first;
  while (true) {
    Matrix<T> acc = base;
    for (std::size_t i = 1; i < gamma.size(); ++i)
      acc = intersect(acc, scale(gamma[i].canonical(), zero.pi_power(shift[i])));
    insert(acc);
    std::size_t pos = 1;
    while (pos < gamma.size() && ++shift[pos] > ranges[pos].second) {
      shift[pos] = ranges[pos].first;
      ++pos;
    }
    if (pos >= gamma.size()) break;
  }
  for (const auto& g : gamma) insert(g.canonical());

  // Each new vertex is intersected with every earlier one exactly once. The
  // dual of pi^m Lambda is pi^-m times the dual of Lambda.
  std::vector<Matrix<T>> duals;
  for (std::size_t b = 0; b < order.size(); ++b) {
    duals.push_back(detail::dual_lattice(order[b]));
    for (std::size_t a = 0; a < b; ++a) {
      const auto inv = relative_invariants(order[a], order[b]);
      for (std::int64_t m = -inv.back(); m <= -inv.front(); ++m)
        insert(detail::meet_from_duals(duals[a], scale(duals[b], zero.pi_power(-m))));
    }
  }
  ConvexHull<T> h;
  h.vertices = std::move(found);
  h.generators = gamma;
  return h;
}

}  // namespace valrank
