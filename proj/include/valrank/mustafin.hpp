#pragma once

// Combinatorial special fibers of Mustafin varieties. For a vertex [G] and
// lattices Lambda_i = M_i O^d the maps A_i = M_i^-1 G, written in the basis of
// the vertex lattice, are saturated and reduced; the subset kernel dimensions
// d_I then decide the dimension of the closed image of the projections.

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "valrank/buildings.hpp"
#include "valrank/error.hpp"
#include "valrank/local_linalg.hpp"
#include "valrank/valued.hpp"

namespace valrank {

constexpr std::size_t kMaxFactors = 20;

using Multidegree = std::vector<int>;

/// d_table[mask] = dim of the intersection of ker A_i over the bits of mask;
/// d_table[0] = d.
std::vector<int> kernel_profile_from_ranks(std::size_t n, int d, const std::vector<int>& stacked_ranks);

/// All m in N^n with sum h and, for every nonempty I, sum_{i in I} m_i < d - d_I.
std::vector<Multidegree> m_set(const std::vector<int>& d_table, int h, int d, std::size_t n);

/// max{h in [0, d-1] : M(h) nonempty}, or 0 when no h qualifies.
int image_dimension(const std::vector<int>& d_table, int d, std::size_t n);

template <class F>
std::vector<int> kernel_profile(const std::vector<Matrix<F>>& maps) {
  const std::size_t n = maps.size();
  if (n > kMaxFactors) fail(ErrorCode::TooManyFactors, "kernel profile supports at most 20 maps");
  if (n == 0) fail(ErrorCode::InvalidArgument, "kernel profile of an empty family");
  const std::size_t d = maps.front().cols();
  for (const auto& m : maps)
    if (m.cols() != d) fail(ErrorCode::InvalidArgument, "maps have different source dimensions");
  std::vector<int> ranks(std::size_t{1} << n, 0);
  for (std::size_t mask = 1; mask < ranks.size(); ++mask) {
    std::size_t rows = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) rows += maps[i].rows();
    Matrix<F> stacked(rows, d, maps.front().zero());
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t a = 0; a < maps[i].rows(); ++a, ++r)
        for (std::size_t b = 0; b < d; ++b) stacked(r, b) = maps[i](a, b);
    }
    ranks[mask] = static_cast<int>(field_rank(stacked));
  }
  return kernel_profile_from_ranks(n, static_cast<int>(d), ranks);
}

template <class T>
struct VertexReport {
  LatticeClass<T> vertex;
  std::vector<int> rank_vector;
  std::vector<int> d_table;
  int dimension = 0;
  std::vector<Multidegree> top_multidegrees;
  bool is_component = false;
};

template <class T>
struct FiberReport {
  std::vector<VertexReport<T>> vertices;
  bool finite_residue_field = false;

  std::size_t component_count() const {
    std::size_t c = 0;
    for (const auto& v : vertices) c += v.is_component ? 1 : 0;
    return c;
  }
};

template <class T>
constexpr bool has_finite_residue_field() {
  return std::is_same_v<typename T::residue_type, Fp>;
}

/// Saturated reductions of A_i = M_i^-1 G for each lattice representative M_i.
template <class T>
std::vector<Matrix<typename T::residue_type>> reduced_maps(const std::vector<Matrix<T>>& gamma, const Matrix<T>& g) {
  std::vector<Matrix<typename T::residue_type>> out;
  for (const auto& m : gamma) {
    require_same_backend(m, g);
    require_square_invertible(m);
    out.push_back(reduce_residue(saturate_matrix(field_inverse(m) * g).second));
  }
  return out;
}

template <class T>
VertexReport<T> vertex_report(const std::vector<Matrix<T>>& gamma, const LatticeClass<T>& vertex) {
  const auto maps = reduced_maps(gamma, vertex.canonical());
  const int d = static_cast<int>(vertex.dimension());
  VertexReport<T> r{vertex, {}, kernel_profile(maps), 0, {}, false};
  for (const auto& m : maps) r.rank_vector.push_back(static_cast<int>(field_rank(m)));
  r.dimension = image_dimension(r.d_table, d, maps.size());
  r.top_multidegrees = m_set(r.d_table, r.dimension, d, maps.size());
  r.is_component = r.dimension == d - 1;
  return r;
}

/// One report per vertex of conv(gamma), in canonical order.
template <class T>
FiberReport<T> special_fiber_components(const std::vector<LatticeClass<T>>& gamma) {
  const ConvexHull<T> hull = convex_hull(gamma);
  std::vector<Matrix<T>> reps;
  for (const auto& g : gamma) reps.push_back(g.canonical());
  FiberReport<T> out;
  out.finite_residue_field = has_finite_residue_field<T>();
  for (const auto& v : hull.vertices) out.vertices.push_back(vertex_report(reps, v));
  return out;
}

template <class T>
struct MPReport {
  bool saturated = false;
  int mp_dimension = 0;
  std::vector<Matrix<T>> b_matrices;
  std::vector<LatticeClass<T>> gamma;
  std::vector<LatticeClass<T>> hull;
  bool hull_contains_standard = false;
};

/// B_j = (a_j^(1) | ... | a_j^(n)) for j = 1..e.
template <class T>
std::vector<Matrix<T>> assemble_b(const std::vector<Matrix<T>>& a) {
  if (a.empty()) fail(ErrorCode::InvalidArgument, "empty matrix family");
  const std::size_t d = a.front().rows(), e = a.front().cols();
  if (a.size() != d) fail(ErrorCode::RectangularityViolation, "the family must contain exactly d matrices");
  for (const auto& m : a) {
    if (m.rows() != d || m.cols() != e) fail(ErrorCode::RectangularityViolation, "matrices of different shapes");
    if (!m.zero().same_backend(a.front().zero())) fail(ErrorCode::BackendMismatch, "matrices over different fields");
  }
  std::vector<Matrix<T>> b;
  for (std::size_t j = 0; j < e; ++j) {
    Matrix<T> bj(d, a.size(), a.front().zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t r = 0; r < d; ++r) bj(r, i) = a[i](r, j);
    if (is_zero(local_determinant(bj))) fail(ErrorCode::SingularB, "B_" + std::to_string(j + 1) + " is singular");
    b.push_back(std::move(bj));
  }
  return b;
}

/// The A_i are an O-basis of their span intersected with integral matrices.
template <class T>
bool family_saturated(const std::vector<Matrix<T>>& a) {
  const std::size_t d = a.front().rows(), e = a.front().cols();
  Matrix<T> coords(d * e, a.size(), a.front().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_integral(a[i])) return false;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < e; ++c) coords(r * e + c, i) = a[i](r, c);
  }
  for (const Valuation& v : smith_valuations(coords))
    if (v != Valuation(0)) return false;
  return true;
}

template <class T>
MPReport<T> mp_dimension(const std::vector<Matrix<T>>& a) {
  MPReport<T> r;
  r.b_matrices = assemble_b(a);
  r.saturated = family_saturated(a);
  std::vector<Matrix<typename T::residue_type>> maps;
  for (const auto& b : r.b_matrices) maps.push_back(reduce_residue(saturate_matrix(b).second));
  r.mp_dimension = image_dimension(kernel_profile(maps), static_cast<int>(a.front().rows()), maps.size());
  return r;
}

template <class T>
MPReport<T> basis_criterion(const std::vector<Matrix<T>>& a) {
  MPReport<T> r = mp_dimension(a);
  for (const auto& b : r.b_matrices) r.gamma.emplace_back(field_inverse(b));
  const ConvexHull<T> hull = convex_hull(r.gamma);
  r.hull = hull.vertices;
  const std::size_t d = a.front().rows();
  r.hull_contains_standard = hull_member(LatticeClass<T>(Matrix<T>::identity(d, a.front().zero())), hull);
  if (r.saturated && r.mp_dimension == static_cast<int>(d) - 1 && !r.hull_contains_standard)
    fail(ErrorCode::TheoremViolation, "saturated family of full multi-projective dimension misses the standard lattice");
  return r;
}

}  // namespace valrank
