#pragma once

#include "simplex_lab/catalog.hpp"
#include "simplex_lab/matrix.hpp"
#include "simplex_lab/metrics.hpp"

#include <string>
#include <vector>

namespace simplex_lab {

/// dS_ijk / ds_lm of the Heron map. Rows follow the canonical triple order,
/// columns the canonical pair order.
template <Scalar T>
Matrix<T> jacobian(const SquaredEdgeVector<T>& s) {
  const int n = s.n();
  if (n < 2) throw PreconditionError("jacobian: dimension must be >= 2");
  const auto ts = triples(n);
  Matrix<T> d(ts.size(), pair_count(n), RingTraits<T>::embed(Rational(0), s[0]));
  for (std::size_t row = 0; row < ts.size(); ++row) {
    const auto [i, j, k] = ts[row];
    // dS/ds_ab = (s_bc + s_ca - s_ab) / 8 where c is the third vertex
    const std::array<std::array<int, 3>, 3> roles{{{i, j, k}, {j, k, i}, {k, i, j}}};
    for (const auto& [a, b, c] : roles)
      d(row, pair_index(n, a, b)) = scale(s.at(b, c) + s.at(c, a) - s.at(a, b), Rational(1, 8));
  }
  return d;
}

/// Whether two full-column-rank matrices have the same column space, by
/// comparing rank [M1 | M2] against the column count. Throws
/// PreconditionError naming the rank-deficient argument.
namespace detail {
// Callers guarantee both matrices have full column rank.
template <ExactScalar T>
bool same_image_full_rank(const Matrix<T>& m1, const Matrix<T>& m2) {
  return rank_exact(m1.hconcat(m2)) == m1.cols();
}
}  // namespace detail

template <ExactScalar T>
bool images_equal(const Matrix<T>& m1, const Matrix<T>& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
    throw PreconditionError("images_equal: matrices differ in shape");
  if (rank_exact(m1) != m1.cols()) throw PreconditionError("images_equal: first matrix is not of full column rank");
  if (rank_exact(m2) != m2.cols()) throw PreconditionError("images_equal: second matrix is not of full column rank");
  return detail::same_image_full_rank(m1, m2);
}

struct RankCheck {
  std::string point;
  std::size_t rank = 0;
  std::size_t expected = 0;
};

/// Exact Jacobian rank at every catalog point of dimension n.
std::vector<RankCheck> catalog_jacobian_ranks(int n);

struct ImageSweep {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> equal;  // equal[a][b] = images_equal(D(p_a), D(p_b))
  /// Pairs (a, b) where images_equal disagrees with "same pairing".
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;
};

/// Compares Jacobian images for every pair of pairing points (n >= 5).
ImageSweep sweep_pairing_images(int n);

/// Same, restricted to the given pairing-point labels.
ImageSweep sweep_pairing_images(int n, const std::vector<PairingLabel>& points);

/// `pairings` distinct partial pairings drawn with `seed`, each with both signs.
std::vector<PairingLabel> sample_pairing_labels(int n, std::size_t pairings, std::uint64_t seed);

}  // namespace simplex_lab
