#pragma once

#include "simplex_lab/errors.hpp"
#include "simplex_lab/indexing.hpp"
#include "simplex_lab/matrix.hpp"
#include "simplex_lab/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace simplex_lab {

/// Squared edge lengths s_ij of an n-simplex, in canonical pair order.
template <Scalar T>
class SquaredEdgeVector {
public:
  SquaredEdgeVector() = default;
  SquaredEdgeVector(int n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw PreconditionError("SquaredEdgeVector: dimension must be >= 1");
    if (entries_.size() != pair_count(n_))
      throw PreconditionError("SquaredEdgeVector: expected " + std::to_string(pair_count(n_)) +
                              " entries, got " + std::to_string(entries_.size()));
  }
  static SquaredEdgeVector constant(int n, const T& value) {
    return SquaredEdgeVector(n, std::vector<T>(pair_count(n), value));
  }

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<T>& entries() const { return entries_; }
  const T& operator[](std::size_t k) const { return entries_[k]; }
  T& operator[](std::size_t k) { return entries_[k]; }
  /// s_ij for i != j in {0..n}, either order.
  const T& at(int i, int j) const { return entries_[pair_index(n_, i, j)]; }
  T& at(int i, int j) { return entries_[pair_index(n_, i, j)]; }

  SquaredEdgeVector operator-() const {
    SquaredEdgeVector out = *this;
    for (auto& x : out.entries_) x = -x;
    return out;
  }

  friend bool operator==(const SquaredEdgeVector&, const SquaredEdgeVector&) = default;

private:
  int n_ = 1;
  std::vector<T> entries_;
};

/// Squared 2-face areas S_ijk of an n-simplex, in canonical triple order.
template <Scalar T>
class SquaredAreaVector {
public:
  SquaredAreaVector() = default;
  SquaredAreaVector(int n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 2) throw PreconditionError("SquaredAreaVector: dimension must be >= 2");
    if (entries_.size() != triple_count(n_))
      throw PreconditionError("SquaredAreaVector: expected " + std::to_string(triple_count(n_)) +
                              " entries, got " + std::to_string(entries_.size()));
  }

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<T>& entries() const { return entries_; }
  const T& operator[](std::size_t k) const { return entries_[k]; }
  const T& at(int i, int j, int k) const { return entries_[triple_index(n_, i, j, k)]; }

  friend bool operator==(const SquaredAreaVector&, const SquaredAreaVector&) = default;

private:
  int n_ = 2;
  std::vector<T> entries_;
};

/// Squared n-volume W = V^2.
template <Scalar T>
struct VolumeSquared {
  T value;
  friend bool operator==(const VolumeSquared&, const VolumeSquared&) = default;
};

/// 2^n (n!)^2 as an exact rational.
Rational cayley_menger_denominator(int n);

/// Squared volume from the bordered Cayley-Menger determinant:
///   W = (-1)^(n+1) / (2^n (n!)^2) * det [[0, 1...], [1, s_ij]]
template <Scalar T>
VolumeSquared<T> cm_volume_squared(const SquaredEdgeVector<T>& s) {
  const int n = s.n();
  const T& like = s[0];
  const T zero = RingTraits<T>::embed(Rational(0), like);
  const T one = RingTraits<T>::embed(Rational(1), like);
  const auto dim = static_cast<std::size_t>(n) + 2;
  Matrix<T> b(dim, dim, zero);
  for (std::size_t k = 1; k < dim; ++k) {
    b(0, k) = one;
    b(k, 0) = one;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      b(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1) = s.at(i, j);
      b(static_cast<std::size_t>(j) + 1, static_cast<std::size_t>(i) + 1) = s.at(i, j);
    }
  Rational factor = Rational(1) / cayley_menger_denominator(n);
  if ((n + 1) % 2 != 0) factor = -factor;
  return {scale(determinant(b), factor)};
}

/// Independent route: W = det G / (n!)^2 with G_ij = (s_0i + s_0j - s_ij) / 2.
template <Scalar T>
VolumeSquared<T> gram_volume_squared(const SquaredEdgeVector<T>& s) {
  const int n = s.n();
  const T& like = s[0];
  const auto un = static_cast<std::size_t>(n);
  Matrix<T> g(un, un, RingTraits<T>::embed(Rational(0), like));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto r = static_cast<std::size_t>(i - 1);
      const auto c = static_cast<std::size_t>(j - 1);
      if (i == j)
        g(r, c) = s.at(0, i);
      else
        g(r, c) = scale(s.at(0, i) + s.at(0, j) - s.at(i, j), Rational(1, 2));
    }
  Rational fact(1);
  for (int k = 2; k <= n; ++k) fact *= Rational(k);
  return {scale(determinant(g), Rational(1) / (fact * fact))};
}

/// Heron's formula in squared lengths:
///   S = (2ab + 2bc + 2ca - a^2 - b^2 - c^2) / 16
template <Scalar T>
T heron_area_squared(const T& a, const T& b, const T& c) {
  const T two = RingTraits<T>::embed(Rational(2), a);
  const T num = two * (a * b + b * c + c * a) - a * a - b * b - c * c;
  return scale(num, Rational(1, 16));
}

/// The Heron map: all squared 2-face areas from squared edge lengths.
template <Scalar T>
SquaredAreaVector<T> area_map(const SquaredEdgeVector<T>& s) {
  const int n = s.n();
  if (n < 2) throw PreconditionError("area_map: dimension must be >= 2");
  std::vector<T> out;
  out.reserve(triple_count(n));
  for (const auto& [i, j, k] : triples(n)) out.push_back(heron_area_squared(s.at(i, j), s.at(j, k), s.at(k, i)));
  return SquaredAreaVector<T>(n, std::move(out));
}

/// Restriction of s to the sub-simplex on `vertices`, relabelled 0..m-1 in
/// the given order.
template <Scalar T>
SquaredEdgeVector<T> restrict_to(const SquaredEdgeVector<T>& s, const std::vector<int>& vertices) {
  const int m = static_cast<int>(vertices.size()) - 1;
  if (m < 1) throw PreconditionError("restrict_to: need at least two vertices");
  std::vector<T> out;
  out.reserve(pair_count(m));
  for (const auto& [i, j] : pairs(m)) out.push_back(s.at(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]));
  return SquaredEdgeVector<T>(m, std::move(out));
}

/// Relabel vertices: the result t satisfies t(perm[i], perm[j]) = s(i, j).
template <Scalar T>
SquaredEdgeVector<T> permute_vertices(const SquaredEdgeVector<T>& s, const std::vector<int>& perm) {
  SquaredEdgeVector<T> out = s;
  for (const auto& [i, j] : pairs(s.n())) out.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = s.at(i, j);
  return out;
}

template <Scalar T>
SquaredEdgeVector<T> scale_edges(const SquaredEdgeVector<T>& s, const Rational& lambda) {
  std::vector<T> out;
  out.reserve(s.size());
  for (const auto& x : s.entries()) out.push_back(scale(x, lambda));
  return SquaredEdgeVector<T>(s.n(), std::move(out));
}

}  // namespace simplex_lab
