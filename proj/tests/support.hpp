#pragma once

#include "simplex_lab/simplex_lab.hpp"

#include <random>

namespace test_support {

using namespace simplex_lab;

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Vertices in R^n with rational coordinates; row i is vertex i.
using Points = std::vector<std::vector<Rational>>;

inline Points random_points(std::mt19937_64& rng, int n) {
  Points p(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n)));
  for (auto& row : p)
    for (auto& x : row) x = random_rational(rng);
  return p;
}

inline Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational out;
  for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i];
  return out;
}

inline std::vector<Rational> diff(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  std::vector<Rational> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

inline SquaredEdgeVector<Rational> edges_of(const Points& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<Rational> e;
  for (const auto& [i, j] : pairs(n)) {
    const auto d = diff(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    e.push_back(dot(d, d));
  }
  return {n, e};
}

/// Plain Gaussian elimination over Q, independent of the library's Bareiss code.
inline Rational gauss_det(std::vector<std::vector<Rational>> m) {
  const std::size_t k = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv][c].is_zero()) ++piv;
    if (piv == k) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

/// (n!)^-2 det[v_i - v_0]^2 from coordinates.
inline Rational coordinate_volume_squared(const Points& p) {
  const std::size_t n = p.size() - 1;
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 1; i <= n; ++i) m.push_back(diff(p[i], p[0]));
  const Rational d = gauss_det(m);
  Rational fact(1);
  for (std::size_t i = 2; i <= n; ++i) fact *= Rational(static_cast<long>(i));
  return d * d / (fact * fact);
}

/// Squared triangle area (|u|^2 |v|^2 - (u.v)^2) / 4.
inline Rational coordinate_area_squared(const Points& p, int i, int j, int k) {
  const auto u = diff(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(i)]);
  const auto v = diff(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(i)]);
  return (dot(u, u) * dot(v, v) - dot(u, v) * dot(u, v)) / Rational(4);
}

inline SquaredEdgeVector<Rational> random_edges(std::mt19937_64& rng, int n) {
  std::vector<Rational> e(pair_count(n));
  for (auto& x : e) x = random_rational(rng);
  return {n, e};
}

inline bool all_equal(const SquaredAreaVector<Rational>& s, const Rational& v) {
  for (const auto& x : s.entries())
    if (x != v) return false;
  return true;
}

}  // namespace test_support
