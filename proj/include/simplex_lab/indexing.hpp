#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace simplex_lab {

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;

// Canonical lexicographic orders on vertex pairs and triples of {0..n}.
// Every module indexes edge and face vectors through these functions.

std::size_t binomial(std::size_t n, std::size_t k);

inline std::size_t pair_count(int n) { return binomial(static_cast<std::size_t>(n) + 1, 2); }
inline std::size_t triple_count(int n) { return binomial(static_cast<std::size_t>(n) + 1, 3); }

/// Position of {i, j} (any order, i != j) in the lexicographic pair order.
std::size_t pair_index(int n, int i, int j);
/// Position of {i, j, k} (any order, distinct) in the lexicographic triple order.
std::size_t triple_index(int n, int i, int j, int k);

std::vector<Pair> pairs(int n);
std::vector<Triple> triples(int n);

Pair pair_at(int n, std::size_t index);
Triple triple_at(int n, std::size_t index);

}  // namespace simplex_lab
