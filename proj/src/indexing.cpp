#include "simplex_lab/indexing.hpp"

#include "simplex_lab/errors.hpp"

#include <algorithm>
#include <string>

namespace simplex_lab {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v > n)
    throw PreconditionError("vertex " + std::to_string(v) + " outside {0.." + std::to_string(n) + "}");
}

}  // namespace

std::size_t pair_index(int n, int i, int j) {
  check_vertex(n, i);
  check_vertex(n, j);
  if (i == j) throw PreconditionError("pair_index: repeated vertex");
  if (i > j) std::swap(i, j);
  // pairs starting below i: sum_{a<i} (n - a)
  const auto ui = static_cast<std::size_t>(i);
  const auto un = static_cast<std::size_t>(n);
  return ui * un - ui * (ui - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::size_t triple_index(int n, int i, int j, int k) {
  std::array<int, 3> v{i, j, k};
  for (int x : v) check_vertex(n, x);
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw PreconditionError("triple_index: repeated vertex");
  const auto m = static_cast<std::size_t>(n) + 1;  // number of vertices
  std::size_t idx = 0;
  for (int a = 0; a < v[0]; ++a) idx += binomial(m - 1 - static_cast<std::size_t>(a), 2);
  for (int b = v[0] + 1; b < v[1]; ++b) idx += m - 1 - static_cast<std::size_t>(b);
  return idx + static_cast<std::size_t>(v[2] - v[1] - 1);
}

std::vector<Pair> pairs(int n) {
  std::vector<Pair> out;
  out.reserve(pair_count(n));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Triple> triples(int n) {
  std::vector<Triple> out;
  out.reserve(triple_count(n));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
  return out;
}

Pair pair_at(int n, std::size_t index) {
  if (index >= pair_count(n)) throw PreconditionError("pair_at: index out of range");
  for (int i = 0; i <= n; ++i) {
    const auto row = static_cast<std::size_t>(n - i);
    if (index < row) return {i, i + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw PreconditionError("pair_at: unreachable");
}

Triple triple_at(int n, std::size_t index) {
  if (index >= triple_count(n)) throw PreconditionError("triple_at: index out of range");
  return triples(n)[index];
}

}  // namespace simplex_lab
