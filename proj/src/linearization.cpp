#include "simplex_lab/linearization.hpp"

#include "simplex_lab/parallel.hpp"

#include <algorithm>
#include <random>

namespace simplex_lab {

std::vector<RankCheck> catalog_jacobian_ranks(int n) {
  const auto catalog = build_catalog(n);
  std::vector<RankCheck> out(catalog.size());
  parallel_for(catalog.size(), [&](std::size_t k) {
    const auto& p = catalog[k];
    std::size_t rank = 0;
    if (const auto* r = std::get_if<RationalEdges>(&p.coordinates))
      rank = rank_exact(jacobian(*r));
    else
      rank = rank_exact(jacobian(std::get<QuadExtEdges>(p.coordinates)));
    out[k] = {p.name(), rank, pair_count(n)};
  });
  return out;
}

ImageSweep sweep_pairing_images(int n, const std::vector<PairingLabel>& points) {
  ImageSweep sweep;
  sweep.n = n;
  std::vector<Matrix<Rational>> jacobians;
  jacobians.reserve(points.size());
  for (const auto& p : points) {
    sweep.labels.push_back(label_string(p));
    jacobians.push_back(jacobian(pairing_point(p.pairing, p.sigma)));
  }
  const std::size_t m = points.size();
  for (std::size_t a = 0; a < m; ++a)
    if (rank_exact(jacobians[a]) != jacobians[a].cols())
      throw PreconditionError("sweep_pairing_images: Jacobian at " + sweep.labels[a] + " is not of full column rank");
  sweep.equal.assign(m, std::vector<bool>(m, false));
  std::vector<std::vector<char>> upper(m);
  parallel_for(m, [&](std::size_t a) {
    upper[a].assign(m, 0);
    for (std::size_t b = a; b < m; ++b) upper[a][b] = detail::same_image_full_rank(jacobians[a], jacobians[b]) ? 1 : 0;
  });
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const bool eq = upper[a][b] != 0;
      sweep.equal[a][b] = sweep.equal[b][a] = eq;
      if (eq != (points[a].pairing == points[b].pairing)) sweep.mismatches.emplace_back(a, b);
    }
  return sweep;
}

ImageSweep sweep_pairing_images(int n) {
  if (n < 5) throw PreconditionError("sweep_pairing_images: need n >= 5");
  std::vector<PairingLabel> points;
  for (const auto& omega : enumerate_partial_pairings(n))
    for (int sigma : {1, -1}) points.push_back({omega, sigma});
  return sweep_pairing_images(n, points);
}

std::vector<PairingLabel> sample_pairing_labels(int n, std::size_t pairings, std::uint64_t seed) {
  auto all = enumerate_partial_pairings(n);
  if (pairings > all.size()) throw PreconditionError("sample_pairing_labels: more pairings requested than exist");
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<PairingLabel> out;
  for (std::size_t k = 0; k < pairings; ++k)
    for (int sigma : {1, -1}) out.push_back({all[k], sigma});
  return out;
}

}  // namespace simplex_lab
