#include "shinv/random_ensemble.hpp"

#include <cmath>

#include "shinv/errors.hpp"
#include "shinv/kernels.hpp"

namespace shinv {

namespace {

double unit_open(std::mt19937_64& rng) {
  // (0, 1): the zero word maps to 2^-53 so -log stays finite.
  const std::uint64_t w = rng() >> 11;
  return (static_cast<double>(w) + 0.5) * 0x1.0p-53;
}

}  // namespace

JointDistribution random_joint(std::mt19937_64& rng, std::size_t n_sources,
                               std::size_t min_alphabet,
                               std::size_t max_alphabet) {
  if (n_sources == 0) throw OutOfRangeInputError("need at least one source");
  if (min_alphabet < 2 || max_alphabet < min_alphabet) {
    throw OutOfRangeInputError("alphabet bounds must satisfy 2 <= min <= max");
  }

  const std::size_t n_vars = n_sources + 1;
  std::vector<std::size_t> sizes(n_vars);
  const std::size_t span = max_alphabet - min_alphabet + 1;
  std::size_t n_outcomes = 1;
  for (std::size_t v = 0; v < n_vars; ++v) {
    sizes[v] = min_alphabet + static_cast<std::size_t>(rng() % span);
    n_outcomes *= sizes[v];
  }

  std::vector<double> weights(n_outcomes);
  for (double& w : weights) w = -std::log(unit_open(rng));
  const double total = kernels::compensated_sum(weights);

  std::vector<std::pair<std::vector<std::uint32_t>, double>> entries;
  entries.reserve(n_outcomes);
  std::vector<std::uint32_t> ids(n_vars, 0);
  for (std::size_t i = 0; i < n_outcomes; ++i) {
    entries.emplace_back(ids, weights[i] / total);
    for (std::size_t v = n_vars; v-- > 0;) {
      if (++ids[v] < sizes[v]) break;
      ids[v] = 0;
    }
  }
  return JointDistribution::from_pmf(n_sources, sizes, std::move(entries));
}

}  // namespace shinv
