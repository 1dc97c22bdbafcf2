#pragma once

#include <cstdint>
#include <random>

#include "shinv/joint_distribution.hpp"

namespace shinv {

// Random dense joint distribution: each variable gets an alphabet size in
// [min_alphabet, max_alphabet], every joint outcome an i.i.d. exponential
// weight, normalized. Draws come straight from the engine words, so the
// ensemble reproduces bit-for-bit across standard libraries.
JointDistribution random_joint(std::mt19937_64& rng, std::size_t n_sources,
                               std::size_t min_alphabet = 2,
                               std::size_t max_alphabet = 4);

}  // namespace shinv
