#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shinv/sample_table.hpp"

namespace shinv {

// Uniform grid of n_levels values spanning [sigma_min, sigma_max], plus the
// seed of the per-cell draw stream.
struct QuantizerConfig {
  QuantizerConfig(double sigma_min, double sigma_max, std::int32_t n_levels,
                  std::uint64_t seed);

  double sigma_min;
  double sigma_max;
  std::int32_t n_levels;
  std::uint64_t seed;

  // Grid spacing (sigma_max - sigma_min) / (n_levels - 1); strictly positive.
  double step() const {
    return (sigma_max - sigma_min) / static_cast<double>(n_levels - 1);
  }
};

// Rounds value to one of the two nearest grid levels: up when u < frac,
// down when u >= frac, where frac is the position between the levels.
// The expectation of level_value(cfg, result) over uniform u equals the
// clamped input. Values outside the grid range are clamped first. Throws
// InvalidDrawError unless u lies in [0, 1]. Returns the level index.
std::int32_t stochastic_quantize(double value, const QuantizerConfig& cfg,
                                 double u);

inline double level_value(const QuantizerConfig& cfg, std::int32_t level) {
  return cfg.step() * static_cast<double>(level) + cfg.sigma_min;
}

// Deterministic counter-based draw in [0, 1) for a matrix cell; independent
// of evaluation order, so cells can be quantized in parallel or re-run.
double cell_draw(std::uint64_t seed, std::uint64_t row, std::uint64_t col);

// Dense activation matrix, row-major.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Format: one header line "rows cols", then whitespace-separated row-major
// doubles.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

// Quantizes every cell with its own counter-based draw and assembles a
// sample table with source columns x1..xm (level indices as symbols) and
// target column y. Throws ShapeMismatchError when the label count does not
// match the row count.
SampleTable quantize_table(const Matrix& matrix, const QuantizerConfig& cfg,
                           const std::vector<std::string>& target_values);

}  // namespace shinv
