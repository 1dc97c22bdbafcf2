#include "shinv/quantize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "shinv/errors.hpp"
#include "shinv/kernels.hpp"

namespace shinv {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  // splitmix64 finalizer
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kStreamSalt = 0x517cc1b727220a95ull;

}  // namespace

QuantizerConfig::QuantizerConfig(double sigma_min_in, double sigma_max_in,
                                 std::int32_t n_levels_in, std::uint64_t seed_in)
    : sigma_min(sigma_min_in),
      sigma_max(sigma_max_in),
      n_levels(n_levels_in),
      seed(seed_in) {
  if (!(sigma_max > sigma_min)) {
    throw OutOfRangeInputError("sigma_max must exceed sigma_min");
  }
  if (n_levels < 2) throw OutOfRangeInputError("need at least 2 levels");
  if (!(step() > 0.0)) throw OutOfRangeInputError("level spacing is not positive");
}

std::int32_t stochastic_quantize(double value, const QuantizerConfig& cfg,
                                 double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw InvalidDrawError("draw must lie in [0, 1]");
  }
  std::int32_t level = 0;
  kernels::quantize_levels_scalar({&value, 1}, {&u, 1}, cfg.sigma_min,
                                  cfg.step(), cfg.n_levels, {&level, 1});
  return level;
}

double cell_draw(std::uint64_t seed, std::uint64_t row, std::uint64_t col) {
  std::uint64_t h = mix64(seed ^ kStreamSalt);
  h = mix64(h ^ row);
  h = mix64(h ^ col);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

Matrix read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw ParseError("empty input, expected 'rows cols' header", 1);
  }
  Matrix m;
  {
    std::istringstream hs(header);
    long long rows = 0;
    long long cols = 0;
    if (!(hs >> rows >> cols) || rows <= 0 || cols <= 0) {
      throw ParseError("header must be 'rows cols' with positive counts", 1);
    }
    m.rows = static_cast<std::size_t>(rows);
    m.cols = static_cast<std::size_t>(cols);
  }
  m.data.reserve(m.rows * m.cols);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double v = 0.0;
    while (ls >> v) m.data.push_back(v);
    if (!ls.eof()) {
      throw ParseError("malformed number in matrix body", line_no);
    }
  }
  if (m.data.size() != m.rows * m.cols) {
    throw ParseError("matrix body has " + std::to_string(m.data.size()) +
                         " values, header promised " +
                         std::to_string(m.rows * m.cols),
                     line_no);
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_matrix(in);
}

SampleTable quantize_table(const Matrix& matrix, const QuantizerConfig& cfg,
                           const std::vector<std::string>& target_values) {
  if (matrix.rows == 0 || matrix.cols == 0 ||
      matrix.data.size() != matrix.rows * matrix.cols) {
    throw ShapeMismatchError("matrix is empty or inconsistent with its shape");
  }
  if (target_values.size() != matrix.rows) {
    throw ShapeMismatchError("have " + std::to_string(target_values.size()) +
                             " target values for " +
                             std::to_string(matrix.rows) + " rows");
  }

  std::vector<double> draws(matrix.data.size());
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      draws[r * matrix.cols + c] = cell_draw(cfg.seed, r, c);
    }
  }

  std::vector<std::int32_t> levels(matrix.data.size());
  kernels::quantize_levels(matrix.data, draws, cfg.sigma_min, cfg.step(),
                           cfg.n_levels, levels);

  SampleTable table;
  table.column_names.reserve(matrix.cols + 1);
  for (std::size_t c = 0; c < matrix.cols; ++c) {
    table.column_names.push_back("x" + std::to_string(c + 1));
  }
  table.column_names.push_back("y");
  table.target_column = "y";

  table.rows.reserve(matrix.rows);
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    std::vector<std::string> row;
    row.reserve(matrix.cols + 1);
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      row.push_back(std::to_string(levels[r * matrix.cols + c]));
    }
    row.push_back(target_values[r]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace shinv
