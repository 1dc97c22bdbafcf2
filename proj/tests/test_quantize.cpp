#include <doctest.h>

#include <cmath>
#include <sstream>

#include "shinv/errors.hpp"
#include "shinv/quantize.hpp"

using namespace shinv;

TEST_CASE("grid spacing follows the (max-min)/(levels-1) rule") {
  const QuantizerConfig cfg(-1.0, 1.0, 8, 1);
  CHECK(cfg.step() == 2.0 / 7.0);  // exact
  CHECK(level_value(cfg, 0) == -1.0);
  CHECK(level_value(cfg, 7) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(QuantizerConfig(1.0, 1.0, 8, 1), OutOfRangeInputError);
  CHECK_THROWS_AS(QuantizerConfig(0.0, 1.0, 1, 1), OutOfRangeInputError);
}

TEST_CASE("values on a grid level stay there for every draw") {
  const QuantizerConfig cfg(-1.0, 1.0, 8, 1);
  for (std::int32_t level = 0; level < 8; ++level) {
    const double v = level_value(cfg, level);
    for (double u : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      CHECK(stochastic_quantize(v, cfg, u) == level);
    }
  }
}

TEST_CASE("draws outside [0,1] are rejected") {
  const QuantizerConfig cfg(-1.0, 1.0, 8, 1);
  CHECK_THROWS_AS(stochastic_quantize(0.0, cfg, -0.1), InvalidDrawError);
  CHECK_THROWS_AS(stochastic_quantize(0.0, cfg, 1.5), InvalidDrawError);
  CHECK_THROWS_AS(stochastic_quantize(0.0, cfg, std::nan("")), InvalidDrawError);
}

TEST_CASE("out-of-range values clamp to the grid ends") {
  const QuantizerConfig cfg(-1.0, 1.0, 8, 1);
  CHECK(stochastic_quantize(-3.5, cfg, 0.3) == 0);
  CHECK(stochastic_quantize(2.0, cfg, 0.9) == 7);
}

TEST_CASE("a midway value goes up for u below one half") {
  const QuantizerConfig cfg(0.0, 7.0, 8, 1);  // step 1, levels at integers
  const double mid = 3.5;
  CHECK(stochastic_quantize(mid, cfg, 0.49) == 4);
  CHECK(stochastic_quantize(mid, cfg, 0.5) == 3);  // tie goes down
  CHECK(stochastic_quantize(mid, cfg, 0.51) == 3);

  // empirical upper-level frequency over seeded draws
  int upper = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const double u = cell_draw(7, 0, static_cast<std::uint64_t>(i));
    upper += stochastic_quantize(mid, cfg, u) == 4;
  }
  const double freq = static_cast<double>(upper) / draws;
  CHECK(std::abs(freq - 0.5) < 0.01);
}

TEST_CASE("quantization is unbiased within Monte Carlo error") {
  const QuantizerConfig cfg(-1.0, 1.0, 8, 1);
  const int draws = 100000;
  for (double v : {-0.83, -0.2857142, 0.0377, 0.5, 0.99}) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
      const double u = cell_draw(42, static_cast<std::uint64_t>(i), 3);
      const double lv = level_value(cfg, stochastic_quantize(v, cfg, u));
      sum += lv;
      sum_sq += lv * lv;
    }
    const double mean = sum / draws;
    const double var = sum_sq / draws - mean * mean;
    const double se = std::sqrt(std::max(var, 0.0) / draws);
    CHECK(std::abs(mean - v) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("cell draws are deterministic and uniform-ish") {
  CHECK(cell_draw(1, 2, 3) == cell_draw(1, 2, 3));
  CHECK(cell_draw(1, 2, 3) != cell_draw(1, 3, 2));
  CHECK(cell_draw(1, 2, 3) != cell_draw(2, 2, 3));
  double mean = 0.0;
  for (int i = 0; i < 10000; ++i) mean += cell_draw(9, i, 0);
  mean /= 10000;
  CHECK(std::abs(mean - 0.5) < 0.02);
}

TEST_CASE("quantize_table produces level-index symbols with target column y") {
  Matrix m;
  m.rows = 3;
  m.cols = 2;
  m.data = {-1.0, 1.0, 1.0, -1.0, -1.0, -1.0};
  const QuantizerConfig cfg(-1.0, 1.0, 2, 5);
  const auto table = quantize_table(m, cfg, {"a", "b", "a"});

  REQUIRE(table.column_names.size() == 3);
  CHECK(table.column_names[0] == "x1");
  CHECK(table.column_names[1] == "x2");
  CHECK(table.column_names[2] == "y");
  CHECK(table.target_column == "y");
  // two levels, endpoint values: exact passthrough to indices 0 and 1
  CHECK(table.rows[0] == std::vector<std::string>{"0", "1", "a"});
  CHECK(table.rows[1] == std::vector<std::string>{"1", "0", "b"});
  CHECK(table.rows[2] == std::vector<std::string>{"0", "0", "a"});
}

TEST_CASE("constant matrices give a single symbol per column") {
  Matrix m;
  m.rows = 20;
  m.cols = 3;
  m.data.assign(60, 0.25);
  const QuantizerConfig cfg(0.0, 1.0, 5, 9);
  const auto table = quantize_table(m, cfg, std::vector<std::string>(20, "t"));
  // 0.25 sits exactly on level 1 of {0, .25, .5, .75, 1}
  for (const auto& row : table.rows) {
    CHECK(row[0] == "1");
    CHECK(row[1] == "1");
    CHECK(row[2] == "1");
  }
}

TEST_CASE("quantize_table is deterministic for a fixed seed") {
  Matrix m;
  m.rows = 50;
  m.cols = 4;
  for (std::size_t i = 0; i < 200; ++i) {
    m.data.push_back(std::sin(static_cast<double>(i) * 0.37));
  }
  const QuantizerConfig cfg(-1.0, 1.0, 8, 123);
  std::vector<std::string> labels(50, "0");
  const auto csv1 = to_csv(quantize_table(m, cfg, labels));
  const auto csv2 = to_csv(quantize_table(m, cfg, labels));
  CHECK(csv1 == csv2);

  const QuantizerConfig other(-1.0, 1.0, 8, 124);
  CHECK(csv1 != to_csv(quantize_table(m, other, labels)));
}

TEST_CASE("quantize_table rejects mismatched shapes") {
  Matrix m;
  m.rows = 2;
  m.cols = 1;
  m.data = {0.0, 0.5};
  const QuantizerConfig cfg(0.0, 1.0, 4, 1);
  CHECK_THROWS_AS(quantize_table(m, cfg, {"only-one"}), ShapeMismatchError);
  Matrix empty;
  CHECK_THROWS_AS(quantize_table(empty, cfg, {}), ShapeMismatchError);
}

TEST_CASE("matrix parsing") {
  std::istringstream good("2 3\n1 2 3\n4 5 6\n");
  const auto m = read_matrix(good);
  CHECK(m.rows == 2);
  CHECK(m.cols == 3);
  CHECK(m.at(1, 2) == 6.0);

  std::istringstream bad_header("x y\n");
  CHECK_THROWS_AS(read_matrix(bad_header), ParseError);

  std::istringstream bad_body("2 2\n1 2\n3 oops\n");
  try {
    read_matrix(bad_body);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream short_body("2 2\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix(short_body), ParseError);
}
