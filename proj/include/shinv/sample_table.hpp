#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace shinv {

// Rows of discrete symbols: n source columns plus one target column. Symbols
// are compared as exact strings. This is the empirical population every
// distribution is built from.
struct SampleTable {
  std::vector<std::string> column_names;
  std::vector<std::vector<std::string>> rows;
  std::string target_column;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_columns() const { return column_names.size(); }

  // Index of the target column in column_names.
  std::size_t target_index() const;

  // Throws EmptyTableError / MissingTargetColumnError / ShapeMismatchError
  // when the table invariants do not hold.
  void validate() const;
};

// CSV format: first line is the header, ',' delimiter, no quoting. An empty
// target name selects the last column.
SampleTable read_csv(std::istream& in, const std::string& target = "");
SampleTable read_csv_file(const std::string& path, const std::string& target = "");

void write_csv(const SampleTable& table, std::ostream& out);
std::string to_csv(const SampleTable& table);

}  // namespace shinv
