#include "shinv/sample_table.hpp"

#include <fstream>
#include <sstream>

#include "shinv/errors.hpp"

namespace shinv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::size_t SampleTable::target_index() const {
  std::size_t found = column_names.size();
  for (std::size_t i = 0; i < column_names.size(); ++i) {
    if (column_names[i] != target_column) continue;
    if (found != column_names.size()) {
      throw MissingTargetColumnError("target column '" + target_column +
                                     "' is ambiguous: two columns share the name");
    }
    found = i;
  }
  if (found == column_names.size()) {
    throw MissingTargetColumnError("target column '" + target_column +
                                   "' not found");
  }
  return found;
}

void SampleTable::validate() const {
  if (rows.empty()) throw EmptyTableError("sample table has no rows");
  if (column_names.size() < 2) {
    throw ShapeMismatchError("sample table needs at least one source column "
                             "and one target column");
  }
  target_index();  // throws if missing
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != column_names.size()) {
      throw ShapeMismatchError("row " + std::to_string(r + 1) + " has " +
                               std::to_string(rows[r].size()) +
                               " fields, expected " +
                               std::to_string(column_names.size()));
    }
  }
}

SampleTable read_csv(std::istream& in, const std::string& target) {
  SampleTable table;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw ParseError("empty input, expected a header line", 1);
  }
  ++line_no;
  table.column_names = split_line(line);
  if (table.column_names.size() < 2) {
    throw ParseError("header must name at least two columns", line_no);
  }

  const std::size_t width = table.column_names.size();
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    if (fields.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " fields, got " +
                       std::to_string(fields.size()), line_no);
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.rows.empty()) {
    throw ParseError("no data rows after the header", line_no);
  }

  table.target_column = target.empty() ? table.column_names.back() : target;
  table.validate();
  return table;
}

SampleTable read_csv_file(const std::string& path, const std::string& target) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_csv(in, target);
}

void write_csv(const SampleTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.column_names.size(); ++i) {
    if (i) out << ',';
    out << table.column_names[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

std::string to_csv(const SampleTable& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

}  // namespace shinv
