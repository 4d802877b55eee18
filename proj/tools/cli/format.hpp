#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace tmsq::cli {

enum class OutputFormat { kCsv, kJson };

/// 12 significant digits, "." separator, independent of the global locale.
/// Scientific notation for 0 < |x| < 1e-4, fixed otherwise; zero (either
/// sign) prints as "0".
std::string format_number(double x);

/// `x` rounded to the precision format_number prints.
double round_to_printed(double x);

/// Column-oriented table with CSV and JSON renderers.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<double>& row(std::size_t i) const { return rows_.at(i); }

  /// Position of `name` in columns(), or columns().size() if absent.
  std::size_t column_index(std::string_view name) const;

  /// Throws std::invalid_argument if the arity does not match.
  void add_row(std::vector<double> values);

  /// Header line then one line per row, LF endings.
  void write_csv(std::ostream& out) const;

  /// Rows as objects keyed by column name, in column order.
  nlohmann::ordered_json rows_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

/// Writes {"spec": spec, "rows": [...]} followed by a newline.
void write_json(std::ostream& out, const nlohmann::ordered_json& spec, const Table& table);

}  // namespace tmsq::cli
