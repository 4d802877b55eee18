#include "cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tmsq::cli {

namespace {

constexpr int kSignificantDigits = 12;

std::string to_chars_string(double x, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt, precision);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  const std::string sci = to_chars_string(x, std::chars_format::scientific, kSignificantDigits - 1);
  if (std::abs(x) < 1e-4) return sci;
  // exponent after rounding, so 9.99999999999951 -> 10.0000000000 keeps 12 digits
  const int exponent = std::stoi(sci.substr(sci.find('e') + 1));
  const int decimals = std::max(0, kSignificantDigits - 1 - exponent);
  std::string fixed = to_chars_string(x, std::chars_format::fixed, decimals);
  if (fixed.find_first_not_of("-0.") == std::string::npos) return "0";
  return fixed;
}

double round_to_printed(double x) {
  const std::string s = format_number(x);
  double value = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), value);
  return value;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == name) return i;
  return columns_.size();
}

void Table::add_row(std::vector<double> values) {
  if (values.size() != columns_.size()) throw std::invalid_argument("row arity mismatch");
  rows_.push_back(std::move(values));
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

nlohmann::ordered_json Table::rows_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = round_to_printed(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

void write_json(std::ostream& out, const nlohmann::ordered_json& spec, const Table& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["spec"] = spec;
  doc["rows"] = table.rows_json();
  out << doc.dump(2) << '\n';
}

}  // namespace tmsq::cli
