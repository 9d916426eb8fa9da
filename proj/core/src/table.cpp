#include "gaw/table.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace gaw {

namespace {

std::string printf_double(const char* fmt, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, fmt, value);
  return buffer;
}

bool parse_double(const std::string& cell, double& value) {
  if (cell.empty()) return false;
  const char* begin = cell.c_str();
  char* end = nullptr;
  value = std::strtod(begin, &end);
  if (end != begin + cell.size()) return false;
  return std::isfinite(value);
}

}  // namespace

std::string format_number(double value) { return printf_double("%.12g", value); }

std::string format_exact(double value) { return printf_double("%.17g", value); }

DataTable SpectrumTable::to_table() const {
  DataTable table;
  table.columns = {"delta", "re_t", "im_t", "re_r", "im_r", "T", "R"};
  const std::size_t n_modes = mode_components.empty() ? 0 : mode_components.front().size();
  for (std::size_t k = 0; k < n_modes; ++k)
    table.columns.push_back("L" + std::to_string(k + 1));

  table.rows.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::vector<std::string> row{
        format_number(delta[i]),    format_number(t[i].real()), format_number(t[i].imag()),
        format_number(r[i].real()), format_number(r[i].imag()), format_number(T[i]),
        format_number(R[i])};
    for (std::size_t k = 0; k < n_modes; ++k)
      row.push_back(format_number(mode_components[i][k]));
    table.rows.push_back(std::move(row));
  }
  table.notes = notes;
  return table;
}

std::string to_csv(const DataTable& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

std::string to_json(const DataTable& table) {
  std::ostringstream out;
  write_json(table, out);
  return out.str();
}

void write_csv(const DataTable& table, std::ostream& out) {
  for (const auto& note : table.notes) out << "# " << note << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ",";
    out << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      out << row[c];
    }
    out << "\n";
  }
}

void write_json(const DataTable& table, std::ostream& out) {
  nlohmann::json doc;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row) {
      double value = 0.0;
      if (parse_double(cell, value))
        cells.push_back(value);
      else
        cells.push_back(cell);
    }
    doc["rows"].push_back(std::move(cells));
  }
  doc["notes"] = table.notes;
  out << doc.dump(2) << "\n";
}

}  // namespace gaw
