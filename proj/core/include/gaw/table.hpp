#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaw {

// Generic output table with preformatted cells. Numeric cells are written
// with 12 significant digits; the JSON writer emits them as numbers.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

// Spectrum over a detuning grid with the fixed column contract
// (Delta/gamma, Re t, Im t, Re r, Im r, T, R) plus optional per-mode
// reflection channels |L_n|^2.
struct SpectrumTable {
  std::vector<double> delta;
  std::vector<std::complex<double>> t;
  std::vector<std::complex<double>> r;
  std::vector<double> T;
  std::vector<double> R;
  std::vector<std::vector<double>> mode_components;  // row-major, optional
  std::vector<std::string> notes;

  std::size_t size() const { return delta.size(); }
  DataTable to_table() const;
};

// Plain decimal with 12 significant digits ("%.12g").
std::string format_number(double value);

// Full-precision decimal that round-trips exactly ("%.17g").
std::string format_exact(double value);

std::string to_csv(const DataTable& table);
std::string to_json(const DataTable& table);

void write_csv(const DataTable& table, std::ostream& out);
void write_json(const DataTable& table, std::ostream& out);

}  // namespace gaw
