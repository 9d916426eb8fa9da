#pragma once

#include "gaw/model.hpp"
#include "gaw/sweep.hpp"
#include "gaw/table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaw {

enum class LayoutKind { Separate, Braided, Nested, Ssh, Explicit };
enum class OutputKind { Spectrum, Modes, Features };
enum class Format { Csv, Json };

std::string to_string(LayoutKind k);
std::string to_string(OutputKind k);
std::string to_string(Format f);

struct LayoutSpec {
  LayoutKind kind = LayoutKind::Separate;
  int n_atoms = 0;  // 0 = kind default: 2 atoms, or 16 for the ssh chain
  int m_points = 2;
  double theta = pi / 2;
  double gamma = 1.0;
  double phi1 = 0.2 * pi;  // ssh
  double phi2 = 0.3 * pi;  // ssh
  double epsilon = 0.1 * pi;  // ssh
  std::vector<GiantAtom> atoms;  // explicit
  Regime regime = Regime::Markovian;
  double reference_frequency = 1.0;
  double group_velocity = 1.0;

  bool operator==(const LayoutSpec&) const = default;
};

struct ScenarioConfig {
  LayoutSpec layout;
  SweepGrid sweep;
  std::vector<OutputKind> outputs{OutputKind::Spectrum};
  Solver solver = Solver::General;
  Format format = Format::Csv;

  bool operator==(const ScenarioConfig&) const = default;
};

AtomArray build_layout(const LayoutSpec& layout);

// Atom count with the n_atoms = 0 sentinel resolved to the kind default.
int resolved_atom_count(const LayoutSpec& layout);

// Enforces the config invariants (grid validity, solver/layout pairing).
void validate(const ScenarioConfig& config);

// Structured-text round trip: parse(serialize(config)) == config.
ScenarioConfig parse_config(const std::string& text);
std::string serialize_config(const ScenarioConfig& config);

// Plain decimal or a multiple of pi ("0.35pi", "pi", "-pi").
double parse_angle(const std::string& text);

struct ScenarioResult {
  std::optional<SpectrumTable> spectrum;
  std::optional<DataTable> modes;
  std::optional<DataTable> features;
  std::vector<std::string> notices;
};

ScenarioResult run_scenario(const ScenarioConfig& config);

// Collective-mode table (detuning, decay, weights) of a built layout.
DataTable modes_table(const AtomArray& array);

// Feature report; closed forms for separate lattices, characteristics
// and edge-state data otherwise.
DataTable features_table(const ScenarioConfig& config);

}  // namespace gaw
