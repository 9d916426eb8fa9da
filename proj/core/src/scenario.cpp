#include "gaw/scenario.hpp"

#include "gaw/scattering.hpp"
#include "gaw/spectra.hpp"
#include "gaw/ssh.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gaw {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Plain decimal or a multiple of pi ("0.35pi", "pi", "-pi").
double parse_value(const std::string& key, const std::string& text) {
  std::string body = trim(text);
  double scale = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    scale = pi;
    body = trim(body.substr(0, body.size() - 2));
    if (body.empty() || body == "+") body = "1";
    if (body == "-") body = "-1";
  }
  const char* begin = body.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + body.size() || body.empty())
    throw std::invalid_argument("config: bad number for '" + key + "': " + trim(text));
  return scale * value;
}

int parse_int(const std::string& key, const std::string& text) {
  const double value = parse_value(key, text);
  const int rounded = static_cast<int>(std::lround(value));
  if (std::abs(value - rounded) > 1e-9)
    throw std::invalid_argument("config: '" + key + "' must be an integer");
  return rounded;
}

LayoutKind parse_layout_kind(const std::string& text) {
  if (text == "separate") return LayoutKind::Separate;
  if (text == "braided") return LayoutKind::Braided;
  if (text == "nested") return LayoutKind::Nested;
  if (text == "ssh") return LayoutKind::Ssh;
  if (text == "explicit") return LayoutKind::Explicit;
  throw std::invalid_argument("config: unknown layout kind '" + text + "'");
}

Solver parse_solver(const std::string& text) {
  if (text == "general") return Solver::General;
  if (text == "cascade") return Solver::Cascade;
  if (text == "closed") return Solver::Closed;
  if (text == "all") return Solver::All;
  throw std::invalid_argument("config: unknown solver '" + text + "'");
}

OutputKind parse_output_kind(const std::string& text) {
  if (text == "spectrum") return OutputKind::Spectrum;
  if (text == "modes") return OutputKind::Modes;
  if (text == "features") return OutputKind::Features;
  throw std::invalid_argument("config: unknown output kind '" + text + "'");
}

}  // namespace

double parse_angle(const std::string& text) { return parse_value("angle", text); }

std::string to_string(LayoutKind k) {
  switch (k) {
    case LayoutKind::Separate: return "separate";
    case LayoutKind::Braided: return "braided";
    case LayoutKind::Nested: return "nested";
    case LayoutKind::Ssh: return "ssh";
    case LayoutKind::Explicit: return "explicit";
  }
  return "unknown";
}

std::string to_string(OutputKind k) {
  switch (k) {
    case OutputKind::Spectrum: return "spectrum";
    case OutputKind::Modes: return "modes";
    case OutputKind::Features: return "features";
  }
  return "unknown";
}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

int resolved_atom_count(const LayoutSpec& layout) {
  if (layout.n_atoms < 0)
    throw std::invalid_argument("layout: atom count must be >= 0 (0 picks the kind default)");
  if (layout.n_atoms > 0) return layout.n_atoms;
  return layout.kind == LayoutKind::Ssh ? SshSpec{}.n_atoms : 2;
}

AtomArray build_layout(const LayoutSpec& layout) {
  AtomArray array;
  const int n_atoms = resolved_atom_count(layout);
  switch (layout.kind) {
    case LayoutKind::Separate:
      array = build_separate_array(n_atoms, layout.m_points, layout.theta, layout.gamma,
                                   layout.reference_frequency);
      break;
    case LayoutKind::Braided:
      array = build_braided_array(n_atoms, layout.theta, layout.gamma,
                                  layout.reference_frequency);
      break;
    case LayoutKind::Nested:
      array = build_nested_array(n_atoms, layout.theta, layout.gamma,
                                 layout.reference_frequency);
      break;
    case LayoutKind::Ssh: {
      SshSpec spec;
      spec.n_atoms = n_atoms;
      spec.phi1 = layout.phi1;
      spec.phi2 = layout.phi2;
      spec.epsilon = layout.epsilon;
      spec.gamma = layout.gamma;
      spec.omega_a = layout.reference_frequency;
      array = build_ssh_probe_array(spec);
      break;
    }
    case LayoutKind::Explicit:
      array.atoms = layout.atoms;
      array.reference_frequency = layout.reference_frequency;
      break;
  }
  // Generated positions assume unit group velocity; rescale to keep the
  // phase delays at the reference frequency unchanged.
  if (layout.kind != LayoutKind::Explicit && layout.group_velocity != 1.0)
    for (auto& atom : array.atoms)
      for (auto& p : atom.points) p.position *= layout.group_velocity;
  array.group_velocity = layout.group_velocity;
  array.regime = layout.regime;
  validate(array);
  return array;
}

void validate(const ScenarioConfig& config) {
  validate(config.sweep);
  if (config.outputs.empty())
    throw std::invalid_argument("config: at least one output kind is required");

  const bool markovian = config.layout.regime == Regime::Markovian;
  if (config.solver == Solver::Cascade) {
    if (!markovian)
      throw std::invalid_argument("config: cascade solver requires the Markovian regime");
    const Configuration c = classify_configuration(build_layout(config.layout));
    if (c != Configuration::Separate)
      throw std::invalid_argument("config: cascade solver requires a separate configuration, got " +
                                  to_string(c));
  }
  if (config.solver == Solver::Closed) {
    if (!markovian)
      throw std::invalid_argument("config: closed-form solver requires the Markovian regime");
    if (config.layout.kind != LayoutKind::Separate && config.layout.kind != LayoutKind::Explicit)
      throw std::invalid_argument(
          "config: closed-form solver requires the periodic separate lattice");
  }
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig config;
  std::istringstream in(text);
  std::string line;
  std::string section;
  bool saw_outputs = false;

  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;

    if (stripped.front() == '[' && stripped.back() == ']') {
      section = trim(stripped.substr(1, stripped.size() - 2));
      if (section == "atom")
        config.layout.atoms.emplace_back();
      else if (section != "layout" && section != "sweep" && section != "output")
        throw std::invalid_argument("config: unknown section [" + section + "]");
      continue;
    }

    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value, got '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    if (section == "layout") {
      if (key == "kind") config.layout.kind = parse_layout_kind(value);
      else if (key == "atoms") config.layout.n_atoms = parse_int(key, value);
      else if (key == "points") config.layout.m_points = parse_int(key, value);
      else if (key == "theta") config.layout.theta = parse_value(key, value);
      else if (key == "gamma") config.layout.gamma = parse_value(key, value);
      else if (key == "phi1") config.layout.phi1 = parse_value(key, value);
      else if (key == "phi2") config.layout.phi2 = parse_value(key, value);
      else if (key == "epsilon") config.layout.epsilon = parse_value(key, value);
      else if (key == "regime") {
        if (value == "markovian") config.layout.regime = Regime::Markovian;
        else if (value == "non-markovian") config.layout.regime = Regime::NonMarkovian;
        else throw std::invalid_argument("config: unknown regime '" + value + "'");
      }
      else if (key == "reference") config.layout.reference_frequency = parse_value(key, value);
      else if (key == "velocity") config.layout.group_velocity = parse_value(key, value);
      else throw std::invalid_argument("config: unknown layout key '" + key + "'");
    } else if (section == "sweep") {
      if (key == "min") config.sweep.min = parse_value(key, value);
      else if (key == "max") config.sweep.max = parse_value(key, value);
      else if (key == "count") config.sweep.count = parse_int(key, value);
      else throw std::invalid_argument("config: unknown sweep key '" + key + "'");
    } else if (section == "output") {
      if (key == "kinds") {
        config.outputs.clear();
        saw_outputs = true;
        std::istringstream items(value);
        std::string item;
        while (items >> item) {
          if (item.back() == ',') item.pop_back();
          if (!item.empty()) config.outputs.push_back(parse_output_kind(item));
        }
      }
      else if (key == "solver") config.solver = parse_solver(value);
      else if (key == "format") {
        if (value == "csv") config.format = Format::Csv;
        else if (value == "json") config.format = Format::Json;
        else throw std::invalid_argument("config: unknown format '" + value + "'");
      }
      else throw std::invalid_argument("config: unknown output key '" + key + "'");
    } else if (section == "atom") {
      GiantAtom& atom = config.layout.atoms.back();
      if (key == "frequency") atom.frequency = parse_value(key, value);
      else if (key == "point") {
        std::istringstream fields(value);
        std::string position, decay;
        fields >> position >> decay;
        CouplingPoint point;
        point.position = parse_value("point position", position);
        point.bare_decay = decay.empty() ? 1.0 : parse_value("point decay", decay);
        atom.points.push_back(point);
      }
      else throw std::invalid_argument("config: unknown atom key '" + key + "'");
    } else {
      throw std::invalid_argument("config: key '" + key + "' outside any section");
    }
  }
  if (saw_outputs && config.outputs.empty())
    throw std::invalid_argument("config: output kinds list is empty");
  return config;
}

std::string serialize_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "[layout]\n";
  out << "kind = " << to_string(config.layout.kind) << "\n";
  out << "atoms = " << config.layout.n_atoms << "\n";
  out << "points = " << config.layout.m_points << "\n";
  out << "theta = " << format_exact(config.layout.theta) << "\n";
  out << "gamma = " << format_exact(config.layout.gamma) << "\n";
  out << "phi1 = " << format_exact(config.layout.phi1) << "\n";
  out << "phi2 = " << format_exact(config.layout.phi2) << "\n";
  out << "epsilon = " << format_exact(config.layout.epsilon) << "\n";
  out << "regime = " << (config.layout.regime == Regime::Markovian ? "markovian" : "non-markovian")
      << "\n";
  out << "reference = " << format_exact(config.layout.reference_frequency) << "\n";
  out << "velocity = " << format_exact(config.layout.group_velocity) << "\n";
  for (const auto& atom : config.layout.atoms) {
    out << "\n[atom]\n";
    out << "frequency = " << format_exact(atom.frequency) << "\n";
    for (const auto& p : atom.points)
      out << "point = " << format_exact(p.position) << " " << format_exact(p.bare_decay) << "\n";
  }
  out << "\n[sweep]\n";
  out << "min = " << format_exact(config.sweep.min) << "\n";
  out << "max = " << format_exact(config.sweep.max) << "\n";
  out << "count = " << config.sweep.count << "\n";
  out << "\n[output]\n";
  out << "kinds =";
  for (const auto& kind : config.outputs) out << " " << to_string(kind);
  out << "\n";
  out << "solver = " << to_string(config.solver) << "\n";
  out << "format = " << to_string(config.format) << "\n";
  return out.str();
}

DataTable modes_table(const AtomArray& array) {
  const auto modes = collective_modes(array);
  DataTable table;
  table.columns = {"mode", "detuning", "decay", "re_weight_t", "im_weight_t",
                   "re_weight_r", "im_weight_r"};
  int index = 1;
  for (const auto& mode : modes) {
    table.rows.push_back({std::to_string(index++), format_number(mode.energy_detuning),
                          format_number(mode.decay), format_number(mode.weight_t.real()),
                          format_number(mode.weight_t.imag()), format_number(mode.weight_r.real()),
                          format_number(mode.weight_r.imag())});
  }
  table.notes.push_back("biorthonormality residual: " +
                        format_number(biorthonormality_residual(modes)));
  return table;
}

DataTable features_table(const ScenarioConfig& config) {
  const AtomArray array = build_layout(config.layout);
  DataTable table;
  table.columns = {"feature", "value", "detail"};
  const auto add = [&table](const std::string& feature, double value, const std::string& detail) {
    table.rows.push_back({feature, format_number(value), detail});
  };

  add("configuration", static_cast<double>(array.atoms.size()),
      to_string(classify_configuration(array)));

  if (config.layout.kind == LayoutKind::Separate) {
    const auto features = analyze_lattice(resolved_atom_count(config.layout),
                                          config.layout.m_points, config.layout.theta,
                                          config.layout.gamma);
    for (const auto& feature : features) {
      switch (feature.kind) {
        case FeatureKind::Decoupled:
          add("decoupled", feature.center, "atoms decouple from the waveguide; R = 0");
          break;
        case FeatureKind::Superradiant:
          add("superradiant_center", feature.center, "");
          add("superradiant_width", feature.width, "N times the superradiant decay");
          break;
        case FeatureKind::MinimaSet: {
          int index = 1;
          for (double minimum : feature.minima)
            add("minimum", minimum, "index " + std::to_string(index++));
          break;
        }
        case FeatureKind::BandGap:
          add("band_gap_center", feature.center, "");
          add("band_gap_width", feature.width, "distance between the edge minima");
          break;
      }
    }
    return table;
  }

  if (config.layout.kind == LayoutKind::Ssh) {
    const double j1 = config.layout.gamma * std::sin(config.layout.phi1);
    const double j2 = config.layout.gamma * std::sin(config.layout.phi2);
    add("J1", j1, "");
    add("J2", j2, "");
    const SshBands bands = ssh_bands(j1, j2, 0.0);
    add("bandwidth", bands.bandwidth, "");
    add("gap", bands.gap, "");
    SshSpec spec;
    spec.n_atoms = resolved_atom_count(config.layout);
    spec.phi1 = config.layout.phi1;
    spec.phi2 = config.layout.phi2;
    spec.epsilon = config.layout.epsilon;
    spec.gamma = config.layout.gamma;
    spec.omega_a = config.layout.reference_frequency;
    try {
      const EdgeModel model = edge_state_model(spec);
      add("mu", model.mu, "J1/J2");
      add("edge_coupling", model.J, "");
      add("edge_decay", model.Gamma_L, "");
      add("regime_ratio", 4.0 * std::abs(model.J) / model.Gamma_L,
          4.0 * std::abs(model.J) > model.Gamma_L ? "ATS" : "EIT");
      add("shallow_gap", model.shallow_gap ? 1.0 : 0.0,
          model.shallow_gap ? "edge states are not deep in the gap" : "");
    } catch (const std::runtime_error&) {
      add("mu", j1 / j2, "non-topological phase: no edge states");
    }
    return table;
  }

  const Characteristics chars = characteristics(array);
  const int n = static_cast<int>(array.atoms.size());
  for (int i = 0; i < n; ++i)
    add("lamb_shift", chars.lamb_shift(i), "atom " + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    add("effective_decay", chars.effective_decay(i), "atom " + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::string pair = "atoms " + std::to_string(i + 1) + "," + std::to_string(j + 1);
      add("exchange", chars.exchange(i, j), pair);
      add("collective_decay", chars.collective_decay(i, j), pair);
    }
  return table;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  validate(config);
  const AtomArray array = build_layout(config.layout);

  ScenarioResult result;
  for (const auto output : config.outputs) {
    switch (output) {
      case OutputKind::Spectrum: {
        SweepOptions options;
        options.solver = config.solver;
        result.spectrum = sweep_spectrum(array, config.sweep, options);
        for (const auto& note : result.spectrum->notes) result.notices.push_back(note);
        break;
      }
      case OutputKind::Modes:
        result.modes = modes_table(array);
        break;
      case OutputKind::Features:
        result.features = features_table(config);
        break;
    }
  }
  return result;
}

}  // namespace gaw
