#include "gaw/presets.hpp"

#include "gaw/scattering.hpp"
#include "gaw/spectra.hpp"
#include "gaw/ssh.hpp"
#include "gaw/sweep.hpp"
#include "gaw/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace gaw {

namespace {

SweepGrid make_grid(double min, double max, int count) {
  SweepGrid grid;
  grid.min = min;
  grid.max = max;
  grid.count = count;
  return grid;
}

// theta x delta reflectance map, one row per (theta, delta) pair.
DataTable phase_map(const std::function<AtomArray(double)>& build, const std::string& note) {
  DataTable table;
  table.columns = {"theta", "delta", "R"};
  table.notes.push_back(note);
  const int n_theta = 201;
  const SweepGrid grid = make_grid(-10.0, 10.0, 401);
  for (int k = 0; k < n_theta; ++k) {
    const double theta = 2.0 * pi * k / (n_theta - 1);
    const SpectrumTable spectrum = sweep_spectrum(build(theta), grid);
    for (std::size_t i = 0; i < spectrum.size(); ++i)
      table.rows.push_back({format_number(theta), format_number(spectrum.delta[i]),
                            format_number(spectrum.R[i])});
  }
  return table;
}

// One R column per phase, against a shared detuning grid.
DataTable phase_sections(const std::function<AtomArray(double)>& build,
                         const std::vector<std::pair<std::string, double>>& thetas,
                         const SweepGrid& grid, const std::string& note) {
  DataTable table;
  table.columns = {"delta"};
  table.notes.push_back(note);
  std::vector<SpectrumTable> spectra;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    table.columns.push_back("R" + std::to_string(k + 1));
    table.notes.push_back("R" + std::to_string(k + 1) + ": theta = " + thetas[k].first);
    spectra.push_back(sweep_spectrum(build(thetas[k].second), grid));
    for (const auto& extra : spectra.back().notes) table.notes.push_back(extra);
  }
  const std::vector<double> deltas = grid.points();
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    std::vector<std::string> row{format_number(deltas[i])};
    for (const auto& spectrum : spectra) row.push_back(format_number(spectrum.R[i]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable spectrum_preset(const AtomArray& array, const SweepGrid& grid, bool components,
                          const std::string& note) {
  SweepOptions options;
  options.mode_components = components;
  SpectrumTable spectrum = sweep_spectrum(array, grid, options);
  spectrum.notes.insert(spectrum.notes.begin(), note);
  return spectrum.to_table();
}

// Band-gap panel with the per-row Chebyshev argument y.
DataTable band_gap_panel() {
  const int n = 10;
  const int m = 2;
  const double theta = pi / 4.0;
  const AtomArray array = build_separate_array(n, m, theta, 1.0);
  const auto [lamb_shift, effective_decay] = single_atom_characteristics(array, 0);
  const double phi = m * theta;

  DataTable table;
  table.columns = {"delta", "R", "y"};
  table.notes.push_back("separate lattice, N=10, M=2, theta=pi/4");
  const BandGapWidths widths = band_gap_width(m, 0, 1.0, n);
  table.notes.push_back("band gap width (edge minima): " + format_number(widths.exact_estimate));
  table.notes.push_back("band gap width (N to infinity): " + format_number(widths.asymptotic));

  const SpectrumTable spectrum = sweep_spectrum(array, make_grid(-6.0, 6.0, 2401));
  for (const auto& extra : spectrum.notes) table.notes.push_back(extra);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double xi = effective_decay / (2.0 * (spectrum.delta[i] - lamb_shift));
    const double y = std::cos(phi) + xi * std::sin(phi);
    table.rows.push_back({format_number(spectrum.delta[i]), format_number(spectrum.R[i]),
                          format_number(y)});
  }
  return table;
}

DataTable subradiant_scaling_panel() {
  DataTable table;
  table.columns = {"n_atoms", "min_decay"};
  table.notes.push_back("most subradiant collective decay, separate lattice, M=2, theta=pi/4");
  std::vector<int> sizes;
  for (int n = 8; n <= 24; ++n) sizes.push_back(n);
  const std::vector<double> decays = subradiant_decays(2, pi / 4.0, 1.0, sizes);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    table.rows.push_back({std::to_string(sizes[i]), format_number(decays[i])});
  return table;
}

DataTable gap_scaling_panel() {
  DataTable table;
  table.columns = {"n_atoms", "mode_distance", "band_width"};
  table.notes.push_back(
      "detuning distance of the two most subradiant modes vs the edge-minima width, "
      "separate lattice, M=2, theta=pi/4");
  for (int n = 8; n <= 24; ++n) {
    const AtomArray array = build_separate_array(n, 2, pi / 4.0, 1.0);
    auto modes = collective_modes(array);
    std::sort(modes.begin(), modes.end(),
              [](const CollectiveMode& a, const CollectiveMode& b) { return a.decay < b.decay; });
    const double distance = std::abs(modes[0].energy_detuning - modes[1].energy_detuning);
    const double width = band_gap_width(2, 0, 1.0, n).exact_estimate;
    table.rows.push_back({std::to_string(n), format_number(distance), format_number(width)});
  }
  return table;
}

DataTable coupling_asymmetry_map() {
  DataTable table;
  table.columns = {"phi1", "phi2", "j1_minus_j2"};
  table.notes.push_back("decoherence-free coupling difference J1 - J2 = sin(phi1) - sin(phi2)");
  const int n = 101;
  for (int a = 0; a < n; ++a) {
    const double phi1 = pi * a / (n - 1);
    for (int b = 0; b < n; ++b) {
      const double phi2 = pi * b / (n - 1);
      table.rows.push_back({format_number(phi1), format_number(phi2),
                            format_number(std::sin(phi1) - std::sin(phi2))});
    }
  }
  return table;
}

DataTable chain_spectrum_vs_beta() {
  const int n = 16;
  DataTable table;
  table.columns = {"beta"};
  for (int k = 1; k <= n; ++k) table.columns.push_back("e" + std::to_string(k));
  table.notes.push_back(
      "chain eigenvalues vs beta = phi2 - phi1 at fixed phi1 + phi2 = pi/2, N=16, epsilon=0");
  const int steps = 181;
  for (int s = 0; s < steps; ++s) {
    const double beta = -0.45 * pi + 0.9 * pi * s / (steps - 1);
    SshSpec spec;
    spec.n_atoms = n;
    spec.phi1 = 0.5 * (0.5 * pi - beta);
    spec.phi2 = 0.5 * (0.5 * pi + beta);
    spec.epsilon = 0.0;
    const auto modes = collective_modes(build_ssh_probe_array(spec));
    std::vector<std::string> row{format_number(beta)};
    for (const auto& mode : modes) row.push_back(format_number(mode.energy_detuning));
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable gap_panel(const SshSpec& spec, double min, double max, const std::string& note) {
  const EdgeModel model = edge_state_model(spec);
  const AtomArray array = build_ssh_probe_array(spec);
  const SweepGrid grid = make_grid(min, max, 4801);
  const SpectrumTable spectrum = sweep_spectrum(array, grid);

  DataTable table;
  table.columns = {"delta", "R", "R_approx", "L_plus", "L_minus"};
  table.notes.push_back(note);
  table.notes.push_back("edge coupling J = " + format_number(model.J) +
                        ", edge decay Gamma_L = " + format_number(model.Gamma_L));
  for (const auto& extra : spectrum.notes) table.notes.push_back(extra);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double delta = spectrum.delta[i];
    const GapSpectrum approx = gap_spectrum_approx(model.J, model.Gamma_L, spec.epsilon, delta);
    const double l_plus = std::norm(approx.eta_r_plus / (delta - approx.z_plus));
    const double l_minus = std::norm(approx.eta_r_minus / (delta - approx.z_minus));
    table.rows.push_back({format_number(delta), format_number(spectrum.R[i]),
                          format_number(std::norm(approx.r)), format_number(l_plus),
                          format_number(l_minus)});
  }
  return table;
}

SshSpec ats_spec() {
  SshSpec spec;
  spec.n_atoms = 16;
  spec.phi1 = 0.2 * pi;
  spec.phi2 = 0.3 * pi;
  spec.epsilon = 0.1 * pi;
  return spec;
}

SshSpec eit_spec() {
  SshSpec spec;
  spec.n_atoms = 16;
  spec.phi1 = pi / 6.0;
  spec.phi2 = pi / 3.0;
  spec.epsilon = 0.1 * pi;
  return spec;
}

struct Preset {
  std::string description;
  std::function<DataTable()> build;
};

const std::map<std::string, Preset>& preset_table() {
  static const std::map<std::string, Preset> presets = [] {
    std::map<std::string, Preset> table;
    const auto separate3m2 = [](double theta) { return build_separate_array(3, 2, theta, 1.0); };
    const auto separate3m3 = [](double theta) { return build_separate_array(3, 3, theta, 1.0); };
    const auto braided3 = [](double theta) { return build_braided_array(3, theta, 1.0); };
    const auto braided4 = [](double theta) { return build_braided_array(4, theta, 1.0); };
    const auto nested3 = [](double theta) { return build_nested_array(3, theta, 1.0); };
    const auto nested4 = [](double theta) { return build_nested_array(4, theta, 1.0); };

    table["fig2a"] = {"reflectance map over theta and delta, separate lattice N=3 M=2",
                      [=] { return phase_map(separate3m2, "separate lattice, N=3, M=2"); }};
    table["fig2b"] = {"reflectance map over theta and delta, separate lattice N=3 M=3",
                      [=] { return phase_map(separate3m3, "separate lattice, N=3, M=3"); }};

    table["fig3a"] = {"superradiant sections, separate lattice N=3 M=2", [=] {
      return phase_sections(separate3m2,
                            {{"0", 0.0}, {"pi/2", 0.5 * pi}, {"3pi/2", 1.5 * pi}, {"2pi", 2.0 * pi}},
                            make_grid(-15.0, 15.0, 1201), "separate lattice, N=3, M=2");
    }};
    table["fig3b"] = {"superradiant sections, separate lattice N=3 M=3", [=] {
      return phase_sections(separate3m3,
                            {{"0", 0.0},
                             {"pi/3", pi / 3.0},
                             {"pi", pi},
                             {"5pi/3", 5.0 * pi / 3.0},
                             {"2pi", 2.0 * pi}},
                            make_grid(-15.0, 15.0, 1201), "separate lattice, N=3, M=3");
    }};

    const auto minima_panel = [](double theta, const std::string& label, bool components) {
      AtomArray array = build_separate_array(3, 2, theta, 1.0);
      std::string note = "separate lattice, N=3, M=2, theta=" + label;
      const auto minima = reflection_minima(3, 2, theta, 1.0);
      for (std::size_t i = 0; i < minima.size(); ++i)
        note += "; minimum " + std::to_string(i + 1) + " at " + format_number(minima[i]);
      return spectrum_preset(array, make_grid(-15.0, 15.0, 3001), components, note);
    };
    table["fig4a"] = {"reflection minima spectrum, theta=0.35pi",
                      [=] { return minima_panel(0.35 * pi, "0.35pi", false); }};
    table["fig4b"] = {"reflection minima spectrum, theta=pi/6",
                      [=] { return minima_panel(pi / 6.0, "pi/6", false); }};
    table["fig4c"] = {"reflection minima spectrum, theta=pi/4",
                      [=] { return minima_panel(pi / 4.0, "pi/4", false); }};
    table["fig4d"] = {"per-mode decomposition of fig4a",
                      [=] { return minima_panel(0.35 * pi, "0.35pi", true); }};
    table["fig4e"] = {"per-mode decomposition of fig4b",
                      [=] { return minima_panel(pi / 6.0, "pi/6", true); }};
    table["fig4f"] = {"per-mode decomposition of fig4c",
                      [=] { return minima_panel(pi / 4.0, "pi/4", true); }};

    table["fig5a"] = {"photonic band gap, separate lattice N=10 M=2 theta=pi/4", band_gap_panel};
    table["fig5b"] = {"per-mode decomposition of fig5a", [] {
      return spectrum_preset(build_separate_array(10, 2, pi / 4.0, 1.0),
                             make_grid(-6.0, 6.0, 2401), true,
                             "separate lattice, N=10, M=2, theta=pi/4");
    }};
    table["fig5c"] = {"subradiant decay scaling vs N", subradiant_scaling_panel};
    table["fig5d"] = {"band gap width vs N from subradiant modes", gap_scaling_panel};

    table["fig7c"] = {"coupling difference map over phi1 and phi2", coupling_asymmetry_map};
    table["fig7d"] = {"chain spectrum vs dimerization at phi1+phi2=pi/2", chain_spectrum_vs_beta};

    table["fig8c"] = {"in-gap spectrum, ATS chain, full range", [] {
      return gap_panel(ats_spec(), -2.5, 2.5,
                       "ssh probe chain, N=16, phi1=0.2pi, phi2=0.3pi, epsilon=0.1pi");
    }};
    table["fig8d"] = {"in-gap spectrum, ATS chain, zoom", [] {
      return gap_panel(ats_spec(), -0.12, 0.12,
                       "ssh probe chain, N=16, phi1=0.2pi, phi2=0.3pi, epsilon=0.1pi");
    }};
    table["fig8e"] = {"in-gap spectrum, EIT chain, full range", [] {
      return gap_panel(eit_spec(), -2.5, 2.5,
                       "ssh probe chain, N=16, phi1=pi/6, phi2=pi/3, epsilon=0.1pi");
    }};
    table["fig8f"] = {"in-gap spectrum, EIT chain, zoom", [] {
      return gap_panel(eit_spec(), -0.12, 0.12,
                       "ssh probe chain, N=16, phi1=pi/6, phi2=pi/3, epsilon=0.1pi");
    }};

    table["fig10a"] = {"reflectance map over theta and delta, braided N=3",
                       [=] { return phase_map(braided3, "braided array, N=3"); }};
    table["fig10b"] = {"reflectance map over theta and delta, braided N=4",
                       [=] { return phase_map(braided4, "braided array, N=4"); }};
    const auto braided_section = [](int n, double theta, const std::string& label) {
      return spectrum_preset(build_braided_array(n, theta, 1.0), make_grid(-10.0, 10.0, 2001),
                             false,
                             "braided array, N=" + std::to_string(n) + ", theta=" + label);
    };
    table["fig10c"] = {"braided N=3 section, theta=0",
                       [=] { return braided_section(3, 0.0, "0"); }};
    table["fig10d"] = {"braided N=3 section, theta=pi/4",
                       [=] { return braided_section(3, pi / 4.0, "pi/4"); }};
    table["fig10e"] = {"braided N=3 section, theta=0.35pi",
                       [=] { return braided_section(3, 0.35 * pi, "0.35pi"); }};
    table["fig10f"] = {"braided N=3 section, theta=3pi/4",
                       [=] { return braided_section(3, 0.75 * pi, "3pi/4"); }};
    table["fig10g"] = {"braided N=4 section, theta=0",
                       [=] { return braided_section(4, 0.0, "0"); }};
    table["fig10h"] = {"braided N=4 section, theta=pi/4",
                       [=] { return braided_section(4, pi / 4.0, "pi/4"); }};
    table["fig10i"] = {"braided N=4 section, theta=0.35pi",
                       [=] { return braided_section(4, 0.35 * pi, "0.35pi"); }};
    table["fig10j"] = {"braided N=4 section, theta=3pi/4",
                       [=] { return braided_section(4, 0.75 * pi, "3pi/4"); }};

    table["fig11a"] = {"reflectance map over theta and delta, nested N=3",
                       [=] { return phase_map(nested3, "nested array, N=3"); }};
    table["fig11b"] = {"reflectance map over theta and delta, nested N=4",
                       [=] { return phase_map(nested4, "nested array, N=4"); }};
    const auto nested_section = [](int n, double theta, const std::string& label) {
      return spectrum_preset(build_nested_array(n, theta, 1.0), make_grid(-10.0, 10.0, 2001),
                             false, "nested array, N=" + std::to_string(n) + ", theta=" + label);
    };
    table["fig11c"] = {"nested N=3 section, theta=0",
                       [=] { return nested_section(3, 0.0, "0"); }};
    table["fig11d"] = {"nested N=3 section, theta=pi/4",
                       [=] { return nested_section(3, pi / 4.0, "pi/4"); }};
    table["fig11e"] = {"nested N=3 section, theta=pi/2",
                       [=] { return nested_section(3, pi / 2.0, "pi/2"); }};
    table["fig11f"] = {"nested N=4 section, theta=0",
                       [=] { return nested_section(4, 0.0, "0"); }};
    table["fig11g"] = {"nested N=4 section, theta=pi/4",
                       [=] { return nested_section(4, pi / 4.0, "pi/4"); }};
    table["fig11h"] = {"nested N=4 section, theta=pi/2",
                       [=] { return nested_section(4, pi / 2.0, "pi/2"); }};
    return table;
  }();
  return presets;
}

}  // namespace

std::vector<std::string> preset_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, preset] : preset_table()) ids.push_back(id);
  return ids;
}

std::string preset_description(const std::string& id) {
  const auto& table = preset_table();
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown preset id '" + id + "'");
  return it->second.description;
}

DataTable run_preset(const std::string& id) {
  const auto& table = preset_table();
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown preset id '" + id + "'");
  return it->second.build();
}

}  // namespace gaw
