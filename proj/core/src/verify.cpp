#include "gaw/verify.hpp"

#include "gaw/scattering.hpp"
#include "gaw/sweep.hpp"
#include "gaw/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gaw {

namespace {

AtomArray random_array(std::mt19937& rng, bool separate) {
  std::uniform_int_distribution<int> n_atoms(separate ? 2 : 1, 6);
  std::uniform_int_distribution<int> n_points(1, 4);
  std::uniform_real_distribution<double> gap(0.05, 2.5);
  std::uniform_real_distribution<double> decay(0.2, 2.0);
  std::uniform_real_distribution<double> detuning(-2.0, 2.0);

  AtomArray array;
  const int n = n_atoms(rng);
  double cursor = gap(rng);
  for (int i = 0; i < n; ++i) {
    GiantAtom atom;
    atom.frequency = 1.0 + detuning(rng) * (separate ? 0.5 : 1.0);
    const int m = n_points(rng);
    for (int k = 0; k < m; ++k) {
      if (!separate || k > 0 || i == 0) cursor += gap(rng);
      atom.points.push_back({cursor, decay(rng)});
    }
    if (separate) cursor += gap(rng);  // keep the next atom strictly to the right
    array.atoms.push_back(atom);
  }
  if (!separate) {
    // Shuffle point phases across atoms so overlapping layouts occur.
    std::vector<double> phases;
    for (const auto& atom : array.atoms)
      for (const auto& p : atom.points) phases.push_back(p.position);
    std::shuffle(phases.begin(), phases.end(), rng);
    std::size_t index = 0;
    for (auto& atom : array.atoms) {
      std::vector<double> own(phases.begin() + index, phases.begin() + index + atom.points.size());
      index += atom.points.size();
      std::sort(own.begin(), own.end());
      for (std::size_t k = 0; k < atom.points.size(); ++k) atom.points[k].position = own[k];
    }
  }
  return array;
}

VerifyCheck make_check(const std::string& name, double deviation, double threshold,
                       const std::string& detail) {
  VerifyCheck check;
  check.name = name;
  check.passed = deviation <= threshold;
  check.max_deviation = deviation;
  check.threshold = threshold;
  check.detail = detail;
  return check;
}

VerifyCheck flux_conservation() {
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> delta(-12.0, 12.0);
  double dev = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const AtomArray array = random_array(rng, trial % 3 == 0);
    const SystemMatrices sys = build_system_matrices(array);
    for (int k = 0; k < 20; ++k) {
      const ScatteringResult res = scatter(sys, delta(rng));
      dev = std::max(dev, std::abs(res.T + res.R - 1.0));
    }
  }
  return make_check("flux_conservation", dev, 1e-10, "60 random arrays, 20 detunings each");
}

VerifyCheck cascade_agreement() {
  std::mt19937 rng(23u);
  std::uniform_real_distribution<double> delta(-12.0, 12.0);
  double dev = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const AtomArray array = random_array(rng, true);
    const SystemMatrices sys = build_system_matrices(array);
    for (int k = 0; k < 40; ++k) {
      const double d = delta(rng);
      const ScatteringResult general = scatter(sys, d);
      const auto [t, r] = cascade_scatter(array, d);
      dev = std::max({dev, std::abs(general.t - t), std::abs(general.r - r)});
    }
  }
  return make_check("cascade_agreement", dev, 1e-9,
                    "25 random separate arrays, full t and r amplitudes");
}

VerifyCheck closed_form_agreement() {
  std::mt19937 rng(37u);
  std::uniform_int_distribution<int> n_atoms(2, 8);
  std::uniform_int_distribution<int> m_points(1, 4);
  std::uniform_real_distribution<double> theta(0.05, 2.0 * pi - 0.05);
  std::uniform_real_distribution<double> delta(-12.0, 12.0);
  double dev = 0.0;
  for (int trial = 0; trial < 15; ++trial) {
    const int n = n_atoms(rng);
    const int m = m_points(rng);
    const double th = theta(rng);
    const AtomArray array = build_separate_array(n, m, th, 1.0);
    const SystemMatrices sys = build_system_matrices(array);
    for (int k = 0; k < 30; ++k) {
      const double d = delta(rng);
      const ScatteringResult general = scatter(sys, d);
      const auto [tc, rc] = cascade_scatter(array, d);
      const auto [tf, rf] = closed_form_scatter(n, m, th, 1.0, d);
      dev = std::max({dev, std::abs(general.t - tc), std::abs(general.r - rc),
                      std::abs(general.t - tf), std::abs(general.r - rf)});
    }
  }
  return make_check("closed_form_agreement", dev, 1e-8,
                    "15 random periodic lattices, three solvers pairwise");
}

std::pair<VerifyCheck, VerifyCheck> mode_checks() {
  std::mt19937 rng(53u);
  std::uniform_real_distribution<double> delta(-12.0, 12.0);
  double dev_reconstruct = 0.0;
  double dev_biortho = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const AtomArray array = random_array(rng, trial % 2 == 0);
    const SystemMatrices sys = build_system_matrices(array);
    const auto modes = collective_modes(array);
    dev_biortho = std::max(dev_biortho, biorthonormality_residual(modes));
    for (int k = 0; k < 20; ++k) {
      const double d = delta(rng);
      const ScatteringResult general = scatter(sys, d);
      const auto [t, r] = reconstruct_from_modes(modes, d);
      dev_reconstruct = std::max({dev_reconstruct, std::abs(general.t - t),
                                  std::abs(general.r - r)});
    }
  }
  return {make_check("mode_reconstruction", dev_reconstruct, 1e-9,
                     "20 random arrays, Lorentzian mode sum vs direct solve"),
          make_check("biorthonormality", dev_biortho, 1e-10,
                     "left/right eigenvector overlaps vs identity")};
}

VerifyCheck spectral_symmetry() {
  std::mt19937 rng(71u);
  std::uniform_int_distribution<int> n_atoms(2, 6);
  std::uniform_int_distribution<int> m_points(1, 4);
  std::uniform_real_distribution<double> theta(0.05, 2.0 * pi - 0.05);
  std::uniform_real_distribution<double> delta(-12.0, 12.0);
  double dev = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = n_atoms(rng);
    const int m = m_points(rng);
    const double th = theta(rng);
    const AtomArray plus = build_separate_array(n, m, th, 1.0);
    const AtomArray minus = build_separate_array(n, m, 2.0 * pi - th, 1.0);
    for (int k = 0; k < 20; ++k) {
      const double d = delta(rng);
      dev = std::max(dev, std::abs(scatter(plus, d).R - scatter(minus, -d).R));
    }
  }
  return make_check("spectral_symmetry", dev, 1e-10,
                    "R(delta, theta) vs R(-delta, 2pi - theta) on random lattices");
}

VerifyCheck chebyshev_identities() {
  std::mt19937 rng(89u);
  std::uniform_real_distribution<double> ys(-3.0, 3.0);
  std::uniform_real_distribution<double> xis(-2.0, 2.0);
  std::uniform_real_distribution<double> phis(0.1, 2.0 * pi - 0.1);
  double dev = 0.0;

  // Closed forms against the three-term recurrence.
  for (int trial = 0; trial < 50; ++trial) {
    const double y = ys(rng);
    double prev = 1.0;
    double cur = 2.0 * y;
    for (int n = 0; n <= 64; ++n) {
      const double direct = chebyshev_u(n, y);
      const double reference = n == 0 ? 1.0 : (n == 1 ? cur : 0.0);
      if (n >= 2) {
        const double next = 2.0 * y * cur - prev;
        prev = cur;
        cur = next;
      }
      const double expected = n <= 1 ? reference : cur;
      const double scale = std::max(1.0, std::abs(expected));
      dev = std::max(dev, std::abs(direct - expected) / scale);
    }
  }

  // Unit-cell power identity.
  for (int trial = 0; trial < 25; ++trial) {
    const PeriodicCell cell = periodic_cell(xis(rng), phis(rng));
    for (const int n : {2, 5, 9}) {
      Eigen::Matrix2cd power = Eigen::Matrix2cd::Identity();
      for (int k = 0; k < n; ++k) power = power * cell.cell;
      const Eigen::Matrix2cd predicted = chebyshev_u(n - 1, cell.y) * cell.cell -
                                         chebyshev_u(n - 2, cell.y) * Eigen::Matrix2cd::Identity();
      const double scale = std::max(1.0, power.cwiseAbs().maxCoeff());
      dev = std::max(dev, (power - predicted).cwiseAbs().maxCoeff() / scale);
    }
  }
  return make_check("chebyshev_identities", dev, 1e-9,
                    "recurrence vs closed forms and the unit-cell power identity");
}

VerifyCheck config_round_trip() {
  std::vector<ScenarioConfig> configs;
  {
    ScenarioConfig config;
    configs.push_back(config);
  }
  {
    ScenarioConfig config;
    config.layout.kind = LayoutKind::Braided;
    config.layout.n_atoms = 4;
    config.layout.theta = 0.35 * pi;
    config.sweep = {-5.0, 5.0, 501};
    config.outputs = {OutputKind::Spectrum, OutputKind::Modes, OutputKind::Features};
    config.format = Format::Json;
    configs.push_back(config);
  }
  {
    ScenarioConfig config;
    config.layout.kind = LayoutKind::Ssh;
    config.layout.n_atoms = 16;
    config.layout.epsilon = 0.1 * pi;
    config.solver = Solver::General;
    configs.push_back(config);
  }
  {
    ScenarioConfig config;
    config.layout.kind = LayoutKind::Explicit;
    config.layout.atoms = {{0.97, {{0.3, 1.1}, {2.77, 0.4}}}, {1.02, {{1.9, 0.8}}}};
    config.layout.regime = Regime::NonMarkovian;
    config.layout.reference_frequency = 2.0;
    config.layout.group_velocity = 1.5;
    configs.push_back(config);
  }
  {
    ScenarioConfig config;
    config.layout.kind = LayoutKind::Separate;
    config.layout.theta = pi / 3.0;
    config.solver = Solver::All;
    configs.push_back(config);
  }

  int failures = 0;
  for (const auto& config : configs)
    if (parse_config(serialize_config(config)) != config) ++failures;
  return make_check("config_round_trip", static_cast<double>(failures), 0.0,
                    std::to_string(configs.size()) + " configs serialized and reparsed");
}

VerifyCheck scenario_flux(const ScenarioConfig& config) {
  const AtomArray array = build_layout(config.layout);
  SweepOptions options;
  options.solver = config.solver;
  const SpectrumTable spectrum = sweep_spectrum(array, config.sweep, options);
  double dev = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    dev = std::max(dev, std::abs(spectrum.T[i] + spectrum.R[i] - 1.0));
  std::ostringstream detail;
  detail << "scenario grid " << format_number(config.sweep.min) << ".."
         << format_number(config.sweep.max) << " with " << config.sweep.count << " points";
  return make_check("scenario_flux", dev, 1e-10, detail.str());
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

VerifyReport run_verify() {
  VerifyReport report;
  report.checks.push_back(flux_conservation());
  report.checks.push_back(cascade_agreement());
  report.checks.push_back(closed_form_agreement());
  const auto [reconstruction, biortho] = mode_checks();
  report.checks.push_back(reconstruction);
  report.checks.push_back(biortho);
  report.checks.push_back(spectral_symmetry());
  report.checks.push_back(chebyshev_identities());
  report.checks.push_back(config_round_trip());
  return report;
}

VerifyReport run_verify(const ScenarioConfig& config) {
  validate(config);
  VerifyReport report = run_verify();
  report.checks.push_back(scenario_flux(config));
  return report;
}

DataTable to_table(const VerifyReport& report) {
  DataTable table;
  table.columns = {"check", "status", "max_deviation", "threshold", "detail"};
  for (const auto& check : report.checks)
    table.rows.push_back({check.name, check.passed ? "pass" : "fail",
                          format_number(check.max_deviation), format_number(check.threshold),
                          check.detail});
  return table;
}

}  // namespace gaw
