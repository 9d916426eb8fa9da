#include "gaw/presets.hpp"
#include "gaw/scenario.hpp"
#include "gaw/ssh.hpp"
#include "gaw/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_table(const gaw::DataTable& table, const std::string& out, gaw::Format format) {
  const auto emit = [&](std::ostream& stream) {
    if (format == gaw::Format::Csv)
      gaw::write_csv(table, stream);
    else
      gaw::write_json(table, stream);
  };
  if (out.empty() || out == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream stream(out);
  if (!stream) throw std::runtime_error("cannot open output file: " + out);
  emit(stream);
}

gaw::Format parse_format(const std::string& text) {
  return text == "json" ? gaw::Format::Json : gaw::Format::Csv;
}

// Option bundle shared by the spectrum-producing subcommands.
struct Args {
  std::string out;
  std::string format = "csv";
  std::string grid;
  std::string solver;
  std::string config_path;

  std::string layout;
  int atoms = 0;
  int points = 0;
  std::string theta;
  std::string gamma;
  std::string phi1;
  std::string phi2;
  std::string epsilon;
  std::string regime;
  std::string reference;
  std::string velocity;

  CLI::Option* opt_grid = nullptr;
  CLI::Option* opt_solver = nullptr;
  CLI::Option* opt_layout = nullptr;
  CLI::Option* opt_atoms = nullptr;
  CLI::Option* opt_points = nullptr;
  CLI::Option* opt_theta = nullptr;
  CLI::Option* opt_gamma = nullptr;
  CLI::Option* opt_phi1 = nullptr;
  CLI::Option* opt_phi2 = nullptr;
  CLI::Option* opt_epsilon = nullptr;
  CLI::Option* opt_regime = nullptr;
  CLI::Option* opt_reference = nullptr;
  CLI::Option* opt_velocity = nullptr;
};

void add_output_options(CLI::App* cmd, Args& args) {
  cmd->add_option("--out", args.out, "output file; '-' or absent writes to stdout");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_sweep_options(CLI::App* cmd, Args& args) {
  args.opt_grid =
      cmd->add_option("--grid", args.grid, "detuning grid min:max:count (pi suffixes allowed)");
  args.opt_solver = cmd->add_option("--solver", args.solver, "spectrum solver")
                        ->check(CLI::IsMember({"general", "cascade", "closed", "all"}));
}

void add_layout_options(CLI::App* cmd, Args& args, bool with_kind) {
  cmd->add_option("--config", args.config_path, "scenario config file (ini)");
  if (with_kind) {
    args.opt_layout = cmd->add_option("--layout", args.layout, "generated layout kind")
                          ->check(CLI::IsMember({"separate", "braided", "nested", "ssh",
                                                 "explicit"}));
    args.opt_points = cmd->add_option("--points", args.points, "coupling points per atom");
    args.opt_theta = cmd->add_option("--theta", args.theta, "neighboring-point phase spacing");
  }
  args.opt_atoms = cmd->add_option("--atoms", args.atoms, "number of atoms");
  args.opt_gamma = cmd->add_option("--gamma", args.gamma, "bare decay per coupling point");
  args.opt_phi1 = cmd->add_option("--phi1", args.phi1, "ssh: first hopping phase");
  args.opt_phi2 = cmd->add_option("--phi2", args.phi2, "ssh: second hopping phase");
  args.opt_epsilon = cmd->add_option("--epsilon", args.epsilon, "ssh: probe coupling phase");
  args.opt_regime = cmd->add_option("--regime", args.regime, "markovian or non-markovian")
                        ->check(CLI::IsMember({"markovian", "non-markovian"}));
  args.opt_reference = cmd->add_option("--reference", args.reference, "reference frequency");
  args.opt_velocity = cmd->add_option("--velocity", args.velocity, "group velocity");
}

gaw::SweepGrid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::runtime_error("bad --grid, expected min:max:count");
  gaw::SweepGrid grid;
  grid.min = gaw::parse_angle(text.substr(0, first));
  grid.max = gaw::parse_angle(text.substr(first + 1, second - first - 1));
  grid.count = std::stoi(text.substr(second + 1));
  return grid;
}

gaw::Solver parse_solver(const std::string& text) {
  if (text == "cascade") return gaw::Solver::Cascade;
  if (text == "closed") return gaw::Solver::Closed;
  if (text == "all") return gaw::Solver::All;
  return gaw::Solver::General;
}

gaw::ScenarioConfig make_config(const Args& args) {
  gaw::ScenarioConfig config;
  if (!args.config_path.empty()) config = gaw::parse_config(read_file(args.config_path));

  const auto passed = [](const CLI::Option* opt) { return opt && opt->count() > 0; };
  if (passed(args.opt_layout)) {
    if (args.layout == "separate") config.layout.kind = gaw::LayoutKind::Separate;
    else if (args.layout == "braided") config.layout.kind = gaw::LayoutKind::Braided;
    else if (args.layout == "nested") config.layout.kind = gaw::LayoutKind::Nested;
    else if (args.layout == "ssh") config.layout.kind = gaw::LayoutKind::Ssh;
    else config.layout.kind = gaw::LayoutKind::Explicit;
  }
  if (passed(args.opt_atoms)) config.layout.n_atoms = args.atoms;
  if (passed(args.opt_points)) config.layout.m_points = args.points;
  if (passed(args.opt_theta)) config.layout.theta = gaw::parse_angle(args.theta);
  if (passed(args.opt_gamma)) config.layout.gamma = gaw::parse_angle(args.gamma);
  if (passed(args.opt_phi1)) config.layout.phi1 = gaw::parse_angle(args.phi1);
  if (passed(args.opt_phi2)) config.layout.phi2 = gaw::parse_angle(args.phi2);
  if (passed(args.opt_epsilon)) config.layout.epsilon = gaw::parse_angle(args.epsilon);
  if (passed(args.opt_regime))
    config.layout.regime =
        args.regime == "non-markovian" ? gaw::Regime::NonMarkovian : gaw::Regime::Markovian;
  if (passed(args.opt_reference))
    config.layout.reference_frequency = gaw::parse_angle(args.reference);
  if (passed(args.opt_velocity)) config.layout.group_velocity = gaw::parse_angle(args.velocity);
  if (passed(args.opt_grid)) config.sweep = parse_grid(args.grid);
  if (passed(args.opt_solver)) config.solver = parse_solver(args.solver);
  config.format = parse_format(args.format);
  return config;
}

int run_single_output(const Args& args, gaw::OutputKind kind) {
  gaw::ScenarioConfig config = make_config(args);
  config.outputs = {kind};
  const gaw::ScenarioResult result = gaw::run_scenario(config);
  const gaw::DataTable table = kind == gaw::OutputKind::Spectrum ? result.spectrum->to_table()
                               : kind == gaw::OutputKind::Modes  ? *result.modes
                                                                 : *result.features;
  write_table(table, args.out, config.format);
  return 0;
}

int run_ssh(const Args& args) {
  gaw::ScenarioConfig config = make_config(args);
  config.layout.kind = gaw::LayoutKind::Ssh;
  config.outputs = {gaw::OutputKind::Spectrum};
  const gaw::ScenarioResult result = gaw::run_scenario(config);

  gaw::SpectrumTable spectrum = *result.spectrum;
  gaw::SshSpec spec;
  spec.n_atoms = gaw::resolved_atom_count(config.layout);
  spec.phi1 = config.layout.phi1;
  spec.phi2 = config.layout.phi2;
  spec.epsilon = config.layout.epsilon;
  spec.gamma = config.layout.gamma;
  spec.omega_a = config.layout.reference_frequency;
  try {
    const gaw::EdgeModel model = gaw::edge_state_model(spec);
    spectrum.notes.push_back("edge coupling J = " + gaw::format_number(model.J));
    spectrum.notes.push_back("edge decay Gamma_L = " + gaw::format_number(model.Gamma_L));
    spectrum.notes.push_back("regime: " +
                             gaw::to_string(4.0 * std::abs(model.J) > model.Gamma_L
                                                ? gaw::GapRegime::ATS
                                                : gaw::GapRegime::EIT));
    if (model.shallow_gap) spectrum.notes.push_back("warning: edge states not deep in the gap");
  } catch (const std::runtime_error& error) {
    spectrum.notes.push_back(std::string("edge model unavailable: ") + error.what());
  }
  write_table(spectrum.to_table(), args.out, config.format);
  return 0;
}

int run_verify_cmd(const Args& args) {
  gaw::VerifyReport report;
  if (!args.config_path.empty())
    report = gaw::run_verify(gaw::parse_config(read_file(args.config_path)));
  else
    report = gaw::run_verify();
  write_table(gaw::to_table(report), args.out, parse_format(args.format));
  return report.all_passed() ? 0 : 1;
}

int run_preset_cmd(const std::string& id, bool list, const Args& args) {
  if (list) {
    gaw::DataTable table;
    table.columns = {"id", "description"};
    for (const auto& preset_id : gaw::preset_ids())
      table.rows.push_back({preset_id, gaw::preset_description(preset_id)});
    write_table(table, args.out, parse_format(args.format));
    return 0;
  }
  if (id.empty()) throw std::runtime_error("preset: give an id or --list");
  write_table(gaw::run_preset(id), args.out, parse_format(args.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherent single-photon transport through arrays of giant atoms"};
  app.footer("GAW_WORKERS caps the number of sweep worker threads.");
  app.require_subcommand(1);

  Args sweep_args, modes_args, features_args, ssh_args, verify_args, preset_args;
  std::string preset_id;
  bool preset_list = false;

  CLI::App* sweep = app.add_subcommand("sweep", "scattering spectrum over a detuning grid");
  add_layout_options(sweep, sweep_args, true);
  add_sweep_options(sweep, sweep_args);
  add_output_options(sweep, sweep_args);

  CLI::App* modes = app.add_subcommand("modes", "collective modes and Lorentzian weights");
  add_layout_options(modes, modes_args, true);
  add_output_options(modes, modes_args);

  CLI::App* features = app.add_subcommand("features", "analytic spectral features");
  add_layout_options(features, features_args, true);
  add_output_options(features, features_args);

  CLI::App* ssh = app.add_subcommand("ssh", "topological probe chain spectrum with edge model");
  add_layout_options(ssh, ssh_args, false);
  add_sweep_options(ssh, ssh_args);
  add_output_options(ssh, ssh_args);

  CLI::App* verify = app.add_subcommand("verify", "cross-solver consistency report");
  verify->add_option("--config", verify_args.config_path, "scenario config to validate");
  add_output_options(verify, verify_args);

  CLI::App* preset = app.add_subcommand("preset", "named data panels");
  preset->add_option("id", preset_id, "preset id (fig2a, fig5c, ...)");
  preset->add_flag("--list", preset_list, "list available presets");
  add_output_options(preset, preset_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return run_single_output(sweep_args, gaw::OutputKind::Spectrum);
    if (modes->parsed()) return run_single_output(modes_args, gaw::OutputKind::Modes);
    if (features->parsed()) return run_single_output(features_args, gaw::OutputKind::Features);
    if (ssh->parsed()) return run_ssh(ssh_args);
    if (verify->parsed()) return run_verify_cmd(verify_args);
    if (preset->parsed()) return run_preset_cmd(preset_id, preset_list, preset_args);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
