#include "gaw/sweep.hpp"

#include "gaw/scattering.hpp"
#include "gaw/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace gaw {

namespace {

double decay_scale(const AtomArray& array) {
  double scale = 0.0;
  for (const auto& atom : array.atoms)
    for (const auto& p : atom.points) scale = std::max(scale, p.bare_decay);
  return scale > 0.0 ? scale : 1.0;
}

// Recover (N, M, theta, gamma) when the array is the periodic
// maximum-symmetry lattice: identical resonant atoms, M equal-weight
// points each, one uniform phase spacing across the whole array.
std::optional<std::tuple<int, int, double, double>> detect_lattice(const AtomArray& array) {
  const int n = static_cast<int>(array.atoms.size());
  const int m = static_cast<int>(array.atoms.front().points.size());
  const double gamma = array.atoms.front().points.front().bare_decay;
  const double ref = array.reference_frequency;

  std::vector<double> phases;
  for (const auto& atom : array.atoms) {
    if (static_cast<int>(atom.points.size()) != m) return std::nullopt;
    if (std::abs(atom.frequency - ref) > 1e-12 * ref) return std::nullopt;
    for (const auto& p : atom.points) {
      if (std::abs(p.bare_decay - gamma) > 1e-12 * std::max(1.0, gamma)) return std::nullopt;
      phases.push_back(phase_delay(p, ref, array.group_velocity));
    }
  }
  const double theta = phases.size() > 1 ? phases[1] - phases[0] : 0.0;
  if (theta < 0.0) return std::nullopt;
  for (std::size_t k = 0; k < phases.size(); ++k)
    if (std::abs(phases[k] - (phases[0] + k * theta)) > 1e-9) return std::nullopt;
  return std::make_tuple(n, m, theta, gamma);
}

struct PointValue {
  double delta = 0.0;  // actually evaluated detuning (offset at poles)
  Complex t;
  Complex r;
  std::string note;  // empty unless the point was offset
};

}  // namespace

std::string to_string(Solver s) {
  switch (s) {
    case Solver::General: return "general";
    case Solver::Cascade: return "cascade";
    case Solver::Closed: return "closed";
    case Solver::All: return "all";
  }
  return "unknown";
}

std::vector<double> SweepGrid::points() const {
  std::vector<double> out(count);
  const double step = count > 1 ? (max - min) / (count - 1) : 0.0;
  for (int i = 0; i < count; ++i) out[i] = min + step * i;
  if (count > 1) out.back() = max;
  return out;
}

void validate(const SweepGrid& grid) {
  if (!std::isfinite(grid.min) || !std::isfinite(grid.max))
    throw std::invalid_argument("sweep grid: bounds must be finite");
  if (grid.count < 2) throw std::invalid_argument("sweep grid: count must be >= 2");
  if (!(grid.min < grid.max)) throw std::invalid_argument("sweep grid: need min < max");
}

int worker_count(int jobs) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("GAW_WORKERS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) cap = std::min<long>(cap, parsed);
  }
  return std::max(1, std::min(cap, jobs));
}

SpectrumTable sweep_spectrum(const AtomArray& array, const SweepGrid& grid,
                             const SweepOptions& options) {
  validate(array);
  validate(grid);

  const bool markovian = array.regime == Regime::Markovian;
  if (!markovian && (options.solver == Solver::Cascade || options.solver == Solver::Closed))
    throw std::invalid_argument("sweep: cascade and closed-form solvers are Markovian only");

  std::optional<std::tuple<int, int, double, double>> lattice;
  std::string lattice_reason;
  if (options.solver == Solver::Closed || options.solver == Solver::All) {
    if (markovian) lattice = detect_lattice(array);
    if (!lattice)
      lattice_reason = markovian ? "array is not a periodic maximum-symmetry lattice"
                                 : "closed form is Markovian only";
    if (options.solver == Solver::Closed && !lattice)
      throw std::invalid_argument("sweep: closed-form solver requires a periodic "
                                  "maximum-symmetry lattice");
  }

  std::string cascade_reason;
  if (options.solver == Solver::Cascade || options.solver == Solver::All) {
    if (!markovian)
      cascade_reason = "cascade solver is Markovian only";
    else if (classify_configuration(array) != Configuration::Separate)
      cascade_reason = "array is not separate";
    if (options.solver == Solver::Cascade && !cascade_reason.empty())
      throw std::invalid_argument("sweep: " + cascade_reason);
  }

  const SystemMatrices sys = build_system_matrices(array);
  std::vector<CollectiveMode> modes;
  if (options.mode_components) modes = collective_modes(array);

  const std::vector<double> deltas = grid.points();
  const int n_points = grid.count;
  const double offset = 1e-9 * decay_scale(array);

  const auto evaluate_t_r = [&](double delta) -> std::pair<Complex, Complex> {
    switch (options.solver) {
      case Solver::Cascade:
        return cascade_scatter(array, delta);
      case Solver::Closed: {
        const auto [n, m, theta, gamma] = *lattice;
        return closed_form_scatter(n, m, theta, gamma, delta);
      }
      default: {
        const ScatteringResult res = markovian ? scatter(sys, delta) : scatter(array, delta);
        return {res.t, res.r};
      }
    }
  };

  std::vector<PointValue> values(n_points);
  struct Deviation {
    double cascade = 0.0;
    double closed = 0.0;
  };
  std::vector<Deviation> deviations;
  const int workers = options.workers > 0 ? std::min(options.workers, n_points)
                                          : worker_count(n_points);
  deviations.resize(workers);

  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto run_chunk = [&](int worker) {
    try {
      for (int i = worker; i < n_points; i += workers) {
        PointValue& value = values[i];
        value.delta = deltas[i];
        try {
          std::tie(value.t, value.r) = evaluate_t_r(value.delta);
        } catch (const std::runtime_error&) {
          // Probe sits exactly on a pole; nudge it off and note the shift.
          const double shifted = deltas[i] + offset;
          std::tie(value.t, value.r) = evaluate_t_r(shifted);
          std::ostringstream note;
          note << "pole at delta=" << format_number(deltas[i]) << ": evaluated at delta="
               << format_number(shifted);
          value.note = note.str();
          value.delta = shifted;
        }
        if (options.solver == Solver::All) {
          // Skip a comparison point if that solver pole-errors at an ulp-shifted
          // resonance the general solve survived.
          if (cascade_reason.empty()) {
            try {
              const auto [tc, rc] = cascade_scatter(array, value.delta);
              deviations[worker].cascade = std::max(
                  {deviations[worker].cascade, std::abs(tc - value.t), std::abs(rc - value.r)});
            } catch (const std::runtime_error&) {
            }
          }
          if (lattice) {
            const auto [n, m, theta, gamma] = *lattice;
            try {
              const auto [tf, rf] = closed_form_scatter(n, m, theta, gamma, value.delta);
              deviations[worker].closed = std::max(
                  {deviations[worker].closed, std::abs(tf - value.t), std::abs(rf - value.r)});
            } catch (const std::runtime_error&) {
            }
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  SpectrumTable table;
  table.delta.reserve(n_points);
  table.t.reserve(n_points);
  table.r.reserve(n_points);
  table.T.reserve(n_points);
  table.R.reserve(n_points);
  if (options.mode_components) table.mode_components.reserve(n_points);
  for (const auto& value : values) {
    table.delta.push_back(value.delta);
    table.t.push_back(value.t);
    table.r.push_back(value.r);
    table.T.push_back(std::norm(value.t));
    table.R.push_back(std::norm(value.r));
    if (!value.note.empty()) table.notes.push_back(value.note);
    if (options.mode_components) {
      std::vector<double> components;
      components.reserve(modes.size());
      for (const auto& mode : modes)
        components.push_back(std::norm(mode_component(mode, value.delta)));
      table.mode_components.push_back(std::move(components));
    }
  }

  if (options.solver == Solver::All) {
    double dev_cascade = 0.0;
    double dev_closed = 0.0;
    for (const auto& d : deviations) {
      dev_cascade = std::max(dev_cascade, d.cascade);
      dev_closed = std::max(dev_closed, d.closed);
    }
    table.notes.push_back(cascade_reason.empty()
                              ? "cascade max amplitude deviation: " + format_number(dev_cascade)
                              : "cascade skipped: " + cascade_reason);
    table.notes.push_back(lattice ? "closed-form max amplitude deviation: " +
                                        format_number(dev_closed)
                                  : "closed-form skipped: " + lattice_reason);
  }
  return table;
}

}  // namespace gaw
