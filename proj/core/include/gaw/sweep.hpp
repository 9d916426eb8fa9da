#pragma once

#include "gaw/model.hpp"
#include "gaw/table.hpp"

#include <vector>

namespace gaw {

enum class Solver { General, Cascade, Closed, All };

std::string to_string(Solver s);

struct SweepGrid {
  double min = -10.0;
  double max = 10.0;
  int count = 1001;

  std::vector<double> points() const;  // strictly increasing
  bool operator==(const SweepGrid&) const = default;
};

// Throws std::invalid_argument unless count >= 2 and min < max.
void validate(const SweepGrid& grid);

// Worker cap: min(available cores, jobs, GAW_WORKERS if set).
int worker_count(int jobs);

struct SweepOptions {
  Solver solver = Solver::General;
  bool mode_components = false;  // append |L_n|^2 columns
  int workers = 0;               // 0 = automatic
};

// Evaluate the spectrum over the grid in parallel. Grid points that sit
// exactly on a pole are offset by 1e-9*gamma and noted. Output is
// deterministic and independent of the worker count. For Solver::All the
// rows come from the general solver and the notes record the maximum
// cascade/closed-form deviations.
SpectrumTable sweep_spectrum(const AtomArray& array, const SweepGrid& grid,
                             const SweepOptions& options = {});

}  // namespace gaw
