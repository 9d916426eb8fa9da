#include <doctest.h>

#include <gaw/presets.hpp>
#include <gaw/table.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

using namespace gaw;

namespace {
bool has(const std::vector<std::string>& ids, const std::string& id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}
}  // namespace

TEST_CASE("preset catalog is complete and described") {
  auto ids = preset_ids();
  CHECK(ids.size() == 38);
  for (const char* id : {"fig2a", "fig3b", "fig4d", "fig5a", "fig7c", "fig8f",
                         "fig10a", "fig10j", "fig11c", "fig11h"})
    CHECK(has(ids, id));
  for (const auto& id : ids) CHECK_FALSE(preset_description(id).empty());

  CHECK_THROWS_AS(run_preset("fig99z"), std::invalid_argument);
  CHECK_THROWS_AS(preset_description("fig99z"), std::invalid_argument);
}

TEST_CASE("spectrum panels carry the analytic minima in their notes") {
  auto table = run_preset("fig4a");
  REQUIRE(table.columns.size() == 7);
  CHECK(table.columns[0] == "delta");
  CHECK(table.rows.size() == 3001);

  bool noted = false;
  for (const auto& note : table.notes)
    if (note.find("minimum 1 at") != std::string::npos) noted = true;
  CHECK(noted);

  // Reflection collapses near the first analytic minimum.
  double best = 1.0;
  for (const auto& row : table.rows) {
    double delta = std::stod(row[0]);
    if (delta > 1.5 && delta < 2.5) best = std::min(best, std::stod(row[6]));
  }
  CHECK(best < 1e-3);
}

TEST_CASE("mode-component panels append per-mode columns") {
  auto table = run_preset("fig4d");
  REQUIRE(table.columns.size() == 10);
  CHECK(table.columns[7] == "L1");
  CHECK(table.columns[9] == "L3");
}

TEST_CASE("section panels stack one reflection column per phase") {
  auto table = run_preset("fig3a");
  REQUIRE(table.columns.size() == 5);
  CHECK(table.columns[0] == "delta");
  CHECK(table.columns[1] == "R1");
  CHECK(table.rows.size() == 1201);
  bool labeled = false;
  for (const auto& note : table.notes)
    if (note.find("R1: theta = ") != std::string::npos) labeled = true;
  CHECK(labeled);
}

TEST_CASE("scaling panels have the documented shapes") {
  auto decay = run_preset("fig5c");
  CHECK(decay.columns == std::vector<std::string>{"n_atoms", "min_decay"});
  CHECK(decay.rows.size() == 17);

  auto chain = run_preset("fig7d");
  REQUIRE(chain.columns.size() == 17);
  CHECK(chain.columns[0] == "beta");
  CHECK(chain.rows.size() == 181);

  auto gap = run_preset("fig8d");
  CHECK(gap.columns ==
        std::vector<std::string>{"delta", "R", "R_approx", "L_plus", "L_minus"});
  CHECK(gap.rows.size() == 4801);
}

TEST_CASE("phase maps sample the full detuning plane") {
  auto map = run_preset("fig2a");
  CHECK(map.columns == std::vector<std::string>{"theta", "delta", "R"});
  CHECK(map.rows.size() == 201 * 401);
}
