#include <doctest.h>

#include <gaw/model.hpp>
#include <gaw/scattering.hpp>
#include <gaw/ssh.hpp>

#include <reference_values.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "test_helpers.hpp"

using namespace gaw;
using testutil::array_of;
using testutil::atom;

namespace {

void check_amplitudes(const ScatteringResult& got, Complex t_ref, Complex r_ref) {
  CHECK(std::abs(got.t - t_ref) < 1e-12);
  CHECK(std::abs(got.r - r_ref) < 1e-12);
  CHECK(got.T == doctest::Approx(std::norm(got.t)).epsilon(1e-14));
  CHECK(got.R == doctest::Approx(std::norm(got.r)).epsilon(1e-14));
  CHECK(std::abs(got.T + got.R - 1.0) < 1e-12);
}

}  // namespace

TEST_CASE("scattering amplitudes match reference values") {
  SUBCASE("two small atoms") {
    auto arr = array_of({atom({{0.0, 1.0}}), atom({{pi / 2, 1.0}})});
    check_amplitudes(scatter(arr, 0.3), oracle::scat_two_small_t,
                     oracle::scat_two_small_r);
  }
  SUBCASE("separate lattice") {
    auto arr = build_separate_array(3, 2, 0.35 * pi, 1.0);
    check_amplitudes(scatter(arr, 0.5), oracle::scat_sep3x2_035_t,
                     oracle::scat_sep3x2_035_r);
  }
  SUBCASE("braided triple") {
    auto arr = build_braided_array(3, 0.35 * pi, 1.0);
    check_amplitudes(scatter(arr, 0.5), oracle::scat_braided3_035_t,
                     oracle::scat_braided3_035_r);
  }
  SUBCASE("nested triple") {
    auto arr = build_nested_array(3, pi / 4, 1.0);
    check_amplitudes(scatter(arr, -0.7), oracle::scat_nested3_quarter_t,
                     oracle::scat_nested3_quarter_r);
  }
  SUBCASE("topological chain") {
    auto arr = build_ssh_probe_array({16, 0.2 * pi, 0.3 * pi, 0.1 * pi, 1.0, 1.0});
    check_amplitudes(scatter(arr, 0.01), oracle::scat_ssh_ats_d001_t,
                     oracle::scat_ssh_ats_d001_r);
  }
}

TEST_CASE("system matrices are exactly symmetric and consistently shifted") {
  auto arr = array_of({atom({{0.0, 0.7}, {1.3, 1.9}}, 0.8),
                       atom({{0.4, 1.1}, {2.6, 0.3}}, 1.1),
                       atom({{1.7, 0.5}}, 1.0)});
  auto sys = build_system_matrices(arr);
  const int n = 3;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(sys.detuned(i, j) == sys.detuned(j, i));
      Complex expect = sys.detuned(i, j);
      if (i == j) expect += arr.reference_frequency;
      CHECK(sys.hamiltonian(i, j) == expect);
    }
}

TEST_CASE("prebuilt matrices reproduce the one-shot solve") {
  auto arr = build_braided_array(4, 0.6, 1.2);
  auto sys = build_system_matrices(arr);
  for (double delta : {-3.0, -0.2, 0.0, 1.7}) {
    auto a = scatter(arr, delta);
    auto b = scatter(sys, delta);
    CHECK(a.t == b.t);
    CHECK(a.r == b.r);
  }
}

TEST_CASE("probe on a dark resonance reports the singular system") {
  auto arr = build_braided_array(3, 0.0, 1.0);
  CHECK_THROWS_WITH_AS(scatter(arr, 0.0), doctest::Contains("singular"),
                       std::runtime_error);
  // A hair off the dark state the system is regular and fully reflecting.
  auto res = scatter(arr, 1e-9);
  CHECK(res.R == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("collective modes reproduce the reference subradiant decays") {
  auto arr = build_separate_array(10, 2, pi / 4, 1.0);
  auto modes = collective_modes(arr);
  REQUIRE(modes.size() == 10);

  std::vector<double> decays;
  for (const auto& m : modes) decays.push_back(m.decay);
  std::sort(decays.begin(), decays.end());
  CHECK(decays[0] == doctest::Approx(oracle::modes_sep10_min_decay).epsilon(1e-8));
  CHECK(decays[1] == doctest::Approx(oracle::modes_sep10_second_decay).epsilon(1e-8));

  // Modes arrive sorted by detuning, decays stay physical.
  for (std::size_t k = 1; k < modes.size(); ++k)
    CHECK(modes[k].energy_detuning >= modes[k - 1].energy_detuning);
  for (const auto& m : modes) CHECK(m.decay >= -1e-10);

  CHECK(biorthonormality_residual(modes) < 1e-10);
}

TEST_CASE("mode weights satisfy the completeness sums") {
  std::vector<AtomArray> arrays = {
      build_separate_array(3, 2, 0.35 * pi, 1.0),
      build_braided_array(3, 0.35 * pi, 1.0),
      build_nested_array(3, pi / 4, 1.0),
      build_ssh_probe_array({16, 0.2 * pi, 0.3 * pi, 0.1 * pi, 1.0, 1.0}),
  };
  for (const auto& arr : arrays) {
    auto sys = build_system_matrices(arr);
    auto modes = collective_modes(arr);
    Complex sum_t{0.0, 0.0};
    Complex sum_r{0.0, 0.0};
    for (const auto& m : modes) {
      sum_t += m.weight_t;
      sum_r += m.weight_r;
    }
    Complex I{0.0, 1.0};
    Complex expect_t = -I * sys.drive.dot(sys.drive);
    Complex expect_r = -I * (sys.drive.transpose() * sys.drive)(0);
    CHECK(std::abs(sum_t - expect_t) < 1e-9);
    CHECK(std::abs(sum_r - expect_r) < 1e-9);
  }
}

TEST_CASE("mode reconstruction matches the direct solve") {
  std::vector<AtomArray> arrays = {
      build_separate_array(3, 2, 0.35 * pi, 1.0),
      build_braided_array(3, 0.35 * pi, 1.0),
      build_nested_array(3, pi / 4, 1.0),
  };
  for (const auto& arr : arrays) {
    auto modes = collective_modes(arr);
    for (double delta : {-4.0, -1.3, 0.1, 0.9, 2.4, 7.0}) {
      auto direct = scatter(arr, delta);
      auto [t, r] = reconstruct_from_modes(modes, delta);
      CHECK(std::abs(t - direct.t) < 1e-10);
      CHECK(std::abs(r - direct.r) < 1e-10);

      Complex channel_sum{0.0, 0.0};
      for (const auto& m : modes) channel_sum += mode_component(m, delta);
      CHECK(std::abs(channel_sum - direct.r) < 1e-10);
    }
  }
}

TEST_CASE("degenerate but diagonalizable spectra are re-orthogonalized") {
  // Fully dark pair: the effective Hamiltonian vanishes identically, so
  // both eigenvalues collapse to zero yet the matrix stays diagonalizable.
  auto arr = build_braided_array(2, pi, 1.0);
  auto modes = collective_modes(arr);
  REQUIRE(modes.size() == 2);
  CHECK(biorthonormality_residual(modes) < 1e-10);
  for (const auto& m : modes) CHECK(std::abs(m.eigenvalue - 1.0) < 1e-12);
}

TEST_CASE("an exceptional point is reported as a degenerate spectrum") {
  // Two coincident single-point atoms detuned by exactly gamma sit on the
  // textbook exceptional point of the two-atom effective Hamiltonian.
  auto arr = array_of({atom({{0.0, 1.0}}, 1.5), atom({{0.0, 1.0}}, 0.5)});
  CHECK_THROWS_WITH_AS(collective_modes(arr), doctest::Contains("degenerate spectrum"),
                       std::runtime_error);
}

TEST_CASE("lattice reflection is total at the dressed resonance") {
  for (int n : {2, 3, 5}) {
    for (double theta : {0.35 * pi, pi / 6, 1.1}) {
      auto arr = build_separate_array(n, 2, theta, 1.0);
      auto [lamb, geff] = single_atom_characteristics(arr, 0);
      REQUIRE(geff > 1e-6);
      auto res = scatter(arr, lamb);
      CHECK(std::abs(res.R - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("retardation vanishes as the reference frequency grows") {
  auto fast = build_separate_array(3, 2, 0.35 * pi, 1.0, 1e12);
  fast.regime = Regime::NonMarkovian;
  auto pinned = build_separate_array(3, 2, 0.35 * pi, 1.0);

  for (double delta : {-5.0, -1.0, 0.4, 2.2, 5.0}) {
    auto a = scatter(fast, delta);
    auto b = scatter(pinned, delta);
    CHECK(std::abs(a.r - b.r) < 1e-8);
    CHECK(std::abs(a.t - b.t) < 1e-8);
  }

  // At a moderate carrier the retardation is clearly visible.
  auto slow = build_separate_array(3, 2, 0.35 * pi, 1.0, 20.0);
  slow.regime = Regime::NonMarkovian;
  auto pinned20 = build_separate_array(3, 2, 0.35 * pi, 1.0, 20.0);
  CHECK(std::abs(scatter(slow, 3.0).r - scatter(pinned20, 3.0).r) > 1e-4);
  auto nm = scatter(slow, 3.0);
  CHECK(std::abs(nm.T + nm.R - 1.0) < 1e-10);
}
