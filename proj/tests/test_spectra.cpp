#include <doctest.h>

#include <gaw/model.hpp>
#include <gaw/scattering.hpp>
#include <gaw/spectra.hpp>

#include <reference_values.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace gaw;

TEST_CASE("superradiance parameters at the special phases") {
  SUBCASE("odd multiples keep the atoms coupled") {
    auto p = superradiance_params(2, 1.0, 1.0);
    CHECK_FALSE(p.decoupled);
    CHECK(p.lamb_shift == doctest::Approx(oracle::sup_m2_n1_lamb).epsilon(1e-12));
    CHECK(p.effective_decay == doctest::Approx(oracle::sup_m2_n1_geff).epsilon(1e-12));

    p = superradiance_params(2, 3.0, 1.0);
    CHECK(p.lamb_shift == doctest::Approx(oracle::sup_m2_n3_lamb).epsilon(1e-12));
    CHECK(p.effective_decay == doctest::Approx(oracle::sup_m2_n3_geff).epsilon(1e-12));

    p = superradiance_params(3, 1.0, 1.0);
    CHECK(p.lamb_shift == doctest::Approx(oracle::sup_m3_n1_lamb).epsilon(1e-12));
    CHECK(p.effective_decay == doctest::Approx(oracle::sup_m3_n1_geff).epsilon(1e-12));
  }

  SUBCASE("full periods give the maximal in-phase decay") {
    for (double n : {0.0, 4.0}) {
      auto p = superradiance_params(2, n, 1.5);
      CHECK_FALSE(p.decoupled);
      CHECK(p.lamb_shift == doctest::Approx(0.0));
      CHECK(p.effective_decay == doctest::Approx(4.0 * 1.5).epsilon(1e-12));
    }
  }

  SUBCASE("half periods decouple the atoms") {
    auto p = superradiance_params(2, 2.0, 1.0);
    CHECK(p.decoupled);
    CHECK(p.effective_decay == doctest::Approx(0.0));
  }

  SUBCASE("fractional index is rejected") {
    CHECK_THROWS_AS(superradiance_params(2, 1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(superradiance_params(2, 1.0 + 1e-6, 1.0), std::domain_error);
  }
}

TEST_CASE("lorentzian profile has the right peak and half width") {
  CHECK(lorentzian_R(1.3, 1.3, 2.0) == doctest::Approx(1.0));
  CHECK(lorentzian_R(1.3 + 1.0, 1.3, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lorentzian_R(1.3 - 1.0, 1.3, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("reflection minima match the reference positions and kill R") {
  SUBCASE("two minima at theta = 0.35 pi") {
    auto minima = reflection_minima(3, 2, 0.35 * pi, 1.0);
    REQUIRE(minima.size() == 2);
    CHECK(minima[0] == doctest::Approx(oracle::minima_3x2_035_lo).epsilon(1e-12));
    CHECK(minima[1] == doctest::Approx(oracle::minima_3x2_035_hi).epsilon(1e-12));

    auto arr = build_separate_array(3, 2, 0.35 * pi, 1.0);
    for (double m : minima) CHECK(scatter(arr, m).R < 1e-10);
  }

  SUBCASE("degenerate root drops a minimum at theta = pi/6") {
    auto minima = reflection_minima(3, 2, pi / 6, 1.0);
    REQUIRE(minima.size() == oracle::minima_3x2_pi6_count);
    CHECK(minima[0] == doctest::Approx(oracle::minima_3x2_pi6_only).epsilon(1e-12));

    auto arr = build_separate_array(3, 2, pi / 6, 1.0);
    CHECK(scatter(arr, minima[0]).R < 1e-10);
  }

  SUBCASE("superradiant phases have no minima") {
    CHECK_THROWS_WITH_AS(reflection_minima(3, 2, pi / 2, 1.0),
                         doctest::Contains("superradiant"), std::domain_error);
    CHECK_THROWS_AS(reflection_minima(3, 2, pi, 1.0), std::domain_error);
  }

  SUBCASE("band edges for the ten-atom mirror") {
    auto minima = reflection_minima(10, 2, pi / 4, 1.0);
    REQUIRE(minima.size() == 8);  // central root diverges and is dropped
    // The gap spans the innermost pair of minima around the dressed resonance.
    auto arr = build_separate_array(10, 2, pi / 4, 1.0);
    const double lamb = single_atom_characteristics(arr, 0).first;
    auto above = std::upper_bound(minima.begin(), minima.end(), lamb);
    REQUIRE(above != minima.begin());
    REQUIRE(above != minima.end());
    CHECK(*(above - 1) == doctest::Approx(oracle::gap_10x2_lower_edge).epsilon(1e-12));
    CHECK(*above == doctest::Approx(oracle::gap_10x2_upper_edge).epsilon(1e-12));
  }
}

TEST_CASE("band gap widths agree with the reference forms") {
  auto w = band_gap_width(2, 0, 1.0, 10);
  CHECK(w.exact_estimate == doctest::Approx(oracle::gap_10x2_exact).epsilon(1e-12));
  CHECK(w.asymptotic == doctest::Approx(oracle::gap_m2_form).epsilon(1e-12));
  CHECK(w.large_m == doctest::Approx(oracle::gap_m2_large_m_form).epsilon(1e-12));
}

TEST_CASE("lorentzian fit recovers exact peaks and rejects bad input") {
  std::vector<double> x, y;
  for (int k = 0; k <= 300; ++k) {
    double d = -6.0 + 15.0 * k / 300.0;
    x.push_back(d);
    y.push_back(0.9 * lorentzian_R(d, 1.3, 2.7));
  }
  auto fit = fit_lorentzian(x, y);
  CHECK(fit.center == doctest::Approx(1.3).epsilon(1e-9));
  CHECK(fit.fwhm == doctest::Approx(2.7).epsilon(1e-9));
  CHECK(fit.peak == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(fit.residual < 1e-10);
  CHECK(fit.iterations >= 1);

  SUBCASE("spectrum overload reads the R column") {
    SpectrumTable table;
    table.delta = x;
    table.R = y;
    auto f2 = fit_lorentzian(table);
    CHECK(f2.center == doctest::Approx(fit.center).epsilon(1e-12));
  }

  SUBCASE("flat input") {
    std::vector<double> flat(x.size(), 0.5);
    CHECK_THROWS_WITH_AS(fit_lorentzian(x, flat), doctest::Contains("flat"),
                         std::invalid_argument);
  }

  SUBCASE("too few samples") {
    CHECK_THROWS_AS(fit_lorentzian({0.0, 1.0, 2.0}, {0.1, 0.9, 0.1}),
                    std::invalid_argument);
  }
}

TEST_CASE("lattice analysis reports the expected feature set") {
  SUBCASE("generic phase gives minima only") {
    auto features = analyze_lattice(3, 2, 0.35 * pi, 1.0);
    REQUIRE(features.size() == 1);
    CHECK(features[0].kind == FeatureKind::MinimaSet);
    REQUIRE(features[0].minima.size() == 2);
    CHECK(features[0].minima[0] ==
          doctest::Approx(oracle::minima_3x2_035_lo).epsilon(1e-12));
  }

  SUBCASE("broadest phase adds the band gap") {
    auto features = analyze_lattice(10, 2, pi / 4, 1.0);
    REQUIRE(features.size() == 2);
    bool saw_gap = false;
    for (const auto& f : features)
      if (f.kind == FeatureKind::BandGap) {
        saw_gap = true;
        CHECK(f.width == doctest::Approx(oracle::gap_10x2_exact).epsilon(1e-12));
      }
    CHECK(saw_gap);
  }

  SUBCASE("superradiant and decoupled phases") {
    auto sup = analyze_lattice(3, 2, pi / 2, 1.0);
    REQUIRE(sup.size() == 1);
    CHECK(sup[0].kind == FeatureKind::Superradiant);
    CHECK(sup[0].center == doctest::Approx(oracle::sup_m2_n1_lamb).epsilon(1e-12));
    CHECK(sup[0].width == doctest::Approx(3.0 * oracle::sup_m2_n1_geff).epsilon(1e-12));

    auto dec = analyze_lattice(3, 2, pi, 1.0);
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].kind == FeatureKind::Decoupled);
  }
}

TEST_CASE("numeric minimum refinement lands on the analytic zeros") {
  auto arr = build_separate_array(3, 2, 0.35 * pi, 1.0);
  CHECK(refine_minimum(arr, 1.5, 2.5) ==
        doctest::Approx(oracle::minima_3x2_035_lo).epsilon(1e-8));
  CHECK(refine_minimum(arr, 13.0, 15.0) ==
        doctest::Approx(oracle::minima_3x2_035_hi).epsilon(1e-8));
}

TEST_CASE("subradiant decay scaling follows the cubic law") {
  std::vector<int> sizes{8, 12, 16, 20, 24};
  auto decays = subradiant_decays(2, pi / 4, 1.0, sizes);
  REQUIRE(decays.size() == sizes.size());
  std::vector<double> x(sizes.begin(), sizes.end());
  double slope = log_log_slope(x, decays);
  CHECK(slope > -3.3);
  CHECK(slope < -2.7);
}

TEST_CASE("log-log slope is exact on a pure power law") {
  std::vector<double> x{1.0, 2.0, 4.0, 8.0};
  std::vector<double> y;
  for (double v : x) y.push_back(7.0 / (v * v * v));
  CHECK(log_log_slope(x, y) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("superradiant lattices collapse to a single lorentzian") {
  for (int n : {2, 3, 5}) {
    auto arr = build_separate_array(n, 2, pi / 2, 1.0);
    auto sup = superradiance_params(2, 1.0, 1.0);
    for (double delta : {-2.0, 0.0, 2.5, 6.0}) {
      double expect = lorentzian_R(delta, sup.lamb_shift, n * sup.effective_decay);
      CHECK(std::abs(scatter(arr, delta).R - expect) < 1e-10);
    }
  }
}
