#pragma once

#include "gaw/model.hpp"
#include "gaw/table.hpp"

#include <vector>

namespace gaw {

enum class FeatureKind { Decoupled, Superradiant, MinimaSet, BandGap };

struct SpectralFeature {
  FeatureKind kind = FeatureKind::Decoupled;
  double center = 0.0;
  double width = 0.0;           // Superradiant: N*Gamma_eff^sup; BandGap: W
  std::vector<double> minima;   // MinimaSet only, sorted ascending
};

std::string to_string(FeatureKind k);

// Single-atom parameters at the special phase theta = n*pi/M.
struct SuperradianceParams {
  bool decoupled = false;
  double lamb_shift = 0.0;       // Delta_L^sup
  double effective_decay = 0.0;  // Gamma_eff^sup
};

// n must be a nonnegative integer (passed as double so callers can hand
// over theta*M/pi directly); otherwise std::domain_error.
SuperradianceParams superradiance_params(int m_points, double n, double gamma);

// (full_width/2)^2 / ((delta-center)^2 + (full_width/2)^2).
double lorentzian_R(double delta, double center, double full_width);

// Zero-reflection detunings of the maximum-symmetry lattice, sorted
// ascending. Diverging entries (cos(M theta) equal to a Chebyshev root)
// are dropped. theta = n*pi/M is a domain error: no minima exist there.
std::vector<double> reflection_minima(int n_atoms, int m_points, double theta, double gamma);

struct BandGapWidths {
  double exact_estimate = 0.0;  // |Delta_1 - Delta_{N-1}|
  double asymptotic = 0.0;      // gamma/(1 - cos((2m+1)pi/2M))
  double large_m = 0.0;         // 8 M^2 gamma / pi^2
};

// Band-gap widths at the broadest-spectrum phase theta = (2m+1)pi/(2M).
BandGapWidths band_gap_width(int m_points, int m_index, double gamma, int n_atoms);

struct LorentzianFit {
  double center = 0.0;
  double fwhm = 0.0;
  double peak = 0.0;
  double residual = 0.0;  // rms of data minus model
  int iterations = 0;
};

// Levenberg-Marquardt fit of a single Lorentzian peak. Throws
// std::runtime_error with the iteration trace when it fails to converge.
LorentzianFit fit_lorentzian(const std::vector<double>& delta, const std::vector<double>& R);
LorentzianFit fit_lorentzian(const SpectrumTable& spectrum);

// All closed-form features of the maximum-symmetry lattice at phase theta.
std::vector<SpectralFeature> analyze_lattice(int n_atoms, int m_points, double theta,
                                             double gamma);

// Locate the reflectance minimum of the full solver inside [lo, hi] to an
// interval of width 1e-12*max(1,|delta|).
double refine_minimum(const AtomArray& array, double lo, double hi);

// Smallest collective decay of the N-atom lattice for each N in n_list.
std::vector<double> subradiant_decays(int m_points, double theta, double gamma,
                                      const std::vector<int>& n_list);

// Least-squares slope of log(y) vs log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gaw
