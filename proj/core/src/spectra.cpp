#include "gaw/spectra.hpp"

#include "gaw/scattering.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaw {

namespace {

// Closed-form single-atom characteristics of the maximum-symmetry lattice,
// stable through theta -> 0 via half-angle form.
std::pair<double, double> lattice_characteristics(int m_points, double theta, double gamma) {
  const double half = std::sin(0.5 * theta);
  if (std::abs(half) < 1e-9) return {0.0, gamma * m_points * m_points};
  const double ratio = std::sin(0.5 * m_points * theta) / half;
  const double effective_decay = gamma * ratio * ratio;
  const double lamb_shift =
      0.25 * gamma * (m_points * std::sin(theta) - std::sin(m_points * theta)) / (half * half);
  return {lamb_shift, effective_decay};
}

bool near_integer(double x, double tol, long& value) {
  const double rounded = std::round(x);
  if (std::abs(x - rounded) > tol) return false;
  value = static_cast<long>(rounded);
  return true;
}

}  // namespace

std::string to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::Decoupled: return "decoupled";
    case FeatureKind::Superradiant: return "superradiant";
    case FeatureKind::MinimaSet: return "minima";
    case FeatureKind::BandGap: return "band_gap";
  }
  return "unknown";
}

SuperradianceParams superradiance_params(int m_points, double n, double gamma) {
  if (m_points < 1) throw std::invalid_argument("superradiance_params: m_points must be >= 1");
  long k = 0;
  if (n < -1e-9 || !near_integer(n, 1e-9, k))
    throw std::domain_error("superradiance_params: n must be a nonnegative integer");

  SuperradianceParams params;
  if (k % 2 == 1) {
    const double arg = 0.5 * k * pi / m_points;
    params.lamb_shift = 0.5 * m_points * gamma / std::tan(arg);
    params.effective_decay = gamma / (std::sin(arg) * std::sin(arg));
    return params;
  }
  const long m = k / 2;
  if (m % m_points == 0) {
    params.lamb_shift = 0.0;
    params.effective_decay = m_points * m_points * gamma;
    return params;
  }
  // Even n with m not a multiple of M: the atom decouples. The Lamb shift
  // stays finite, (gamma M / 2) cot(m pi / M).
  params.decoupled = true;
  params.effective_decay = 0.0;
  params.lamb_shift = 0.5 * m_points * gamma / std::tan(static_cast<double>(m) * pi / m_points);
  return params;
}

double lorentzian_R(double delta, double center, double full_width) {
  const double hw = 0.5 * full_width;
  const double d = delta - center;
  return hw * hw / (d * d + hw * hw);
}

std::vector<double> reflection_minima(int n_atoms, int m_points, double theta, double gamma) {
  if (n_atoms < 2) throw std::invalid_argument("reflection_minima: need at least two atoms");
  if (m_points < 1) throw std::invalid_argument("reflection_minima: m_points must be >= 1");

  const double phi = m_points * theta;
  long n_index = 0;
  if (near_integer(phi / pi, 1e-9, n_index))
    throw std::domain_error(
        "reflection_minima: theta = n pi / M is a superradiant phase with no minima");

  const auto [lamb_shift, effective_decay] = lattice_characteristics(m_points, theta, gamma);
  const double cos_phi = std::cos(phi);
  const double sin_phi = std::sin(phi);

  std::vector<double> minima;
  for (int s = 1; s < n_atoms; ++s) {
    const double ys = std::cos(s * pi / n_atoms);
    const double den = ys - cos_phi;
    if (std::abs(den) < 1e-12) continue;  // diverging branch, no finite minimum
    minima.push_back(lamb_shift + 0.5 * sin_phi / den * effective_decay);
  }
  std::sort(minima.begin(), minima.end());
  return minima;
}

BandGapWidths band_gap_width(int m_points, int m_index, double gamma, int n_atoms) {
  if (m_points < 1) throw std::invalid_argument("band_gap_width: m_points must be >= 1");
  if (m_index < 0) throw std::invalid_argument("band_gap_width: m_index must be >= 0");
  if (n_atoms < 2) throw std::invalid_argument("band_gap_width: need at least two atoms");

  const double theta = (2 * m_index + 1) * pi / (2.0 * m_points);
  const auto [lamb_shift, effective_decay] = lattice_characteristics(m_points, theta, gamma);
  const double phi = m_points * theta;  // odd multiple of pi/2
  const double cos_phi = std::cos(phi);
  const double sin_phi = std::sin(phi);

  const auto edge = [&](int s) {
    const double ys = std::cos(s * pi / n_atoms);
    return lamb_shift + 0.5 * sin_phi / (ys - cos_phi) * effective_decay;
  };

  BandGapWidths widths;
  widths.exact_estimate = std::abs(edge(1) - edge(n_atoms - 1));
  widths.asymptotic = effective_decay;
  widths.large_m = 8.0 * m_points * m_points * gamma / (pi * pi);
  return widths;
}

LorentzianFit fit_lorentzian(const std::vector<double>& delta, const std::vector<double>& R) {
  if (delta.size() != R.size())
    throw std::invalid_argument("fit_lorentzian: delta and R differ in length");
  const int n = static_cast<int>(delta.size());
  if (n < 4) throw std::invalid_argument("fit_lorentzian: need at least four samples");

  const double r_max = *std::max_element(R.begin(), R.end());
  const double r_min = *std::min_element(R.begin(), R.end());
  if (r_max - r_min < 1e-15 * std::max(1.0, std::abs(r_max)))
    throw std::invalid_argument("fit_lorentzian: input is flat, no peak to fit");

  // Initial guess: peak position and a half-maximum width scan.
  const int i_peak = static_cast<int>(std::max_element(R.begin(), R.end()) - R.begin());
  double center = delta[i_peak];
  double peak = r_max;
  double lo = delta.front();
  double hi = delta.back();
  const double half_level = r_min + 0.5 * (r_max - r_min);
  for (int i = i_peak; i >= 0; --i)
    if (R[i] < half_level) {
      lo = delta[i];
      break;
    }
  for (int i = i_peak; i < n; ++i)
    if (R[i] < half_level) {
      hi = delta[i];
      break;
    }
  double width = hi - lo;
  if (width <= 0.0) width = 0.25 * (delta.back() - delta.front());

  // Levenberg-Marquardt with analytic Jacobian for
  // f = p h / ((x - c)^2 + h), h = (w/2)^2.
  Eigen::Vector3d params(center, width, peak);
  const auto rss_of = [&](const Eigen::Vector3d& q) {
    const double h = 0.25 * q(1) * q(1);
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = delta[i] - q(0);
      const double f = q(2) * h / (d * d + h);
      rss += (R[i] - f) * (R[i] - f);
    }
    return rss;
  };

  double lambda = 1e-3;
  double rss = rss_of(params);
  std::ostringstream trace;
  int iter = 0;
  bool converged = false;
  for (; iter < 200; ++iter) {
    const double c = params(0);
    const double w = params(1);
    const double p = params(2);
    const double h = 0.25 * w * w;

    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (int i = 0; i < n; ++i) {
      const double d = delta[i] - c;
      const double den = d * d + h;
      const double f = p * h / den;
      Eigen::Vector3d jac;
      jac(0) = 2.0 * p * h * d / (den * den);
      jac(1) = 0.5 * w * p * d * d / (den * den);
      jac(2) = h / den;
      const double res = R[i] - f;
      jtj += jac * jac.transpose();
      jtr += jac * res;
    }

    Eigen::Matrix3d damped = jtj;
    damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-30);
    const Eigen::Vector3d step = damped.ldlt().solve(jtr);
    const Eigen::Vector3d next = params + step;
    const double next_rss = rss_of(next);
    trace << "iter " << iter << ": center=" << params(0) << " width=" << params(1)
          << " peak=" << params(2) << " rss=" << rss << " lambda=" << lambda << "\n";

    if (next_rss <= rss) {
      const double scale = params.cwiseAbs().maxCoeff() + 1e-30;
      const bool small_step = step.cwiseAbs().maxCoeff() < 1e-13 * scale;
      const bool small_gain = rss - next_rss < 1e-30 + 1e-15 * rss;
      params = next;
      rss = next_rss;
      lambda = std::max(lambda * 0.25, 1e-14);
      if (small_step || small_gain) {
        converged = true;
        break;
      }
    } else {
      lambda *= 10.0;
      if (lambda > 1e14) break;
    }
  }
  if (!converged)
    throw std::runtime_error("fit_lorentzian: no convergence after " + std::to_string(iter) +
                             " iterations\n" + trace.str());

  LorentzianFit fit;
  fit.center = params(0);
  fit.fwhm = std::abs(params(1));
  fit.peak = params(2);
  fit.residual = std::sqrt(rss / n);
  fit.iterations = iter + 1;
  return fit;
}

LorentzianFit fit_lorentzian(const SpectrumTable& spectrum) {
  return fit_lorentzian(spectrum.delta, spectrum.R);
}

std::vector<SpectralFeature> analyze_lattice(int n_atoms, int m_points, double theta,
                                             double gamma) {
  if (n_atoms < 1) throw std::invalid_argument("analyze_lattice: need at least one atom");
  std::vector<SpectralFeature> features;

  long n_index = 0;
  if (near_integer(m_points * theta / pi, 1e-9, n_index)) {
    const auto params = superradiance_params(m_points, static_cast<double>(std::abs(n_index)),
                                             gamma);
    SpectralFeature feature;
    feature.center = params.lamb_shift;
    if (params.decoupled) {
      feature.kind = FeatureKind::Decoupled;
    } else {
      feature.kind = FeatureKind::Superradiant;
      feature.width = n_atoms * params.effective_decay;
    }
    features.push_back(feature);
    return features;
  }

  SpectralFeature minima;
  minima.kind = FeatureKind::MinimaSet;
  minima.minima = reflection_minima(n_atoms, m_points, theta, gamma);
  const auto [lamb_shift, effective_decay] = lattice_characteristics(m_points, theta, gamma);
  minima.center = lamb_shift;
  features.push_back(std::move(minima));

  long two_m = 0;
  if (near_integer((2.0 * m_points * theta / pi - 1.0) / 2.0, 1e-9, two_m) && two_m >= 0) {
    SpectralFeature gap;
    gap.kind = FeatureKind::BandGap;
    gap.center = lamb_shift;
    gap.width = band_gap_width(m_points, static_cast<int>(two_m), gamma, n_atoms).exact_estimate;
    features.push_back(gap);
  }
  return features;
}

double refine_minimum(const AtomArray& array, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("refine_minimum: need lo < hi");
  const SystemMatrices sys = build_system_matrices(array);
  const bool markovian = array.regime == Regime::Markovian;
  const auto R_at = [&](double d) {
    return markovian ? scatter(sys, d).R : scatter(array, d).R;
  };

  // Golden-section search; R >= 0 touches zero quadratically, so sign-based
  // bracketing cannot work here.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = R_at(x1);
  double f2 = R_at(x2);
  const double tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = R_at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = R_at(x2);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> subradiant_decays(int m_points, double theta, double gamma,
                                      const std::vector<int>& n_list) {
  std::vector<double> decays;
  decays.reserve(n_list.size());
  for (int n : n_list) {
    const AtomArray array = build_separate_array(n, m_points, theta, gamma);
    const auto modes = collective_modes(array);
    double min_decay = modes.front().decay;
    for (const auto& mode : modes) min_decay = std::min(min_decay, mode.decay);
    decays.push_back(min_decay);
  }
  return decays;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("log_log_slope: need two equal-length samples");
  const int n = static_cast<int>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace gaw
