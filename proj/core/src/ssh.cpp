#include "gaw/ssh.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaw {

namespace {

constexpr Complex I{0.0, 1.0};

}  // namespace

void validate(const SshSpec& spec) {
  if (spec.n_atoms < 2 || spec.n_atoms % 2 != 0)
    throw std::invalid_argument("ssh spec: n_atoms must be even and >= 2");
  if (!(spec.phi1 > 0.0) || !(spec.phi2 > 0.0))
    throw std::invalid_argument("ssh spec: phi1 and phi2 must be positive");
  if (!(spec.phi1 + spec.phi2 < pi))
    throw std::invalid_argument(
        "ssh spec: phi1 + phi2 must stay below pi for a nearest-neighbor chain");
  if (spec.epsilon < 0.0 || !(spec.epsilon < pi - spec.phi1))
    throw std::invalid_argument("ssh spec: epsilon must lie in [0, pi - phi1)");
  if (!(spec.gamma > 0.0)) throw std::invalid_argument("ssh spec: gamma must be positive");
  if (!(spec.omega_a > 0.0)) throw std::invalid_argument("ssh spec: omega_a must be positive");
}

AtomArray build_ssh_probe_array(const SshSpec& spec) {
  validate(spec);
  AtomArray array;
  array.reference_frequency = spec.omega_a;
  array.group_velocity = 1.0;
  array.atoms.resize(spec.n_atoms);

  // Left phase of each atom: consecutive intra-atom intervals of pi
  // interleaved with gaps that subtract phi1/phi2 alternately.
  double left = 0.0;
  for (int i = 0; i < spec.n_atoms; ++i) {
    GiantAtom& atom = array.atoms[i];
    atom.frequency = spec.omega_a;
    const double first = i == 0 ? spec.epsilon : left;
    atom.points = {{first / spec.omega_a, spec.gamma}, {(left + pi) / spec.omega_a, spec.gamma}};
    left += pi - (i % 2 == 0 ? spec.phi1 : spec.phi2);
  }
  // Cancel the first atom's Lamb shift so the chain stays uniform.
  array.atoms[0].frequency = spec.omega_a - spec.gamma * std::sin(spec.epsilon);
  validate(array);
  return array;
}

SshBands ssh_bands(double j1, double j2, double k) {
  SshBands bands;
  bands.e_plus = std::sqrt(j1 * j1 + j2 * j2 + 2.0 * j1 * j2 * std::cos(k));
  bands.e_minus = -bands.e_plus;
  bands.bandwidth = 2.0 * (j1 + j2);
  bands.gap = 2.0 * std::abs(j1 - j2);
  return bands;
}

EdgeModel edge_state_model(const SshSpec& spec) {
  validate(spec);
  const double j1 = spec.gamma * std::sin(spec.phi1);
  const double j2 = spec.gamma * std::sin(spec.phi2);
  const double mu = j1 / j2;
  if (mu >= 1.0) {
    std::ostringstream msg;
    msg << "edge_state_model: J1/J2 = " << mu
        << " >= 1 is the non-topological phase; no edge states exist";
    throw std::runtime_error(msg.str());
  }

  const int n = spec.n_atoms;
  const int cells = n / 2;
  EdgeModel model;
  model.mu = mu;
  model.J = j2 * (mu * mu - 1.0) * std::pow(-mu, cells);
  const double gamma_eff_1 = 2.0 * spec.gamma * (1.0 - std::cos(spec.epsilon));
  model.Gamma_L = (1.0 - mu * mu) * gamma_eff_1;
  model.shallow_gap = 2.0 * std::abs(j1 - j2) < 4.0 * std::abs(model.J);

  // Exponentially localized edge states on the two sublattices.
  model.psi_L = Eigen::VectorXd::Zero(n);
  model.psi_R = Eigen::VectorXd::Zero(n);
  for (int c = 0; c < cells; ++c) {
    const double amp = std::pow(-mu, c);
    model.psi_L(2 * c) = amp;          // sites 1, 3, 5, ... (1-based odd)
    model.psi_R(n - 1 - 2 * c) = amp;  // sites N, N-2, ... (1-based even)
  }
  model.psi_L.normalize();
  model.psi_R.normalize();
  return model;
}

std::string to_string(GapRegime regime) {
  return regime == GapRegime::ATS ? "ATS" : "EIT";
}

GapSpectrum gap_spectrum_approx(double J, double gamma_L, double epsilon, double delta) {
  if (!(gamma_L > 0.0))
    throw std::invalid_argument("gap_spectrum_approx: gamma_L must be positive");

  GapSpectrum out;
  const double disc = 16.0 * J * J - gamma_L * gamma_L;
  out.regime = disc > 0.0 ? GapRegime::ATS : GapRegime::EIT;
  const Complex root = disc >= 0.0 ? Complex(std::sqrt(disc), 0.0)
                                   : Complex(0.0, std::sqrt(-disc));
  out.z_plus = 0.25 * (-I * gamma_L + root);
  out.z_minus = 0.25 * (-I * gamma_L - root);

  const Complex den = delta * Complex(delta, 0.5 * gamma_L) - J * J;
  out.t = (delta * delta - J * J) / den;
  out.r = I * (0.5 * gamma_L) * delta * std::exp(I * epsilon) / den;

  const Complex sum = out.z_plus + out.z_minus;
  const Complex diff = out.z_plus - out.z_minus;
  out.eta_plus = sum * out.z_plus / diff;
  out.eta_minus = sum * out.z_minus / -diff;
  out.eta_r_plus = -std::exp(I * epsilon) * out.eta_plus;
  out.eta_r_minus = -std::exp(I * epsilon) * out.eta_minus;
  return out;
}

}  // namespace gaw
