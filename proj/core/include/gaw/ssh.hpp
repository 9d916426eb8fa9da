#pragma once

#include "gaw/model.hpp"
#include "gaw/scattering.hpp"

#include <string>

namespace gaw {

// Alternating-phase chain of two-point atoms (intra-atom phase pi) whose
// decoherence-free couplings J1 = gamma sin(phi1), J2 = gamma sin(phi2)
// realize an SSH model. epsilon shifts the first atom's left point so the
// chain couples weakly to the waveguide.
struct SshSpec {
  int n_atoms = 16;  // even
  double phi1 = 0.2 * pi;
  double phi2 = 0.3 * pi;
  double epsilon = 0.0;
  double gamma = 1.0;
  double omega_a = 1.0;

  double beta() const { return phi2 - phi1; }
  bool operator==(const SshSpec&) const = default;
};

// Throws std::invalid_argument when the spec leaves the regime in which
// the construction gives a pure nearest-neighbor chain.
void validate(const SshSpec& spec);

// Probe chain: atom 1 at phases (epsilon, pi) with its frequency shifted
// by -gamma sin(epsilon) to cancel the Lamb shift; atoms i >= 2 dark.
AtomArray build_ssh_probe_array(const SshSpec& spec);

struct SshBands {
  double e_plus = 0.0;   // upper branch at K, relative to omega_a
  double e_minus = 0.0;  // lower branch at K
  double bandwidth = 0.0;  // 2(J1+J2)
  double gap = 0.0;        // 2|J1-J2|
};

SshBands ssh_bands(double j1, double j2, double k);

struct EdgeModel {
  double mu = 0.0;       // J1/J2
  double J = 0.0;        // effective edge-edge coupling
  double Gamma_L = 0.0;  // decay of the left edge state through atom 1
  Eigen::VectorXd psi_L;  // unit-normalized, odd sites
  Eigen::VectorXd psi_R;  // unit-normalized, even sites
  bool shallow_gap = false;  // set when gap < 4|J|: edge states not deep in the gap
};

// Hybridized edge-state model. Throws std::runtime_error("... non-topological
// phase ...") when mu >= 1.
EdgeModel edge_state_model(const SshSpec& spec);

enum class GapRegime { ATS, EIT };

std::string to_string(GapRegime regime);

// Three-level approximation of the in-gap spectrum with dressed poles Z+-
// and the Lorentzian weights of both channels.
struct GapSpectrum {
  Complex t;
  Complex r;
  GapRegime regime = GapRegime::EIT;
  Complex z_plus;
  Complex z_minus;
  Complex eta_plus;
  Complex eta_minus;
  Complex eta_r_plus;
  Complex eta_r_minus;
};

// Throws std::invalid_argument when gamma_L <= 0.
GapSpectrum gap_spectrum_approx(double J, double gamma_L, double epsilon, double delta);

}  // namespace gaw
