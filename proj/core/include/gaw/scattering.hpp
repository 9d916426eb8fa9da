#pragma once

#include "gaw/model.hpp"

#include <complex>
#include <vector>

namespace gaw {

using Complex = std::complex<double>;

// Drive vector and effective non-Hermitian Hamiltonian of the array.
// `hamiltonian` carries absolute frequencies on the diagonal; `detuned`
// is the same matrix with the reference frequency subtracted, assembled
// directly from frequency offsets so no large-number cancellation occurs.
struct SystemMatrices {
  Eigen::VectorXcd drive;        // V_i = sum_m sqrt(gamma_im/2) e^{i theta_im}
  Eigen::MatrixXcd hamiltonian;  // H_ij = w_i d_ij - (i/2) sum sqrt(g g') e^{i|th-th'|}
  Eigen::MatrixXcd detuned;      // H - omega_a I
  double probe_frequency = 0.0;
  double reference_frequency = 0.0;
};

struct ScatteringResult {
  Complex t;
  Complex r;
  Eigen::VectorXcd f;  // atomic excitation amplitudes, v_g = 1 units
  double T = 0.0;
  double R = 0.0;
};

// A collective mode of the effective Hamiltonian with its Lorentzian
// weights in the transmission/reflection decompositions.
struct CollectiveMode {
  Complex eigenvalue;            // lambda_n, absolute
  double energy_detuning = 0.0;  // Re lambda_n - omega_a
  double decay = 0.0;            // -2 Im lambda_n
  Eigen::VectorXcd right_vec;
  Eigen::VectorXcd left_vec;
  Complex weight_t;  // eta_n
  Complex weight_r;  // eta~_n
};

// Build V and H at detuning delta from the reference frequency. In the
// Markovian regime the matrices are delta-independent.
SystemMatrices build_system_matrices(const AtomArray& array, double delta = 0.0);

// Solve (omega I - H) f = V and form t, r, T, R. Throws std::runtime_error
// naming the resonant eigenvalue if the linear system is singular.
ScatteringResult scatter(const AtomArray& array, double delta);

// Same solve reusing prebuilt Markovian matrices (phases pinned).
ScatteringResult scatter(const SystemMatrices& matrices, double delta);

// Biorthonormal eigendecomposition of the Markovian-pinned Hamiltonian.
// Throws std::runtime_error("... degenerate spectrum ...") at exceptional
// points; degenerate but diagonalizable clusters are re-orthogonalized.
std::vector<CollectiveMode> collective_modes(const AtomArray& array);

// t = 1 + sum eta_n/(D - d_n + i G_n/2), r = sum eta~_n/(D - d_n + i G_n/2).
std::pair<Complex, Complex> reconstruct_from_modes(const std::vector<CollectiveMode>& modes,
                                                   double delta);

// One reflection channel L_n(delta) = eta~_n/(delta - d_n + i G_n/2).
Complex mode_component(const CollectiveMode& mode, double delta);

// max |left_m^dag right_n - delta_mn| over all mode pairs.
double biorthonormality_residual(const std::vector<CollectiveMode>& modes);

}  // namespace gaw
