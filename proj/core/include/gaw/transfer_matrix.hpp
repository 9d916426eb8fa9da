#pragma once

#include "gaw/model.hpp"
#include "gaw/scattering.hpp"

#include <utility>

namespace gaw {

// Per-atom 2x2 transfer block [[1+ix, ix], [-ix, 1-ix]] with the atom's
// effective-position phase alpha.
struct AtomBlock {
  double xi = 0.0;
  double alpha = 0.0;
  bool coupled = true;  // false when Gamma_eff vanishes (block is identity)
  Eigen::Matrix2cd matrix;
};

// Block of atom i at detuning delta. Throws std::runtime_error at the
// pole delta = (omega_i - omega_a) + Delta_L,i.
AtomBlock atom_block(const AtomArray& array, int i, double delta);

// Cascade the per-atom blocks through phase propagators. Only valid for
// Separate configurations in the Markovian regime. Matches the general
// solver including the overall phases of t and r.
std::pair<Complex, Complex> cascade_scatter(const AtomArray& array, double delta);

ScatteringResult cascade_scatter_result(const AtomArray& array, double delta);

// Chebyshev polynomial of the second kind, valid for all real y.
double chebyshev_u(int n, double y);

// Unit cell T*T_phi of a periodic lattice with per-atom parameter xi and
// lattice propagation phase phi.
struct PeriodicCell {
  double xi = 0.0;
  double phi = 0.0;
  double y = 0.0;  // cos(phi) + xi sin(phi) = Tr(cell)/2
  Eigen::Matrix2cd cell;
};

PeriodicCell periodic_cell(double xi, double phi);

// Closed form T = 1/(1 + xi^2 U_{N-1}(y)^2), R = 1 - T.
std::pair<double, double> periodic_reflectance(int n_atoms, double xi, double y);

// Full complex amplitudes for the maximum-symmetry lattice
// (identical atoms, M points each, uniform spacing theta), phased
// consistently with the general solver. Throws at the xi pole.
std::pair<Complex, Complex> closed_form_scatter(int n_atoms, int m_points, double theta,
                                                double gamma, double delta);

ScatteringResult closed_form_scatter_result(int n_atoms, int m_points, double theta,
                                            double gamma, double delta);

}  // namespace gaw
