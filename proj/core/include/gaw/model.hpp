#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace gaw {

inline constexpr double pi = 3.14159265358979323846;

enum class Regime { Markovian, NonMarkovian };
enum class Configuration { Separate, Braided, Nested, Mixed };

// One connection between an atom and the waveguide. The position is a
// length, so the phase delay picked up at frequency w is w*position/v_g.
// Generated layouts use position = theta*v_g/omega_a, which makes the
// stored number equal the phase delay at the reference frequency when
// v_g = omega_a = 1.
struct CouplingPoint {
  double position = 0.0;
  double bare_decay = 1.0;  // gamma_im, in units of gamma

  bool operator==(const CouplingPoint&) const = default;
};

struct GiantAtom {
  double frequency = 1.0;  // omega_i, absolute
  std::vector<CouplingPoint> points;

  bool operator==(const GiantAtom&) const = default;
};

struct AtomArray {
  std::vector<GiantAtom> atoms;
  double group_velocity = 1.0;
  double reference_frequency = 1.0;  // omega_a, the frequency origin
  Regime regime = Regime::Markovian;

  bool operator==(const AtomArray&) const = default;
};

// The four Markovian characteristic quantities of an array.
struct Characteristics {
  Eigen::VectorXd lamb_shift;        // Delta_L,i
  Eigen::VectorXd effective_decay;   // Gamma_eff,i
  Eigen::MatrixXd exchange;          // g_ij, zero diagonal
  Eigen::MatrixXd collective_decay;  // Gamma_coll,ij; diagonal holds Gamma_eff,i
};

// Unwrapped phase delay omega*x/v_g of a single coupling point.
double phase_delay(const CouplingPoint& point, double omega, double group_velocity);

// Phase of coupling point m of atom i seen by a probe at detuning delta
// from the reference frequency. Markovian arrays pin phases at the
// reference frequency; non-Markovian arrays evaluate them at the probe.
double probe_phase(const AtomArray& array, int i, int m, double delta);

// Throws std::invalid_argument if the array violates a structural
// invariant (empty atoms, negative decay, decreasing point order, ...).
void validate(const AtomArray& array);

// (Delta_L,i, Gamma_eff,i) of atom i, phases pinned at the reference.
std::pair<double, double> single_atom_characteristics(const AtomArray& array, int i);

// (g_ij, Gamma_coll,ij) for i != j, phases pinned at the reference.
std::pair<double, double> pair_characteristics(const AtomArray& array, int i, int j);

Characteristics characteristics(const AtomArray& array);

// Identical atoms, M equally spaced points each, lattice phase M*theta.
AtomArray build_separate_array(int n_atoms, int m_points, double theta, double gamma,
                               double omega_a = 1.0);

// Two-point atoms with interleaved neighbors: neighboring coupling points
// are spaced by theta and each atom's own points are 3*theta apart.
AtomArray build_braided_array(int n_atoms, double theta, double gamma,
                              double omega_a = 1.0);

// Two-point atoms enclosing one another: point order 1a,2a,...,Na,Nb,...,1b
// with uniform spacing theta; atom i's own separation is (2(N-i)+1)*theta.
AtomArray build_nested_array(int n_atoms, double theta, double gamma,
                             double omega_a = 1.0);

// Interval-overlap analysis of the atoms' coupling-point extents.
Configuration classify_configuration(const AtomArray& array);

std::string to_string(Configuration c);
std::string to_string(Regime r);

}  // namespace gaw
