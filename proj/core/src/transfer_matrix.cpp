#include "gaw/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gaw {

namespace {

constexpr Complex I{0.0, 1.0};

Eigen::Matrix2cd scattering_block(double xi) {
  Eigen::Matrix2cd m;
  m << Complex(1.0, xi), Complex(0.0, xi), Complex(0.0, -xi), Complex(1.0, -xi);
  return m;
}

Eigen::Matrix2cd phase_link(double phi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(-I * phi);
  m(1, 1) = std::exp(I * phi);
  return m;
}

// Accumulated coupling amplitude squared, z^2 = sum_mm' sqrt(g g') e^{i(th+th')},
// whose half-argument fixes the atom's scattering phase origin.
double phase_origin(const AtomArray& array, int i) {
  const auto& points = array.atoms[i].points;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t m = 0; m < points.size(); ++m)
    for (std::size_t mp = 0; mp < points.size(); ++mp) {
      const double amp = std::sqrt(points[m].bare_decay * points[mp].bare_decay);
      const double sum = phase_delay(points[m], array.reference_frequency, array.group_velocity) +
                         phase_delay(points[mp], array.reference_frequency, array.group_velocity);
      re += amp * std::cos(sum);
      im += amp * std::sin(sum);
    }
  return 0.5 * std::atan2(im, re);
}

}  // namespace

AtomBlock atom_block(const AtomArray& array, int i, double delta) {
  if (i < 0 || i >= static_cast<int>(array.atoms.size()))
    throw std::out_of_range("atom_block: atom index out of range");
  const auto [lamb_shift, effective_decay] = single_atom_characteristics(array, i);

  double total = 0.0;
  for (const auto& p : array.atoms[i].points) total += p.bare_decay;

  AtomBlock block;
  block.coupled = effective_decay > 1e-12 * std::max(total, 1.0);
  if (!block.coupled) {
    block.xi = 0.0;
    block.alpha = 0.0;
    block.matrix = Eigen::Matrix2cd::Identity();
    return block;
  }

  const double atom_delta =
      delta - (array.atoms[i].frequency - array.reference_frequency) - lamb_shift;
  if (std::abs(atom_delta) < 1e-12 * std::max(total, 1.0)) {
    std::ostringstream msg;
    msg << "atom_block: probe sits exactly on the dressed resonance of atom " << i
        << " (lamb shift " << lamb_shift << "); transfer matrix diverges";
    throw std::runtime_error(msg.str());
  }
  block.xi = effective_decay / (2.0 * atom_delta);
  block.alpha = phase_origin(array, i);
  block.matrix = scattering_block(block.xi);
  return block;
}

std::pair<Complex, Complex> cascade_scatter(const AtomArray& array, double delta) {
  validate(array);
  if (classify_configuration(array) != Configuration::Separate)
    throw std::invalid_argument("cascade_scatter: array must be separate (non-overlapping atoms)");

  const int n = static_cast<int>(array.atoms.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return array.atoms[a].points.front().position < array.atoms[b].points.front().position;
  });

  std::vector<AtomBlock> blocks(n);
  std::vector<double> alpha(n);
  for (int k = 0; k < n; ++k) {
    blocks[k] = atom_block(array, order[k], delta);
    alpha[k] = blocks[k].coupled ? blocks[k].alpha : (k > 0 ? alpha[k - 1] : 0.0);
  }

  Eigen::Matrix2cd m = blocks[0].matrix;
  for (int k = 1; k < n; ++k)
    m = m * phase_link(alpha[k] - alpha[k - 1]) * blocks[k].matrix;

  const Complex t = std::exp(I * (alpha[0] - alpha[n - 1])) / m(0, 0);
  const Complex r = std::exp(2.0 * I * alpha[0]) * m(1, 0) / m(0, 0);
  return {t, r};
}

ScatteringResult cascade_scatter_result(const AtomArray& array, double delta) {
  const auto [t, r] = cascade_scatter(array, delta);
  ScatteringResult result;
  result.t = t;
  result.r = r;
  result.T = std::norm(t);
  result.R = std::norm(r);
  return result;
}

double chebyshev_u(int n, double y) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: order must be >= 0");
  if (n == 0) return 1.0;

  // Near the edges |y| = 1 the closed forms are 0/0; the recurrence is exact
  // there and stays accurate in a neighborhood.
  if (std::abs(std::abs(y) - 1.0) < 1e-8) {
    double prev = 1.0;
    double cur = 2.0 * y;
    for (int k = 2; k <= n; ++k) {
      const double next = 2.0 * y * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  if (std::abs(y) < 1.0) {
    const double theta = std::acos(y);
    return std::sin((n + 1) * theta) / std::sin(theta);
  }
  const double sign = y < 0.0 && n % 2 == 1 ? -1.0 : 1.0;
  const double eta = std::acosh(std::abs(y));
  return sign * std::sinh((n + 1) * eta) / std::sinh(eta);
}

PeriodicCell periodic_cell(double xi, double phi) {
  PeriodicCell cell;
  cell.xi = xi;
  cell.phi = phi;
  cell.y = std::cos(phi) + xi * std::sin(phi);
  cell.cell = scattering_block(xi) * phase_link(phi);
  return cell;
}

std::pair<double, double> periodic_reflectance(int n_atoms, double xi, double y) {
  if (n_atoms < 1) throw std::invalid_argument("periodic_reflectance: need at least one atom");
  const double u = chebyshev_u(n_atoms - 1, y);
  const double q = xi * xi * u * u;
  return {1.0 / (1.0 + q), q / (1.0 + q)};
}

std::pair<Complex, Complex> closed_form_scatter(int n_atoms, int m_points, double theta,
                                                double gamma, double delta) {
  if (n_atoms < 1 || m_points < 1)
    throw std::invalid_argument("closed_form_scatter: counts must be positive");
  if (gamma < 0.0) throw std::invalid_argument("closed_form_scatter: gamma must be >= 0");

  // Lattice characteristics in closed form (half-angle form is stable).
  const double half = std::sin(0.5 * theta);
  double effective_decay;
  double lamb_shift;
  if (std::abs(half) < 1e-9) {
    effective_decay = gamma * m_points * m_points;
    lamb_shift = 0.0;
  } else {
    const double ratio = std::sin(0.5 * m_points * theta) / half;
    effective_decay = gamma * ratio * ratio;
    lamb_shift = 0.25 * gamma * (m_points * std::sin(theta) - std::sin(m_points * theta)) /
                 (half * half);
  }

  const double phi = m_points * theta;
  double xi = 0.0;
  if (effective_decay > 1e-12 * gamma * m_points * m_points) {
    if (std::abs(delta - lamb_shift) < 1e-12 * std::max(gamma, 1.0))
      throw std::runtime_error(
          "closed_form_scatter: probe sits exactly on the dressed lattice resonance; "
          "transfer matrix diverges");
    xi = effective_decay / (2.0 * (delta - lamb_shift));
  }
  const double y = std::cos(phi) + xi * std::sin(phi);

  const double u1 = chebyshev_u(n_atoms - 1, y);
  const double u2 = n_atoms >= 2 ? chebyshev_u(n_atoms - 2, y) : 0.0;
  const Complex m11 = u1 * Complex(1.0, xi) - u2 * std::exp(I * phi);
  const Complex m21 = Complex(0.0, -xi) * u1;

  // Phase origin of the first atom: z^2 = gamma (sum_m e^{i m theta})^2.
  Complex z{0.0, 0.0};
  for (int m = 0; m < m_points; ++m) z += std::exp(I * (m * theta));
  const Complex z2 = z * z;
  const double alpha1 =
      std::abs(z2) > 0.0 ? 0.5 * std::atan2(z2.imag(), z2.real()) : 0.0;

  const Complex t = std::exp(-I * ((n_atoms - 1) * phi)) / m11;
  const Complex r = std::exp(2.0 * I * alpha1) * m21 / m11;
  return {t, r};
}

ScatteringResult closed_form_scatter_result(int n_atoms, int m_points, double theta, double gamma,
                                            double delta) {
  const auto [t, r] = closed_form_scatter(n_atoms, m_points, theta, gamma, delta);
  ScatteringResult result;
  result.t = t;
  result.r = r;
  result.T = std::norm(t);
  result.R = std::norm(r);
  return result;
}

}  // namespace gaw
