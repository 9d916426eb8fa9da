#include "gaw/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaw {

namespace {

// Phase of point m of atom i pinned at the reference frequency.
double pinned_phase(const AtomArray& array, int i, int m) {
  const CouplingPoint& p = array.atoms[i].points[m];
  return phase_delay(p, array.reference_frequency, array.group_velocity);
}

void check_index(const AtomArray& array, int i, const char* who) {
  if (i < 0 || i >= static_cast<int>(array.atoms.size()))
    throw std::out_of_range(std::string(who) + ": atom index out of range");
}

}  // namespace

double phase_delay(const CouplingPoint& point, double omega, double group_velocity) {
  if (group_velocity <= 0.0)
    throw std::invalid_argument("phase_delay: group velocity must be positive");
  return omega * point.position / group_velocity;
}

double probe_phase(const AtomArray& array, int i, int m, double delta) {
  const CouplingPoint& p = array.atoms[i].points[m];
  const double omega = array.regime == Regime::Markovian
                           ? array.reference_frequency
                           : array.reference_frequency + delta;
  return phase_delay(p, omega, array.group_velocity);
}

void validate(const AtomArray& array) {
  if (array.atoms.empty())
    throw std::invalid_argument("validate: array has no atoms");
  if (array.group_velocity <= 0.0)
    throw std::invalid_argument("validate: group velocity must be positive");
  if (array.reference_frequency <= 0.0)
    throw std::invalid_argument("validate: reference frequency must be positive");
  for (std::size_t i = 0; i < array.atoms.size(); ++i) {
    const GiantAtom& atom = array.atoms[i];
    if (atom.points.empty())
      throw std::invalid_argument("validate: atom " + std::to_string(i) +
                                  " has no coupling points");
    if (!std::isfinite(atom.frequency))
      throw std::invalid_argument("validate: atom " + std::to_string(i) +
                                  " has a non-finite frequency");
    for (std::size_t m = 0; m < atom.points.size(); ++m) {
      if (atom.points[m].bare_decay < 0.0)
        throw std::invalid_argument("validate: atom " + std::to_string(i) +
                                    " has a negative bare decay");
      if (m > 0 && atom.points[m].position < atom.points[m - 1].position)
        throw std::invalid_argument("validate: atom " + std::to_string(i) +
                                    " has decreasing point positions");
    }
  }
}

std::pair<double, double> single_atom_characteristics(const AtomArray& array, int i) {
  check_index(array, i, "single_atom_characteristics");
  const auto& points = array.atoms[i].points;
  double lamb = 0.0;
  double decay = 0.0;
  for (std::size_t m = 0; m < points.size(); ++m) {
    const double thm = pinned_phase(array, i, static_cast<int>(m));
    for (std::size_t mp = 0; mp < points.size(); ++mp) {
      const double thmp = pinned_phase(array, i, static_cast<int>(mp));
      const double root = std::sqrt(points[m].bare_decay * points[mp].bare_decay);
      lamb += 0.5 * root * std::sin(std::abs(thm - thmp));
      decay += root * std::cos(thm - thmp);
    }
  }
  return {lamb, decay};
}

std::pair<double, double> pair_characteristics(const AtomArray& array, int i, int j) {
  check_index(array, i, "pair_characteristics");
  check_index(array, j, "pair_characteristics");
  if (i == j)
    throw std::invalid_argument(
        "pair_characteristics: i == j; use single_atom_characteristics");
  const auto& pi_ = array.atoms[i].points;
  const auto& pj = array.atoms[j].points;
  double g = 0.0;
  double coll = 0.0;
  for (std::size_t m = 0; m < pi_.size(); ++m) {
    const double thm = pinned_phase(array, i, static_cast<int>(m));
    for (std::size_t mp = 0; mp < pj.size(); ++mp) {
      const double thmp = pinned_phase(array, j, static_cast<int>(mp));
      const double root = std::sqrt(pi_[m].bare_decay * pj[mp].bare_decay);
      g += 0.5 * root * std::sin(std::abs(thm - thmp));
      coll += root * std::cos(thm - thmp);
    }
  }
  return {g, coll};
}

Characteristics characteristics(const AtomArray& array) {
  const int n = static_cast<int>(array.atoms.size());
  Characteristics chi;
  chi.lamb_shift.resize(n);
  chi.effective_decay.resize(n);
  chi.exchange = Eigen::MatrixXd::Zero(n, n);
  chi.collective_decay = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto [lamb, decay] = single_atom_characteristics(array, i);
    chi.lamb_shift(i) = lamb;
    chi.effective_decay(i) = decay;
    chi.collective_decay(i, i) = decay;
    for (int j = i + 1; j < n; ++j) {
      const auto [g, coll] = pair_characteristics(array, i, j);
      chi.exchange(i, j) = chi.exchange(j, i) = g;
      chi.collective_decay(i, j) = chi.collective_decay(j, i) = coll;
    }
  }
  return chi;
}

namespace {

AtomArray from_phases(const std::vector<std::vector<double>>& phases, double gamma,
                      double omega_a) {
  AtomArray array;
  array.reference_frequency = omega_a;
  array.atoms.reserve(phases.size());
  for (const auto& atom_phases : phases) {
    GiantAtom atom;
    atom.frequency = omega_a;
    for (double theta : atom_phases)
      atom.points.push_back({theta * array.group_velocity / omega_a, gamma});
    array.atoms.push_back(std::move(atom));
  }
  validate(array);
  return array;
}

}  // namespace

AtomArray build_separate_array(int n_atoms, int m_points, double theta, double gamma,
                               double omega_a) {
  if (n_atoms < 1 || m_points < 1)
    throw std::invalid_argument("build_separate_array: need at least one atom and point");
  if (gamma <= 0.0)
    throw std::invalid_argument("build_separate_array: gamma must be positive");
  std::vector<std::vector<double>> phases(n_atoms);
  for (int i = 0; i < n_atoms; ++i)
    for (int m = 0; m < m_points; ++m)
      phases[i].push_back((i * m_points + m) * theta);
  return from_phases(phases, gamma, omega_a);
}

AtomArray build_braided_array(int n_atoms, double theta, double gamma, double omega_a) {
  if (n_atoms < 2)
    throw std::invalid_argument("build_braided_array: need at least two atoms");
  if (gamma <= 0.0)
    throw std::invalid_argument("build_braided_array: gamma must be positive");
  std::vector<std::vector<double>> phases(n_atoms);
  for (int i = 0; i < n_atoms; ++i)
    phases[i] = {2.0 * i * theta, (2.0 * i + 3.0) * theta};
  return from_phases(phases, gamma, omega_a);
}

AtomArray build_nested_array(int n_atoms, double theta, double gamma, double omega_a) {
  if (n_atoms < 2)
    throw std::invalid_argument("build_nested_array: need at least two atoms");
  if (gamma <= 0.0)
    throw std::invalid_argument("build_nested_array: gamma must be positive");
  std::vector<std::vector<double>> phases(n_atoms);
  for (int i = 0; i < n_atoms; ++i)
    phases[i] = {i * theta, (2.0 * n_atoms - 1.0 - i) * theta};
  return from_phases(phases, gamma, omega_a);
}

Configuration classify_configuration(const AtomArray& array) {
  validate(array);
  const int n = static_cast<int>(array.atoms.size());
  struct Extent {
    double lo, hi;
  };
  std::vector<Extent> ext(n);
  for (int i = 0; i < n; ++i) {
    ext[i].lo = array.atoms[i].points.front().position;
    ext[i].hi = array.atoms[i].points.back().position;
  }
  bool contained = false;
  bool partial = false;
  bool overlapping = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = ext[i];
      const auto& b = ext[j];
      if (a.hi <= b.lo || b.hi <= a.lo) continue;  // disjoint (touching allowed)
      overlapping = true;
      if (a.lo < b.lo && b.hi < a.hi)
        contained = true;  // a strictly contains b
      else if (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi)
        partial = true;  // proper crossing
    }
  }
  if (!overlapping) return Configuration::Separate;
  if (contained && !partial) return Configuration::Nested;
  if (partial && !contained) return Configuration::Braided;
  return Configuration::Mixed;
}

std::string to_string(Configuration c) {
  switch (c) {
    case Configuration::Separate: return "separate";
    case Configuration::Braided: return "braided";
    case Configuration::Nested: return "nested";
    case Configuration::Mixed: return "mixed";
  }
  return "unknown";
}

std::string to_string(Regime r) {
  return r == Regime::Markovian ? "markovian" : "nonmarkovian";
}

}  // namespace gaw
