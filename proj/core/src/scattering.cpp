#include "gaw/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gaw {

namespace {

constexpr Complex I{0.0, 1.0};

double decay_scale(const AtomArray& array) {
  double scale = 0.0;
  for (const auto& atom : array.atoms)
    for (const auto& p : atom.points) scale = std::max(scale, p.bare_decay);
  return scale > 0.0 ? scale : 1.0;
}

std::string complex_str(Complex z) {
  std::ostringstream out;
  out << "(" << z.real() << ", " << z.imag() << ")";
  return out.str();
}

}  // namespace

SystemMatrices build_system_matrices(const AtomArray& array, double delta) {
  validate(array);
  const int n = static_cast<int>(array.atoms.size());
  SystemMatrices sys;
  sys.reference_frequency = array.reference_frequency;
  sys.probe_frequency = array.reference_frequency + delta;
  sys.drive.resize(n);
  sys.detuned.resize(n, n);

  // Phases per point at the regime's evaluation frequency.
  std::vector<std::vector<double>> phases(n);
  for (int i = 0; i < n; ++i) {
    const auto& points = array.atoms[i].points;
    phases[i].resize(points.size());
    for (std::size_t m = 0; m < points.size(); ++m)
      phases[i][m] = probe_phase(array, i, static_cast<int>(m), delta);
  }

  for (int i = 0; i < n; ++i) {
    const auto& pi_ = array.atoms[i].points;
    Complex v{0.0, 0.0};
    for (std::size_t m = 0; m < pi_.size(); ++m)
      v += std::sqrt(pi_[m].bare_decay / 2.0) * std::exp(I * phases[i][m]);
    sys.drive(i) = v;

    // Fill the upper triangle and mirror it so H_ij == H_ji holds exactly.
    for (int j = i; j < n; ++j) {
      const auto& pj = array.atoms[j].points;
      Complex sum{0.0, 0.0};
      for (std::size_t m = 0; m < pi_.size(); ++m)
        for (std::size_t mp = 0; mp < pj.size(); ++mp)
          sum += std::sqrt(pi_[m].bare_decay * pj[mp].bare_decay) *
                 std::exp(I * std::abs(phases[i][m] - phases[j][mp]));
      Complex h = -0.5 * I * sum;
      if (i == j) h += array.atoms[i].frequency - array.reference_frequency;
      sys.detuned(i, j) = h;
      sys.detuned(j, i) = h;
    }
  }
  sys.hamiltonian = sys.detuned;
  sys.hamiltonian.diagonal().array() += array.reference_frequency;
  return sys;
}

ScatteringResult scatter(const SystemMatrices& matrices, double delta) {
  const int n = static_cast<int>(matrices.drive.size());
  Eigen::MatrixXcd A = -matrices.detuned;
  A.diagonal().array() += delta;

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  Eigen::VectorXcd f = lu.solve(matrices.drive);

  // A consistent rank-deficient system still "solves" cleanly, so inspect the
  // pivots as well as the residual.
  bool singular = !f.allFinite();
  if (!singular) {
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pmax = pivots.maxCoeff();
    singular = pmax == 0.0 || pivots.minCoeff() < 1e-12 * pmax;
  }
  if (!singular) {
    const double rhs = std::max(matrices.drive.cwiseAbs().maxCoeff(), 1e-300);
    const double residual = (A * f - matrices.drive).cwiseAbs().maxCoeff();
    singular = residual > 1e-6 * rhs;
  }
  if (singular) {
    // Name the collective mode the probe hit.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(matrices.detuned, false);
    Complex offender = eig.eigenvalues()(0);
    for (int k = 1; k < n; ++k)
      if (std::abs(eig.eigenvalues()(k) - delta) < std::abs(offender - delta))
        offender = eig.eigenvalues()(k);
    std::ostringstream msg;
    msg << "scatter: singular system at delta=" << delta
        << "; collective mode at detuning " << complex_str(offender)
        << " resonates exactly";
    throw std::runtime_error(msg.str());
  }

  ScatteringResult result;
  result.f = f;
  result.t = 1.0 - I * matrices.drive.dot(f);          // V^dag f
  result.r = -I * (matrices.drive.transpose() * f)(0);  // V^T f
  result.T = std::norm(result.t);
  result.R = std::norm(result.r);
  return result;
}

ScatteringResult scatter(const AtomArray& array, double delta) {
  return scatter(build_system_matrices(array, delta), delta);
}

std::vector<CollectiveMode> collective_modes(const AtomArray& array) {
  // Modes belong to the frequency-independent (Markovian-pinned) matrices.
  AtomArray pinned = array;
  pinned.regime = Regime::Markovian;
  const SystemMatrices sys = build_system_matrices(pinned, 0.0);
  const int n = static_cast<int>(sys.drive.size());

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(sys.detuned, true);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("collective_modes: eigendecomposition failed");
  Eigen::VectorXcd lambda = eig.eigenvalues();
  Eigen::MatrixXcd U = eig.eigenvectors();

  // Cluster eigenvalues that coincide within the degeneracy radius.
  const double radius = 1e-8 * decay_scale(array);
  std::vector<int> cluster(n);
  std::iota(cluster.begin(), cluster.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::abs(lambda(a) - lambda(b)) < radius) {
        const int from = std::max(cluster[a], cluster[b]);
        const int to = std::min(cluster[a], cluster[b]);
        for (int k = 0; k < n; ++k)
          if (cluster[k] == from) cluster[k] = to;
      }

  // H is complex-symmetric, so biorthonormalization reduces to normalizing
  // the bilinear form u^T u. Within a degenerate cluster the eigenvectors
  // are first re-orthogonalized under that form; failure of the form to be
  // invertible on the cluster is an exceptional point.
  const auto bilinear = [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return Complex((a.transpose() * b)(0));
  };
  for (int c = 0; c < n; ++c) {
    std::vector<int> members;
    for (int k = 0; k < n; ++k)
      if (cluster[k] == c) members.push_back(k);
    if (members.empty()) continue;
    for (std::size_t a = 0; a < members.size(); ++a) {
      Eigen::VectorXcd w = U.col(members[a]);
      for (std::size_t b = 0; b < a; ++b) {
        const Eigen::VectorXcd& prev = U.col(members[b]);
        w -= bilinear(prev, w) * prev;  // prev already normalized below
      }
      w.normalize();
      const Complex norm2 = bilinear(w, w);
      if (std::abs(norm2) < 1e-10) {
        std::ostringstream msg;
        msg << "collective_modes: degenerate spectrum at eigenvalue "
            << complex_str(lambda(members[a]) + array.reference_frequency)
            << " (cluster of " << members.size()
            << ") is an exceptional point; modes are not biorthogonalizable";
        throw std::runtime_error(msg.str());
      }
      U.col(members[a]) = w / std::sqrt(norm2);
    }
  }

  std::vector<CollectiveMode> modes(n);
  for (int k = 0; k < n; ++k) {
    CollectiveMode& mode = modes[k];
    mode.energy_detuning = lambda(k).real();
    mode.decay = -2.0 * lambda(k).imag();
    mode.eigenvalue = lambda(k) + array.reference_frequency;
    mode.right_vec = U.col(k);
    mode.left_vec = U.col(k).conjugate();
    const Complex vu = sys.drive.dot(mode.right_vec);              // V^dag u
    const Complex uv = (mode.right_vec.transpose() * sys.drive)(0);  // u^T V
    mode.weight_t = -I * vu * uv;
    mode.weight_r = -I * uv * uv;
  }
  std::sort(modes.begin(), modes.end(), [](const CollectiveMode& a, const CollectiveMode& b) {
    if (a.energy_detuning != b.energy_detuning) return a.energy_detuning < b.energy_detuning;
    return a.decay < b.decay;
  });
  return modes;
}

std::pair<Complex, Complex> reconstruct_from_modes(const std::vector<CollectiveMode>& modes,
                                                   double delta) {
  Complex t{1.0, 0.0};
  Complex r{0.0, 0.0};
  for (const auto& mode : modes) {
    const Complex den(delta - mode.energy_detuning, 0.5 * mode.decay);
    t += mode.weight_t / den;
    r += mode.weight_r / den;
  }
  return {t, r};
}

Complex mode_component(const CollectiveMode& mode, double delta) {
  return mode.weight_r / Complex(delta - mode.energy_detuning, 0.5 * mode.decay);
}

double biorthonormality_residual(const std::vector<CollectiveMode>& modes) {
  double residual = 0.0;
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = 0; b < modes.size(); ++b) {
      const Complex overlap = modes[a].left_vec.dot(modes[b].right_vec);
      const double target = a == b ? 1.0 : 0.0;
      residual = std::max(residual, std::abs(overlap - target));
    }
  return residual;
}

}  // namespace gaw
