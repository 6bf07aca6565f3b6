// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// Left-multiplies rho by the gate's unitary (row operations).
void apply_left(Eigen::MatrixXcd& m, int n, const Gate& g) {
  const std::uint64_t tm = qubit_mask(n, g.target);
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (g.kind == GateKind::PauliX || g.kind == GateKind::CNot) {
    const std::uint64_t cm = g.control ? qubit_mask(n, *g.control) : 0;
    for (std::uint64_t i = 0; i < dim; ++i)
      if (!(i & tm) && (i & cm) == cm) m.row(i).swap(m.row(i | tm));
    return;
  }
  Complex m00, m01, m10, m11;
  if (g.kind == GateKind::RotY) {
    const double c = std::cos(*g.angle / 2), s = std::sin(*g.angle / 2);
    m00 = c; m01 = -s; m10 = s; m11 = c;
  } else if (g.kind == GateKind::Hadamard) {
    const double r = 1.0 / std::sqrt(2.0);
    m00 = r; m01 = r; m10 = r; m11 = -r;
  } else {
    m00 = 1; m01 = 0; m10 = 0; m11 = Complex(0, -1);
  }
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & tm) continue;
    const Eigen::RowVectorXcd r0 = m.row(i), r1 = m.row(i | tm);
    m.row(i) = m00 * r0 + m01 * r1;
    m.row(i | tm) = m10 * r0 + m11 * r1;
  }
}

void conjugate(Eigen::MatrixXcd& m, int n, const Gate& g) {
  apply_left(m, n, g);
  m.adjointInPlace();
  apply_left(m, n, g);  // U (U rho)^dagger = U rho U^dagger for Hermitian rho
}

// rho -> (1-p) rho + p (Tr_Q rho) (x) I_Q / 2^|Q| for the qubit set `mask`.
void depolarize(Eigen::MatrixXcd& m, std::uint64_t mask, double p) {
  if (p == 0.0) return;
  const auto dim = static_cast<std::uint64_t>(m.rows());
  const double weight = 1.0 / static_cast<double>(std::uint64_t{1} << std::popcount(mask));
  Eigen::MatrixXcd out = (1.0 - p) * m;
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      if ((i & mask) != (j & mask)) continue;
      Complex acc = 0;
      // Enumerate every assignment of the masked bits.
      std::uint64_t sub = 0;
      do {
        acc += m((i & ~mask) | sub, (j & ~mask) | sub);
        sub = (sub - mask) & mask;
      } while (sub != 0);
      out(i, j) += p * weight * acc;
    }
  }
  m = std::move(out);
}

}  // namespace

DensityMatrix::DensityMatrix(int n, Eigen::MatrixXcd entries) : n_(n), m_(std::move(entries)) {
  if (n <= 0 || n > 12) throw std::invalid_argument("density matrix qubit count out of range");
  const Eigen::Index d = Eigen::Index{1} << n;
  if (m_.rows() != d || m_.cols() != d) throw std::invalid_argument("density matrix is not 2^n square");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > 1e-10)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const StateVector& s) {
  Eigen::VectorXcd v(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) v(i) = s[i];
  return DensityMatrix(s.num_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  return DensityMatrix(n, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

NoiseModel NoiseModel::uniform(double p1, double p2, double eps) {
  return NoiseModel{p1, p2, {ReadoutError{eps, eps}}};
}

void NoiseModel::validate() const {
  if (!is_probability(p1) || !is_probability(p2))
    throw std::invalid_argument("gate error probabilities must lie in [0,1]");
  for (const auto& r : readout)
    if (!is_probability(r.p01) || !is_probability(r.p10))
      throw std::invalid_argument("readout error probabilities must lie in [0,1]");
}

ReadoutError NoiseModel::readout_for(int qubit, int n) const {
  if (readout.empty()) return {};
  if (readout.size() == 1) return readout.front();
  if (static_cast<int>(readout.size()) != n)
    throw std::invalid_argument("readout list has " + std::to_string(readout.size()) +
                                " entries for " + std::to_string(n) + " qubits");
  return readout[qubit];
}

CalibrationMatrix::CalibrationMatrix(int n, Eigen::MatrixXd m) : n_(n), m_(std::move(m)) {
  const Eigen::Index d = Eigen::Index{1} << n;
  if (m_.rows() != d || m_.cols() != d) throw std::invalid_argument("calibration matrix is not 2^n square");
  if (m_.minCoeff() < 0) throw std::invalid_argument("calibration matrix has negative entries");
  if (((m_.colwise().sum().array() - 1.0).abs() > 1e-12).any())
    throw std::invalid_argument("calibration matrix is not column-stochastic");
}

DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise, DensityMatrix rho) {
  noise.validate();
  const int n = circuit.num_qubits();
  if (n > kMaxNoisyQubits) throw std::length_error("run_noisy supports at most 8 qubits");
  if (rho.num_qubits() != n) throw std::invalid_argument("initial state size does not match circuit");
  Eigen::MatrixXcd m = rho.matrix();
  for (const Gate& g : circuit.gates()) {
    conjugate(m, n, g);
    if (g.kind == GateKind::CNot)
      depolarize(m, qubit_mask(n, g.target) | qubit_mask(n, *g.control), noise.p2);
    else
      depolarize(m, qubit_mask(n, g.target), noise.p1);
  }
  // Scrub accumulated rounding so the result passes the strict invariants.
  m = (m + m.adjoint()).eval() / 2.0;
  m /= m.trace().real();
  return DensityMatrix(n, std::move(m));
}

DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise) {
  if (circuit.num_qubits() > kMaxNoisyQubits)
    throw std::length_error("run_noisy supports at most 8 qubits");
  return run_noisy(circuit, noise, DensityMatrix::pure(StateVector(circuit.num_qubits())));
}

Distribution measurement_distribution(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  std::vector<double> p(m.rows());
  double sum = 0, clipped = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex d = m(i, i);
    if (std::abs(d.imag()) > 1e-9) throw std::domain_error("density matrix diagonal is not real");
    if (d.real() < 0) {
      clipped -= d.real();
      p[i] = 0;
    } else {
      p[i] = d.real();
    }
    sum += p[i];
  }
  if (clipped > 1e-9) throw std::domain_error("density matrix diagonal has negative entries");
  for (double& v : p) v /= sum;
  return Distribution(rho.num_qubits(), std::move(p));
}

CalibrationMatrix build_calibration_matrix(const NoiseModel& noise, int n) {
  noise.validate();
  if (n <= 0 || n > kMaxNoisyQubits) throw std::invalid_argument("calibration supports 1..8 qubits");
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(1, 1);
  for (int q = 0; q < n; ++q) {  // qubit 0 is the most significant factor
    const ReadoutError r = noise.readout_for(q, n);
    Eigen::Matrix2d c;
    c << 1 - r.p01, r.p10, r.p01, 1 - r.p10;
    Eigen::MatrixXd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        next.block<2, 2>(2 * i, 2 * j) = m(i, j) * c;
    m = std::move(next);
  }
  return CalibrationMatrix(n, std::move(m));
}

Distribution apply_readout_noise(const Distribution& dist, const CalibrationMatrix& cal) {
  if (dist.num_qubits() != cal.num_qubits()) throw std::invalid_argument("dimension mismatch");
  const Eigen::Map<const Eigen::VectorXd> p(dist.probs().data(), dist.size());
  const Eigen::VectorXd q = cal.matrix() * p;
  std::vector<double> out(q.data(), q.data() + q.size());
  double sum = 0;
  for (double& v : out) sum += v = std::max(v, 0.0);
  for (double& v : out) v /= sum;
  return Distribution(dist.num_qubits(), std::move(out));
}

MitigationResult mitigate(const Distribution& observed, const CalibrationMatrix& cal) {
  if (observed.num_qubits() != cal.num_qubits()) throw std::invalid_argument("dimension mismatch");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(cal.matrix());
  lu.setThreshold(1e-10);
  if (!lu.isInvertible()) throw std::domain_error("calibration matrix is singular");
  const Eigen::Map<const Eigen::VectorXd> p(observed.probs().data(), observed.size());
  const Eigen::VectorXd x = lu.solve(p);
  std::vector<double> out(x.size());
  double clipped = 0, sum = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) < 0) {
      clipped -= x(i);
      out[i] = 0;
    } else {
      out[i] = x(i);
    }
    sum += out[i];
  }
  if (!(sum > 0)) throw std::domain_error("mitigated distribution has no positive mass");
  for (double& v : out) v /= sum;
  return {Distribution(observed.num_qubits(), std::move(out)), clipped};
}

}  // namespace dicke
