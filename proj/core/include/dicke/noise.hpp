// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dicke/circuit.hpp"
#include "dicke/statevector.hpp"

namespace dicke {

class DensityMatrix {
 public:
  // Validates Hermiticity (1e-10), unit trace (1e-10) and eigenvalues >= -1e-9.
  DensityMatrix(int n, Eigen::MatrixXcd entries);

  static DensityMatrix pure(const StateVector& state);
  static DensityMatrix maximally_mixed(int n);

  int num_qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  int n_;
  Eigen::MatrixXcd m_;
};

struct ReadoutError {
  double p01 = 0.0;  // epsilon0 = P(read 1 | true 0)
  double p10 = 0.0;  // epsilon1 = P(read 0 | true 1)
  bool operator==(const ReadoutError&) const = default;
};

struct NoiseModel {
  double p1 = 0.0;  // depolarizing after every single-qubit gate
  double p2 = 0.0;  // two-qubit depolarizing after every CNOT
  // Empty: perfect readout. One entry: applies to every qubit. Otherwise one
  // entry per qubit.
  std::vector<ReadoutError> readout;

  static NoiseModel uniform(double p1, double p2, double eps);
  void validate() const;
  ReadoutError readout_for(int qubit, int n) const;
  bool operator==(const NoiseModel&) const = default;
};

class CalibrationMatrix {
 public:
  // Validates column-stochasticity (1e-12) and non-negativity.
  CalibrationMatrix(int n, Eigen::MatrixXd m);
  int num_qubits() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  int n_;
  Eigen::MatrixXd m_;
};

inline constexpr int kMaxNoisyQubits = 8;

// Starts from |0..0><0..0|. Readout error is not applied here; it belongs to
// the measurement step (apply_readout_noise).
DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise);

// Same evolution from an arbitrary initial state.
DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise, DensityMatrix rho);

Distribution measurement_distribution(const DensityMatrix& rho);

CalibrationMatrix build_calibration_matrix(const NoiseModel& noise, int n);

Distribution apply_readout_noise(const Distribution& dist, const CalibrationMatrix& cal);

struct MitigationResult {
  Distribution distribution;
  double clipped_mass = 0.0;  // total negative mass removed before renormalizing
};

// Throws std::domain_error when the calibration matrix is singular.
MitigationResult mitigate(const Distribution& observed, const CalibrationMatrix& cal);

}  // namespace dicke
