// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <Eigen/Dense>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dicke/circuit.hpp"
#include "dicke/noise.hpp"
#include "dicke/statevector.hpp"

namespace dicke {

enum class PauliAxis { X, Y, Z };

struct PauliBasis {
  std::vector<PauliAxis> axes;  // axes[q] is measured on qubit q

  std::string to_string() const;  // e.g. "XZY"
  static PauliBasis from_string(const std::string& label);
  bool operator==(const PauliBasis&) const = default;
};

// All 3^n bases in lexicographic order of their labels.
std::vector<PauliBasis> all_bases(int n);

// Appends the basis change to `prep`: X -> H, Y -> Sdg then H, Z -> nothing.
std::vector<std::pair<PauliBasis, Circuit>> tomography_circuits(const Circuit& prep);

struct TomographyDataset {
  int n = 1;
  std::uint64_t shots = 0;  // 0 marks exact (infinite-shot) data
  std::map<std::string, Distribution> frequencies;  // basis label -> outcome frequencies
  std::map<std::string, Counts> counts;  // raw counts, present only when sampled
};

// Exact outcome distributions of a noiseless preparation.
TomographyDataset exact_tomography(const Circuit& prep);
TomographyDataset exact_tomography(const StateVector& state);

// Density-matrix simulation with gate noise, then readout noise; shots == 0
// keeps the exact readout-noisy distributions.
TomographyDataset simulate_tomography(const Circuit& prep, const NoiseModel& noise,
                                      std::uint64_t shots, std::mt19937_64& rng);

// Applies readout mitigation to every basis independently.
TomographyDataset mitigate_dataset(const TomographyDataset& data, const CalibrationMatrix& cal);

// Pauli string (letters I, X, Y, Z; position q = qubit q) -> estimated <P>.
std::map<std::string, double> expectation_values(const TomographyDataset& data);

// Linear inversion followed by projection onto the density-matrix cone.
DensityMatrix reconstruct(const TomographyDataset& data);

// Closest trace-1 PSD matrix in the 2-norm sense to a Hermitian, trace-1
// input, by eigenvalue clipping with redistribution.
DensityMatrix project_to_density_matrix(int n, const Eigen::MatrixXcd& hermitian);

}  // namespace dicke
