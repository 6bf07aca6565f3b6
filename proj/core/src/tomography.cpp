// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {
namespace {

char letter(PauliAxis a) { return a == PauliAxis::X ? 'X' : a == PauliAxis::Y ? 'Y' : 'Z'; }

Circuit basis_change(int n, const PauliBasis& b) {
  Circuit c(n);
  for (int q = 0; q < n; ++q) {
    if (b.axes[q] == PauliAxis::Y) c.append(Gate::sdg(q));
    if (b.axes[q] != PauliAxis::Z) c.append(Gate::h(q));
  }
  return c;
}

void require_complete(const TomographyDataset& d) {
  for (const auto& b : all_bases(d.n))
    if (!d.frequencies.contains(b.to_string()))
      throw std::invalid_argument("tomography dataset is missing basis " + b.to_string());
}

}  // namespace

std::string PauliBasis::to_string() const {
  std::string s;
  for (PauliAxis a : axes) s += letter(a);
  return s;
}

PauliBasis PauliBasis::from_string(const std::string& label) {
  PauliBasis b;
  for (char ch : label) {
    switch (ch) {
      case 'X': b.axes.push_back(PauliAxis::X); break;
      case 'Y': b.axes.push_back(PauliAxis::Y); break;
      case 'Z': b.axes.push_back(PauliAxis::Z); break;
      default: throw std::invalid_argument("bad Pauli basis label: " + label);
    }
  }
  if (b.axes.empty()) throw std::invalid_argument("empty Pauli basis label");
  return b;
}

std::vector<PauliBasis> all_bases(int n) {
  if (n <= 0) throw std::invalid_argument("need at least one qubit");
  std::size_t total = 1;
  for (int q = 0; q < n; ++q) total *= 3;
  std::vector<PauliBasis> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    PauliBasis b;
    b.axes.resize(n);
    std::size_t c = code;
    for (int q = n - 1; q >= 0; --q, c /= 3) b.axes[q] = static_cast<PauliAxis>(c % 3);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::pair<PauliBasis, Circuit>> tomography_circuits(const Circuit& prep) {
  std::vector<std::pair<PauliBasis, Circuit>> out;
  for (auto& b : all_bases(prep.num_qubits())) {
    Circuit c = prep;
    c.append(basis_change(prep.num_qubits(), b));
    c.set_label(prep.label() + "|" + b.to_string());
    out.emplace_back(std::move(b), std::move(c));
  }
  return out;
}

TomographyDataset exact_tomography(const Circuit& prep) { return exact_tomography(run(prep, 0)); }

TomographyDataset exact_tomography(const StateVector& psi) {
  TomographyDataset d;
  d.n = psi.num_qubits();
  for (const auto& b : all_bases(d.n))
    d.frequencies.emplace(b.to_string(), measurement_distribution(run(basis_change(d.n, b), psi)));
  return d;
}

TomographyDataset simulate_tomography(const Circuit& prep, const NoiseModel& noise,
                                      std::uint64_t shots, std::mt19937_64& rng) {
  TomographyDataset d;
  d.n = prep.num_qubits();
  d.shots = shots;
  const DensityMatrix rho = run_noisy(prep, noise);
  const CalibrationMatrix cal = build_calibration_matrix(noise, d.n);
  for (const auto& b : all_bases(d.n)) {
    const std::string label = b.to_string();
    const Distribution exact =
        apply_readout_noise(measurement_distribution(run_noisy(basis_change(d.n, b), noise, rho)), cal);
    if (shots == 0) {
      d.frequencies.emplace(label, exact);
    } else {
      Counts c = sample(exact, shots, rng);
      d.frequencies.emplace(label, empirical_distribution(c, d.n));
      d.counts.emplace(label, std::move(c));
    }
  }
  return d;
}

TomographyDataset mitigate_dataset(const TomographyDataset& data, const CalibrationMatrix& cal) {
  TomographyDataset out;
  out.n = data.n;
  out.shots = data.shots;
  for (const auto& [label, f] : data.frequencies)
    out.frequencies.emplace(label, mitigate(f, cal).distribution);
  return out;
}

std::map<std::string, double> expectation_values(const TomographyDataset& data) {
  require_complete(data);
  const int n = data.n;
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::map<std::string, double> sum;
  std::map<std::string, int> hits;
  for (const auto& [label, f] : data.frequencies) {
    // Each subset of measured positions yields an estimate for the Pauli
    // string with the basis letters there and I elsewhere.
    for (std::uint64_t subset = 0; subset < dim; ++subset) {
      std::string key(n, 'I');
      for (int q = 0; q < n; ++q)
        if (subset & qubit_mask(n, q)) key[q] = label[q];
      double e = 0;
      for (std::uint64_t i = 0; i < dim; ++i)
        e += (std::popcount(i & subset) % 2 ? -1.0 : 1.0) * f[i];
      sum[key] += e;
      ++hits[key];
    }
  }
  for (auto& [key, v] : sum) v /= hits[key];
  sum[std::string(n, 'I')] = 1.0;
  return sum;
}

DensityMatrix project_to_density_matrix(int n, const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXd lam = es.eigenvalues();  // ascending
  const Eigen::Index d = lam.size();
  const double tr = lam.sum();
  lam /= tr;
  // Zero the most negative eigenvalues while spreading their mass over the
  // rest, until what remains is non-negative.
  double acc = 0;
  Eigen::Index first = 0;  // eigenvalues [first, d) survive
  while (first < d && lam(first) + acc / double(d - first) < 0) {
    acc += lam(first);
    lam(first) = 0;
    ++first;
  }
  for (Eigen::Index j = first; j < d; ++j) lam(j) += acc / double(d - first);
  Eigen::MatrixXcd rho = es.eigenvectors() * lam.cast<Complex>().asDiagonal() *
                         es.eigenvectors().adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix(n, std::move(rho));
}

DensityMatrix reconstruct(const TomographyDataset& data) {
  const auto ev = expectation_values(data);
  const int n = data.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [pauli, value] : ev) {
    std::uint64_t flip = 0;
    for (int q = 0; q < n; ++q)
      if (pauli[q] == 'X' || pauli[q] == 'Y') flip |= qubit_mask(n, q);
    for (std::uint64_t i = 0; i < std::uint64_t(dim); ++i) {
      // Row i has its single nonzero in column i ^ flip.
      Complex phase = 1.0;
      for (int q = 0; q < n; ++q) {
        const bool bit = i & qubit_mask(n, q);
        if (pauli[q] == 'Z' && bit) phase = -phase;
        if (pauli[q] == 'Y') phase *= bit ? Complex(0, 1) : Complex(0, -1);
      }
      rho(i, i ^ flip) += value * phase;
    }
  }
  rho /= double(dim);
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return project_to_density_matrix(n, rho);
}

}  // namespace dicke
