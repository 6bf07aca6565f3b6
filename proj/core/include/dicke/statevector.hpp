// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dicke/circuit.hpp"

namespace dicke {

using Complex = std::complex<double>;

// Basis index convention shared by every module: qubit 0 is the most
// significant bit, so qubit q maps to bit (n - 1 - q).
inline std::uint64_t qubit_mask(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }
inline int hamming_weight(std::uint64_t x) { return std::popcount(x); }
std::uint64_t binomial(int n, int k);

class StateVector {
 public:
  // |0...0> on n qubits.
  explicit StateVector(int n);
  // Validates length 2^n and unit norm (1e-12).
  StateVector(int n, std::vector<Complex> amplitudes);

  static StateVector basis(int n, std::uint64_t index);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

 private:
  friend StateVector run(const Circuit&, StateVector);
  int n_;
  std::vector<Complex> amps_;
};

Complex inner_product(const StateVector& a, const StateVector& b);  // <a|b>
double overlap_squared(const StateVector& a, const StateVector& b);

class Distribution {
 public:
  // Validates length 2^n, non-negativity and sum 1 (1e-12).
  Distribution(int n, std::vector<double> probs);
  int num_qubits() const { return n_; }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::size_t size() const { return probs_.size(); }

 private:
  int n_;
  std::vector<double> probs_;
};

// Outcome index -> number of shots. Absent outcomes were never observed.
using Counts = std::map<std::uint64_t, std::uint64_t>;

StateVector dicke_statevector(int n, int k);

StateVector run(const Circuit& circuit, StateVector input);
StateVector run(const Circuit& circuit, std::uint64_t basis_index);

// Applies one gate in place on a raw amplitude array of 2^n entries.
void apply_gate(std::vector<Complex>& amps, int n, const Gate& gate);

Distribution measurement_distribution(const StateVector& state);

// Multinomial draw via conditional binomials; replayable for a fixed seed.
Counts sample(const Distribution& dist, std::uint64_t shots, std::mt19937_64& rng);
Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed);

// Relative frequencies of a non-empty count table.
Distribution empirical_distribution(const Counts& counts, int n);

}  // namespace dicke
