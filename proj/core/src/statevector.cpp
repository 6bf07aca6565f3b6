// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/statevector.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dicke {
namespace {

constexpr int kMaxQubits = 24;

std::size_t dim_for(int n) {
  if (n <= 0 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  return std::size_t{1} << n;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

StateVector::StateVector(int n) : n_(n), amps_(dim_for(n), Complex{0.0}) { amps_[0] = 1.0; }

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (amps_.size() != dim_for(n)) throw std::invalid_argument("amplitude count is not 2^n");
  if (std::abs(norm() - 1.0) > 1e-12) throw std::invalid_argument("state is not normalized");
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const Complex& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  Complex acc = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double overlap_squared(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

Distribution::Distribution(int n, std::vector<double> probs) : n_(n), probs_(std::move(probs)) {
  if (probs_.size() != dim_for(n)) throw std::invalid_argument("probability count is not 2^n");
  double sum = 0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("probabilities do not sum to 1");
}

StateVector dicke_statevector(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("Dicke weight out of range");
  std::vector<Complex> amps(dim_for(n), 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if (hamming_weight(i) == k) amps[i] = a;
  return StateVector(n, std::move(amps));
}

void apply_gate(std::vector<Complex>& amps, int n, const Gate& g) {
  const std::uint64_t tm = qubit_mask(n, g.target);
  const std::uint64_t dim = amps.size();
  switch (g.kind) {
    case GateKind::PauliX:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & tm)) std::swap(amps[i], amps[i | tm]);
      return;
    case GateKind::CNot: {
      const std::uint64_t cm = qubit_mask(n, *g.control);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & cm) && !(i & tm)) std::swap(amps[i], amps[i | tm]);
      return;
    }
    default:
      break;
  }
  // Generic 2x2 on the target: [a0', a1'] = M [a0, a1].
  Complex m00, m01, m10, m11;
  if (g.kind == GateKind::RotY) {
    const double c = std::cos(*g.angle / 2), s = std::sin(*g.angle / 2);
    m00 = c; m01 = -s; m10 = s; m11 = c;
  } else if (g.kind == GateKind::Hadamard) {
    const double r = 1.0 / std::sqrt(2.0);
    m00 = r; m01 = r; m10 = r; m11 = -r;
  } else {  // SDagger
    m00 = 1; m01 = 0; m10 = 0; m11 = Complex(0, -1);
  }
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & tm) continue;
    const Complex a0 = amps[i], a1 = amps[i | tm];
    amps[i] = m00 * a0 + m01 * a1;
    amps[i | tm] = m10 * a0 + m11 * a1;
  }
}

StateVector run(const Circuit& circuit, StateVector input) {
  if (input.num_qubits() != circuit.num_qubits())
    throw std::invalid_argument("input dimension does not match circuit");
  for (const Gate& g : circuit.gates()) apply_gate(input.amps_, input.n_, g);
  return input;
}

StateVector run(const Circuit& circuit, std::uint64_t basis_index) {
  return run(circuit, StateVector::basis(circuit.num_qubits(), basis_index));
}

Distribution measurement_distribution(const StateVector& state) {
  std::vector<double> p(state.dimension());
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] = std::norm(state[i]);
  for (double& v : p) v /= sum;  // absorb rounding in the last bits
  return Distribution(state.num_qubits(), std::move(p));
}

Counts sample(const Distribution& dist, std::uint64_t shots, std::mt19937_64& rng) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  Counts out;
  std::uint64_t remaining = shots;
  double mass_left = 1.0;
  for (std::size_t i = 0; i < dist.size() && remaining > 0; ++i) {
    const double p = dist[i];
    if (p <= 0) continue;
    std::uint64_t c;
    if (i + 1 == dist.size() || p >= mass_left) {
      c = remaining;
    } else {
      std::binomial_distribution<std::uint64_t> bin(remaining, std::min(1.0, p / mass_left));
      c = bin(rng);
    }
    if (c) out[i] = c;
    remaining -= c;
    mass_left -= p;
  }
  // Only reachable if trailing probabilities were all zero and rounding left
  // shots undistributed; assign them to the last outcome with mass.
  if (remaining > 0) {
    for (std::size_t i = dist.size(); i-- > 0;)
      if (dist[i] > 0) {
        out[i] += remaining;
        break;
      }
  }
  return out;
}

Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample(dist, shots, rng);
}

Distribution empirical_distribution(const Counts& counts, int n) {
  std::vector<double> p(dim_for(n), 0.0);
  std::uint64_t total = 0;
  for (const auto& [idx, c] : counts) {
    if (idx >= p.size()) throw std::out_of_range("outcome index out of range");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("empty count table");
  for (const auto& [idx, c] : counts) p[idx] = static_cast<double>(c) / static_cast<double>(total);
  return Distribution(n, std::move(p));
}

}  // namespace dicke
