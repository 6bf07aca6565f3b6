// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dicke {
namespace {

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_weight(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n-1");
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double quantum_fidelity(const StateVector& target, const DensityMatrix& rho) {
  if (target.num_qubits() != rho.num_qubits()) throw std::invalid_argument("dimension mismatch");
  Eigen::VectorXcd t(target.dimension());
  for (std::size_t i = 0; i < target.dimension(); ++i) t(i) = target[i];
  return clip01((t.adjoint() * rho.matrix() * t)(0, 0).real());
}

double hellinger_fidelity(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
  double acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::sqrt(p[i] * q[i]);
  return clip01(acc * acc);
}

double measured_success_probability(const Distribution& p, int k) {
  double acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (hamming_weight(i) == k) acc += p[i];
  return clip01(acc);
}

MetricReport metric_report(int n, int k, const DensityMatrix& rho, const Distribution& measured,
                           double tolerance) {
  if (rho.num_qubits() != n || measured.num_qubits() != n)
    throw std::invalid_argument("dimension mismatch");
  const StateVector target = dicke_statevector(n, k);
  MetricReport r;
  r.quantum_fidelity = quantum_fidelity(target, rho);
  r.hellinger_fidelity = hellinger_fidelity(measured, measurement_distribution(target));
  r.measured_success_probability = measured_success_probability(measured, k);
  r.slack_fidelity_hellinger = r.hellinger_fidelity - r.quantum_fidelity;
  r.slack_hellinger_success = r.measured_success_probability - r.hellinger_fidelity;
  r.tolerance = tolerance;
  r.chain_satisfied =
      r.slack_fidelity_hellinger >= -tolerance && r.slack_hellinger_success >= -tolerance;
  return r;
}

MetricReport metric_report(int n, int k, const DensityMatrix& rho, double tolerance) {
  return metric_report(n, k, rho, measurement_distribution(rho), tolerance);
}

double product_state_fidelity_bound(int n, int k) {
  check_weight(n, k);
  const double a = double(k) / n;
  return double(binomial(n, k)) * std::pow(a, k) * std::pow(1.0 - a, n - k);
}

StateVector best_product_state(int n, int k) {
  check_weight(n, k);
  const double a0 = std::sqrt(1.0 - double(k) / n), a1 = std::sqrt(double(k) / n);
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const int w = hamming_weight(i);
    amps[i] = std::pow(a1, w) * std::pow(a0, n - w);
  }
  // Renormalize away rounding so the strict norm check holds.
  double nrm = 0;
  for (const auto& a : amps) nrm += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(nrm);
  return StateVector(n, std::move(amps));
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("spearman needs two equal-length samples");
  const auto rx = ranks(x), ry = ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace dicke
