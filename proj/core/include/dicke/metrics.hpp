// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include "dicke/noise.hpp"
#include "dicke/statevector.hpp"

namespace dicke {

// <target| rho |target>, clipped to [0,1].
double quantum_fidelity(const StateVector& target, const DensityMatrix& rho);

// (sum_i sqrt(p_i q_i))^2
double hellinger_fidelity(const Distribution& p, const Distribution& q);

// Probability mass on outcomes of Hamming weight k.
double measured_success_probability(const Distribution& p, int k);

struct MetricReport {
  double quantum_fidelity = 0;
  double hellinger_fidelity = 0;
  double measured_success_probability = 0;
  bool chain_satisfied = false;
  // H - F and M - H; negative values mean the corresponding link failed.
  double slack_fidelity_hellinger = 0;
  double slack_hellinger_success = 0;
  double tolerance = 1e-9;
};

// p is the diagonal of rho; q is the ideal Dicke distribution.
MetricReport metric_report(int n, int k, const DensityMatrix& rho, double tolerance = 1e-9);

// Same, but with an externally measured distribution (e.g. readout-noisy or
// mitigated) in place of rho's diagonal.
MetricReport metric_report(int n, int k, const DensityMatrix& rho, const Distribution& measured,
                           double tolerance = 1e-9);

double product_state_fidelity_bound(int n, int k);
StateVector best_product_state(int n, int k);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dicke
