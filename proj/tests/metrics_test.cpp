// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dicke/builder.hpp"
#include "dicke/metrics.hpp"
#include "oracles.hpp"

namespace dicke {
namespace {

using T = TopologyKind;
using V = Variant;

DensityMatrix random_rho(int n, std::mt19937_64& rng) { return DensityMatrix(n, oracle::random_density(n, rng)); }

// Product state with independent random amplitudes and phases per qubit.
StateVector random_product_state(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0, 1), Phi(0, 2 * std::numbers::pi);
  std::vector<Complex> amps{1.0};
  for (int q = 0; q < n; ++q) {
    const double t = std::acos(std::sqrt(U(rng)));
    const Complex a0 = std::polar(std::cos(t), Phi(rng)), a1 = std::polar(std::sin(t), Phi(rng));
    std::vector<Complex> next;
    for (const auto& a : amps) {
      next.push_back(a * a0);
      next.push_back(a * a1);
    }
    amps = std::move(next);
  }
  double s = 0;
  for (auto& a : amps) s += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(s);
  return StateVector(n, std::move(amps));
}

TEST(QuantumFidelity, Examples) {
  const auto d42 = dicke_statevector(4, 2);
  EXPECT_NEAR(quantum_fidelity(d42, DensityMatrix::pure(d42)), 1.0, 1e-12);
  EXPECT_NEAR(quantum_fidelity(d42, DensityMatrix::maximally_mixed(4)), 1.0 / 16, 1e-15);
  const auto rho = run_noisy(build_dicke_circuit({4, 2, T::LNN, V::Standard}), NoiseModel{0.0, 0.0, {}});
  EXPECT_NEAR(quantum_fidelity(d42, rho), 1.0, 1e-9);
  EXPECT_THROW(quantum_fidelity(dicke_statevector(3, 1), rho), std::invalid_argument);
}

TEST(QuantumFidelity, PureCaseIsSquaredOverlap) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const auto a = oracle::random_state(n, rng), b = oracle::random_state(n, rng);
    EXPECT_NEAR(quantum_fidelity(a, DensityMatrix::pure(b)), overlap_squared(a, b), 1e-12);
  }
}

TEST(QuantumFidelity, LinearInRho) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> A(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const auto t = oracle::random_state(n, rng);
    const auto r1 = oracle::random_density(n, rng), r2 = oracle::random_density(n, rng);
    const double a = A(rng);
    const DensityMatrix mix(n, a * r1 + (1 - a) * r2);
    EXPECT_NEAR(quantum_fidelity(t, mix),
                a * quantum_fidelity(t, DensityMatrix(n, r1)) + (1 - a) * quantum_fidelity(t, DensityMatrix(n, r2)),
                1e-12);
  }
}

TEST(HellingerFidelity, Examples) {
  const Distribution p(2, {0.5, 0.5, 0, 0}), q(2, {0.25, 0.25, 0.25, 0.25}), r(2, {0, 0, 0.5, 0.5});
  EXPECT_NEAR(hellinger_fidelity(p, p), 1.0, 1e-15);
  EXPECT_EQ(hellinger_fidelity(p, r), 0.0);
  EXPECT_NEAR(hellinger_fidelity(p, q), 0.5, 1e-15);
  EXPECT_THROW(hellinger_fidelity(p, Distribution(1, {1, 0})), std::invalid_argument);
}

TEST(HellingerFidelity, SymmetricAndOneOnlyWhenEqual) {
  std::mt19937_64 rng(71);
  std::exponential_distribution<double> E(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(8), b(8);
    double sa = 0, sb = 0;
    for (int i = 0; i < 8; ++i) {
      sa += a[i] = E(rng);
      sb += b[i] = E(rng);
    }
    for (int i = 0; i < 8; ++i) {
      a[i] /= sa;
      b[i] /= sb;
    }
    const Distribution p(3, a), q(3, b);
    EXPECT_DOUBLE_EQ(hellinger_fidelity(p, q), hellinger_fidelity(q, p));
    EXPECT_LT(hellinger_fidelity(p, q), 1 - 1e-12);
    EXPECT_NEAR(hellinger_fidelity(p, p), 1.0, 1e-12);
  }
}

TEST(MeasuredSuccess, Examples) {
  EXPECT_NEAR(measured_success_probability(measurement_distribution(dicke_statevector(5, 2)), 2), 1.0, 1e-12);
  EXPECT_NEAR(measured_success_probability(Distribution(4, std::vector<double>(16, 1.0 / 16)), 2), 6.0 / 16, 1e-15);
  EXPECT_EQ(measured_success_probability(measurement_distribution(StateVector(4)), 2), 0.0);
}

TEST(MetricReport, Examples) {
  const auto pure = metric_report(4, 2, DensityMatrix::pure(dicke_statevector(4, 2)));
  EXPECT_NEAR(pure.quantum_fidelity, 1, 1e-12);
  EXPECT_NEAR(pure.hellinger_fidelity, 1, 1e-12);
  EXPECT_NEAR(pure.measured_success_probability, 1, 1e-12);
  EXPECT_TRUE(pure.chain_satisfied);

  const auto mixed = metric_report(4, 2, DensityMatrix::maximally_mixed(4));
  EXPECT_NEAR(mixed.quantum_fidelity, 1.0 / 16, 1e-15);
  EXPECT_NEAR(mixed.hellinger_fidelity, 6.0 / 16, 1e-15);
  EXPECT_NEAR(mixed.measured_success_probability, 6.0 / 16, 1e-15);
  EXPECT_TRUE(mixed.chain_satisfied);
}

TEST(MetricReport, FlagsBrokenChainFromExternalDistribution) {
  // A measured distribution unrelated to rho can violate the chain.
  const auto r = metric_report(2, 1, DensityMatrix::pure(dicke_statevector(2, 1)), Distribution(2, {1, 0, 0, 0}));
  EXPECT_FALSE(r.chain_satisfied);
  EXPECT_LT(r.slack_fidelity_hellinger, 0);
}

TEST(InequalityChain, HoldsOnRandomAndSimulatedStates) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> P(0, 0.3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    std::uniform_int_distribution<int> K(1, n - 1);
    const auto r = metric_report(n, K(rng), random_rho(n, rng));
    EXPECT_TRUE(r.chain_satisfied);
    ++checked;
  }
  for (const auto& [spec, count] : contract_cnot_table()) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto rho = run_noisy(build_dicke_circuit(spec), NoiseModel{P(rng), P(rng), {}});
      const auto r = metric_report(spec.n, spec.k, rho);
      EXPECT_LE(r.quantum_fidelity, r.hellinger_fidelity + 1e-9);
      EXPECT_LE(r.hellinger_fidelity, r.measured_success_probability + 1e-9);
      ++checked;
    }
  }
  EXPECT_GE(checked, 500);
}

TEST(ProductBound, PublishedValues) {
  EXPECT_NEAR(product_state_fidelity_bound(2, 1), 0.5, 1e-15);
  EXPECT_NEAR(product_state_fidelity_bound(6, 3), 0.3125, 1e-15);
  EXPECT_NEAR(product_state_fidelity_bound(4, 2), 0.375, 1e-15);
  EXPECT_NEAR(overlap_squared(best_product_state(4, 1), dicke_statevector(4, 1)), 0.421875, 1e-12);
  EXPECT_THROW(product_state_fidelity_bound(3, 0), std::invalid_argument);
  EXPECT_THROW(best_product_state(3, 3), std::invalid_argument);
}

TEST(ProductBound, SymmetricInWeight) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      EXPECT_NEAR(product_state_fidelity_bound(n, k), product_state_fidelity_bound(n, n - k), 1e-15);
}

TEST(ProductBound, GridSearchOverSymmetricStatesAgrees) {
  // Overlap of (cos t|0> + sin t|1>)^n with D(n,k) is C(n,k) cos^{2(n-k)} sin^{2k}.
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      double best = 0;
      for (int i = 0; i <= 200000; ++i) {
        const double t = (std::numbers::pi / 2) * i / 200000;
        best = std::max(best, double(binomial(n, k)) * std::pow(std::cos(t), 2 * (n - k)) *
                                  std::pow(std::sin(t), 2 * k));
      }
      EXPECT_NEAR(best, product_state_fidelity_bound(n, k), 1e-9);
    }
  }
}

TEST(ProductBound, AttainedBySymmetricStateAndNeverBeaten) {
  std::mt19937_64 rng(79);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto target = dicke_statevector(n, k);
      const double bound = product_state_fidelity_bound(n, k);
      EXPECT_NEAR(overlap_squared(best_product_state(n, k), target), bound, 1e-12);
      double worst_excess = -1;
      for (int trial = 0; trial < 10000; ++trial)
        worst_excess = std::max(worst_excess, overlap_squared(random_product_state(n, rng), target) - bound);
      EXPECT_LE(worst_excess, 1e-9) << n << "," << k;
    }
  }
}

TEST(Spearman, RanksAndTies) {
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0, 1e-15);
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-15);
  EXPECT_NEAR(spearman({1, 2, 3, 4, 5}, {1, 4, 9, 16, 25}), 1.0, 1e-15);
  // scipy.stats.spearmanr([1,2,2,3],[1,3,2,4]) = 0.9486832980505139
  EXPECT_NEAR(spearman({1, 2, 2, 3}, {1, 3, 2, 4}), 0.9486832980505139, 1e-12);
  EXPECT_THROW(spearman({1}, {1}), std::invalid_argument);
}

}  // namespace
}  // namespace dicke
