// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dicke/builder.hpp"
#include "dicke/metrics.hpp"
#include "dicke/noise.hpp"
#include "oracles.hpp"

namespace dicke {
namespace {

using T = TopologyKind;
using V = Variant;

std::vector<double> random_simplex(int n, std::mt19937_64& rng, bool sparse = false) {
  std::exponential_distribution<double> E(1.0);
  std::bernoulli_distribution keep(0.4);
  std::vector<double> p(std::size_t{1} << n);
  double s = 0;
  for (auto& v : p) s += v = (sparse && !keep(rng)) ? 0.0 : E(rng);
  if (s == 0) {
    p[0] = s = 1;
  }
  for (auto& v : p) v /= s;
  return p;
}

std::vector<ReadoutError> random_readout(int n, std::mt19937_64& rng, double max_eps) {
  std::uniform_real_distribution<double> U(0, max_eps);
  std::vector<ReadoutError> r(n);
  for (auto& e : r) e = {U(rng), U(rng)};
  return r;
}

TEST(RunNoisy, NoiselessIsPure) {
  const Circuit c = build_dicke_circuit({4, 2, T::LNN, V::Standard});
  const DensityMatrix rho = run_noisy(c, NoiseModel{});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  EXPECT_NEAR(es.eigenvalues().maxCoeff(), 1.0, 1e-12);
  EXPECT_NEAR(quantum_fidelity(dicke_statevector(4, 2), rho), 1.0, 1e-9);
}

TEST(RunNoisy, FullSingleQubitDepolarization) {
  Circuit c(1);
  c.append(Gate::x(0));
  const DensityMatrix rho = run_noisy(c, NoiseModel{1.0, 0.0, {}});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix() - Eigen::MatrixXcd::Identity(2, 2) / 2.0);
  EXPECT_LT(es.eigenvalues().cwiseAbs().sum() / 2, 1e-12);  // trace distance
}

TEST(RunNoisy, CnotNoiseSandwich) {
  const Circuit c = build_dicke_circuit({4, 2, T::LNN, V::Standard});
  const double f = quantum_fidelity(dicke_statevector(4, 2), run_noisy(c, NoiseModel{0, 0.01, {}}));
  EXPECT_GT(f, std::pow(0.99, 10) - 0.05);
  EXPECT_LT(f, 1.0);
}

TEST(RunNoisy, MatchesKrausOracle) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> P(0, 0.2);
  const std::vector<DickeSpec> specs = {{3, 1, T::LNN, V::Standard}, {4, 2, T::Ladder, V::Standard},
                                        {4, 2, T::LNN, V::Interleaved}, {5, 2, T::LNN, V::Standard}};
  for (const auto& spec : specs) {
    Circuit c = build_dicke_circuit(spec);
    c.append(Gate::h(0)).append(Gate::sdg(1));
    const double p1 = P(rng), p2 = P(rng);
    const auto expect = oracle::simulate_noisy(c, p1, p2);
    const auto got = run_noisy(c, NoiseModel{p1, p2, {}}).matrix();
    EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-12) << to_string(spec);
  }
}

TEST(RunNoisy, OutputsAreValidDensityMatrices) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> P(0, 1);
  for (const auto& [spec, count] : contract_cnot_table()) {
    const NoiseModel m{P(rng), P(rng), {}};
    const DensityMatrix out = run_noisy(build_dicke_circuit(spec), m);
    const auto& rho = out.matrix();
    EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
  }
}

TEST(RunNoisy, SizeLimitAndValidation) {
  EXPECT_THROW(run_noisy(Circuit(9), NoiseModel{}), std::length_error);
  EXPECT_THROW(run_noisy(Circuit(2), NoiseModel{1.5, 0, {}}), std::invalid_argument);
  EXPECT_THROW(run_noisy(Circuit(2), NoiseModel{0, 0, {{0.2, -0.1}}}), std::invalid_argument);
}

TEST(DensityMatrix, Validates) {
  Eigen::MatrixXcd m(2, 2);
  m << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);  // not Hermitian
  m << 0.6, 0, 0, 0.6;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);  // trace
  m << 1.2, 0, 0, -0.2;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);  // negative eigenvalue
}

TEST(MeasurementDistributionRho, Examples) {
  const auto p = measurement_distribution(DensityMatrix::pure(StateVector::basis(2, 1)));
  EXPECT_EQ(p.probs(), (std::vector<double>{0, 1, 0, 0}));
  const auto u = measurement_distribution(DensityMatrix::maximally_mixed(2));
  for (double v : u.probs()) EXPECT_DOUBLE_EQ(v, 0.25);
  const auto d = measurement_distribution(run_noisy(build_dicke_circuit({4, 2, T::LNN, V::Standard}), {}));
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(d[i], hamming_weight(i) == 2 ? 1.0 / 6 : 0.0, 1e-12);
}

TEST(Calibration, Examples) {
  EXPECT_TRUE(build_calibration_matrix(NoiseModel{}, 3).matrix().isIdentity(0));
  const auto m = build_calibration_matrix(NoiseModel{0, 0, {{0.1, 0.2}}}, 1).matrix();
  EXPECT_DOUBLE_EQ(m(0, 0), 0.9);
  EXPECT_DOUBLE_EQ(m(0, 1), 0.2);
  EXPECT_DOUBLE_EQ(m(1, 0), 0.1);
  EXPECT_DOUBLE_EQ(m(1, 1), 0.8);
  EXPECT_THROW(build_calibration_matrix(NoiseModel{0, 0, {{0.1, 0.1}, {0.1, 0.1}}}, 3),
               std::invalid_argument);
}

TEST(Calibration, EqualsBruteForceColumns) {
  std::mt19937_64 rng(47);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto r = random_readout(n, rng, 0.3);
      const auto got = build_calibration_matrix(NoiseModel{0, 0, r}, n).matrix();
      EXPECT_LT((got - oracle::calibration_bruteforce(n, r)).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
  // The |01> column for n = 2, spelled out.
  const auto m = build_calibration_matrix(NoiseModel{0, 0, {{0.1, 0.2}, {0.3, 0.4}}}, 2).matrix();
  EXPECT_NEAR(m(0b00, 0b01), 0.9 * 0.4, 1e-15);
  EXPECT_NEAR(m(0b01, 0b01), 0.9 * 0.6, 1e-15);
  EXPECT_NEAR(m(0b10, 0b01), 0.1 * 0.4, 1e-15);
  EXPECT_NEAR(m(0b11, 0b01), 0.1 * 0.6, 1e-15);
}

TEST(ReadoutNoise, Examples) {
  std::mt19937_64 rng(53);
  const Distribution d(3, random_simplex(3, rng));
  const auto same = apply_readout_noise(d, build_calibration_matrix({}, 3));
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(same[i], d[i], 1e-15);
  const auto one = apply_readout_noise(Distribution(1, {1, 0}),
                                       build_calibration_matrix(NoiseModel{0, 0, {{0.1, 0.0}}}, 1));
  EXPECT_NEAR(one[0], 0.9, 1e-15);
  EXPECT_NEAR(one[1], 0.1, 1e-15);
  EXPECT_THROW(apply_readout_noise(d, build_calibration_matrix({}, 2)), std::invalid_argument);
}

TEST(Mitigation, InvertsExactReadoutNoise) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const Distribution d(n, random_simplex(n, rng, trial % 2 == 0));
    const auto cal = build_calibration_matrix(NoiseModel{0, 0, random_readout(n, rng, 0.45)}, n);
    const auto back = mitigate(apply_readout_noise(d, cal), cal);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(back.distribution[i], d[i], 1e-9);
    EXPECT_LT(back.clipped_mass, 1e-9);
  }
}

TEST(Mitigation, IdentityAndSingular) {
  const Distribution d(2, {0.1, 0.2, 0.3, 0.4});
  const auto same = mitigate(d, build_calibration_matrix({}, 2)).distribution;
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(same[i], d[i], 1e-15);
  const auto singular = build_calibration_matrix(NoiseModel{0, 0, {{0.1, 0.1}, {0.5, 0.5}}}, 2);
  EXPECT_THROW(mitigate(d, singular), std::domain_error);
}

TEST(Mitigation, ReportsClippedMass) {
  // Observing pure |0> with large readout error inverts to a negative |1> entry.
  const auto cal = build_calibration_matrix(NoiseModel{0, 0, {{0.3, 0.3}}}, 1);
  const auto r = mitigate(Distribution(1, {1, 0}), cal);
  EXPECT_GT(r.clipped_mass, 0.1);
  EXPECT_DOUBLE_EQ(r.distribution[0], 1.0);
}

TEST(Mitigation, ImprovesFiniteShotHellinger) {
  const auto ideal = measurement_distribution(dicke_statevector(4, 2));
  const auto cal = build_calibration_matrix(NoiseModel::uniform(0, 0, 0.03), 4);
  const auto noisy = apply_readout_noise(ideal, cal);
  int improved = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto observed = empirical_distribution(sample(noisy, 8192, seed), 4);
    const double before = hellinger_fidelity(ideal, observed);
    const double after = hellinger_fidelity(ideal, mitigate(observed, cal).distribution);
    improved += after > before;
  }
  EXPECT_GE(improved, 95);
}

TEST(NoiseTrend, FidelityFallsWithCnotCount) {
  const NoiseModel m = NoiseModel::uniform(0.001, 0.01, 0.02);
  std::vector<double> cnots, fids;
  for (const auto& [spec, count] : contract_cnot_table()) {
    if (spec.topology != T::LNN) continue;
    cnots.push_back(double(count));
    fids.push_back(quantum_fidelity(dicke_statevector(spec.n, spec.k), run_noisy(build_dicke_circuit(spec), m)));
  }
  ASSERT_EQ(cnots.size(), 10u);
  EXPECT_LT(spearman(cnots, fids), -0.8);
}

}  // namespace
}  // namespace dicke
