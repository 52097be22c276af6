// Copyright 2026 The qitk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qitk/algorithms.hpp"

#include <bit>
#include <numeric>
#include <random>

#include "test_util.hpp"

namespace qitk {
namespace {

using testing::kI;
using testing::kPi;

// Random Simon function for secret s: each coset {x, x^s} gets a distinct value.
BooleanOracle random_simon(int n, std::uint64_t s, std::uint64_t seed) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> values(size);
  std::iota(values.begin(), values.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(values.begin(), values.end(), rng);
  std::vector<std::uint64_t> table(size, size);
  std::size_t next = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (table[x] != size) continue;
    table[x] = table[x ^ s] = values[next++];
  }
  return BooleanOracle::make(n, n, table);
}

TEST(Oracle, UnitaryIsPermutationOfXorMap) {
  const BooleanOracle f = BooleanOracle::make(2, 2, {3, 0, 2, 1});
  const Matrix u = f.unitary().dense();
  EXPECT_MAT_NEAR(u.adjoint() * u, Matrix::Identity(16, 16), 0.0);
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) EXPECT_EQ(u((x << 2) | (y ^ f.table[x]), (x << 2) | y), cplx(1.0));
}

TEST(Oracle, RejectsMalformedTables) {
  EXPECT_THROW(BooleanOracle::make(1, 1, {0}), Error);
  EXPECT_THROW(BooleanOracle::make(1, 1, {0, 2}), Error);
}

TEST(Deutsch, AllOneBitFunctions) {
  const std::vector<std::pair<std::vector<std::uint64_t>, DeutschResult>> cases = {
      {{0, 0}, DeutschResult::kConstant},
      {{1, 1}, DeutschResult::kConstant},
      {{0, 1}, DeutschResult::kBalanced},
      {{1, 0}, DeutschResult::kBalanced}};
  for (const auto& [table, expected] : cases) {
    const BooleanOracle f = BooleanOracle::make(1, 1, table);
    const DeutschReport r = deutsch(f);
    EXPECT_EQ(r.result, expected);
    EXPECT_EQ(r.oracle_calls, 1);
    EXPECT_EQ(oracle_applications(deutsch_circuit(f)), 1);
    // The first wire ends in a basis state.
    EXPECT_NEAR(r.p_one, expected == DeutschResult::kBalanced ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Deutsch, RejectsWrongArity) {
  EXPECT_THROW(deutsch(BooleanOracle::make(2, 1, {0, 1, 1, 0})), Error);
}

TEST(Simon, ThreeBitTableGivesSecret110) {
  const BooleanOracle f = BooleanOracle::make(3, 3, {5, 2, 0, 6, 0, 6, 5, 2});
  ASSERT_EQ(simon_secret(f), std::optional<std::uint64_t>(6));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimonReport r = simon(f, seed);
    EXPECT_EQ(r.s, 6u);
    EXPECT_EQ(r.oracle_calls, static_cast<int>(r.samples.size()));
    for (std::uint64_t z : r.samples) EXPECT_EQ(std::popcount(z & r.s) % 2, 0);
  }
}

TEST(Simon, RecoversRandomSecrets) {
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::mt19937_64 rng(seed * 31 + n);
      const std::uint64_t s = 1 + rng() % ((std::uint64_t{1} << n) - 1);
      const BooleanOracle f = random_simon(n, s, seed);
      const SimonReport r = simon(f, seed);
      EXPECT_EQ(r.s, s);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) EXPECT_EQ(f.table[x], f.table[x ^ r.s]);
    }
}

TEST(Simon, MeanOracleCallsBelowThreeN) {
  for (int n = 2; n <= 6; ++n) {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      std::mt19937_64 rng(1000 * n + seed);
      const std::uint64_t s = 1 + rng() % ((std::uint64_t{1} << n) - 1);
      total += simon(random_simon(n, s, seed), seed).oracle_calls;
    }
    EXPECT_LT(total / 200, 3.0 * n) << "n=" << n;
  }
}

TEST(Simon, SamplesUniformOnOrthogonalComplement) {
  const BooleanOracle f = BooleanOracle::make(3, 3, {5, 2, 0, 6, 0, 6, 5, 2});
  const Circuit c = simon_circuit(f);
  std::array<int, 8> counts{};
  constexpr int kSamples = 10000;
  for (int k = 0; k < kSamples; ++k) ++counts[simon_sample(c, 3, k)];
  double chi2 = 0.0;
  for (std::uint64_t z = 0; z < 8; ++z) {
    if (std::popcount(z & 6u) % 2) {
      EXPECT_EQ(counts[z], 0) << z;
    } else {
      const double e = kSamples / 4.0;
      chi2 += (counts[z] - e) * (counts[z] - e) / e;
    }
  }
  // Upper 1% point of chi-square with three degrees of freedom.
  EXPECT_LT(chi2, 11.345);
}

TEST(Simon, PromiseViolationAndExhaustion) {
  EXPECT_THROW(simon(BooleanOracle::make(2, 2, {0, 1, 2, 3}), 1), Error);
  try {
    simon(BooleanOracle::make(2, 2, {0, 1, 2, 3}), 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPromiseViolated);
  }
  const BooleanOracle f = random_simon(5, 9, 2);
  try {
    simon(f, 1, 2);
    ADD_FAILURE() << "two calls cannot reach rank four";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kExhausted);
  }
}

TEST(Gf2, RankAndNullVector) {
  EXPECT_EQ(gf2_rank({0b011, 0b110, 0b101}, 3), 2);
  EXPECT_EQ(gf2_null_vector({0b011, 0b110}, 3), std::optional<std::uint64_t>(0b111));
  EXPECT_FALSE(gf2_null_vector({0b011}, 3).has_value());
  EXPECT_FALSE(gf2_null_vector({0b001, 0b010, 0b100}, 3).has_value());
}

PhaseEstimationInstance diagonal_instance(double phi, int n) {
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = std::polar(1.0, 2 * kPi * phi);
  return {u, StateVector::qubits(1, 1), n};
}

TEST(PhaseEstimation, ThreeEighthsIsCertain) {
  const PhaseReport r = phase_estimate(diagonal_instance(3.0 / 8.0, 3));
  EXPECT_EQ(r.best_index, 3);
  EXPECT_NEAR(r.distribution[3], 1.0, 1e-10);
  EXPECT_DOUBLE_EQ(r.estimate, 0.375);
}

TEST(PhaseEstimation, RepresentablePhasesArePointMasses) {
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < (1 << n); ++j) {
      const PhaseReport r = phase_estimate(diagonal_instance(std::ldexp(j, -n), n));
      EXPECT_NEAR(r.distribution[j], 1.0, 1e-10) << n << "/" << j;
    }
}

TEST(PhaseEstimation, IrrationalPhaseMeetsBound) {
  const double phi = 1.0 / (2 * kPi);
  const PhaseReport r = phase_estimate(diagonal_instance(phi, 4));
  EXPECT_GE(r.distribution[r.best_index], 4.0 / (kPi * kPi));
  EXPECT_EQ(r.best_index, nearest_phase_index(phi, 4));
  const double total = std::accumulate(r.distribution.begin(), r.distribution.end(), 0.0);
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(PhaseEstimation, DistributionMatchesGeometricSeries) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const double phi = uni(rng);
    const PhaseReport r = phase_estimate(diagonal_instance(phi, 5));
    for (int j = 0; j < 32; ++j) EXPECT_NEAR(r.distribution[j], phase_probability_closed_form(phi, 5, j), 1e-10);
  }
}

TEST(PhaseEstimation, GeneralEigenvectorOfRandomUnitary) {
  const Matrix u = random_unitary(4, 12);
  Eigen::ComplexEigenSolver<Matrix> es(u);
  const Vector v = es.eigenvectors().col(1).normalized();
  const PhaseEstimationInstance inst{u, StateVector::normalized({2, 2}, v), 5};
  const PhaseReport r = phase_estimate(inst);
  double phi = std::arg(es.eigenvalues()(1)) / (2 * kPi);
  if (phi < 0) phi += 1;
  EXPECT_NEAR(r.phase, phi, 1e-9);
  for (int j = 0; j < 32; ++j) EXPECT_NEAR(r.distribution[j], phase_probability_closed_form(phi, 5, j), 1e-8);
}

TEST(PhaseEstimation, RejectsNonEigenvector) {
  PhaseEstimationInstance inst = diagonal_instance(0.3, 3);
  inst.eigenvector = StateVector::normalized({2}, testing::vec({1.0, 1.0}));
  EXPECT_THROW(phase_estimate(inst), Error);
}

TEST(PhaseEstimation, ClosedFormAtExactPhase) {
  EXPECT_NEAR(phase_probability_closed_form(0.25, 3, 2), 1.0, 1e-14);
  EXPECT_NEAR(phase_probability_closed_form(0.25, 3, 3), 0.0, 1e-14);
}

TEST(Grover, ZeroIterationsGiveMOverN) {
  const GroverInstance inst = GroverInstance::make(4, {3, 9});
  EXPECT_NEAR(grover_success(inst, 0), 2.0 / 16.0, 1e-15);
  const auto p = grover(inst, 0);
  EXPECT_NEAR(p[3] + p[9], 0.125, 1e-12);
}

TEST(Grover, ThreeQubitsOneSolution) {
  const GroverInstance inst = GroverInstance::make(3, {5});
  EXPECT_EQ(grover_k0(8, 1), 2);
  // sin^2(5 theta / 2) with sin(theta / 2) = 1 / sqrt 8.
  const double theta = 2 * std::asin(1 / std::sqrt(8.0));
  EXPECT_NEAR(grover_theta(8, 1), theta, 1e-15);
  EXPECT_NEAR(grover(inst, 2)[5], std::pow(std::sin(5 * theta / 2), 2), 1e-12);
  EXPECT_NEAR(grover(inst, 2)[5], 0.9453125, 1e-12);
}

TEST(Grover, K0MatchesDefinitionAndBounds) {
  for (int n = 1; n <= 12; ++n)
    for (std::uint64_t m = 1; m < std::min<std::uint64_t>(std::uint64_t{1} << n, 9); ++m) {
      const std::uint64_t big = std::uint64_t{1} << n;
      const int k0 = grover_k0(big, m);
      const double target = kPi / (4 * std::asin(std::sqrt(double(m) / big))) - 0.5;
      int expected = 0;
      while (expected + 0.5 < target) ++expected;
      EXPECT_EQ(k0, expected) << n << "," << m;
      EXPECT_LE(k0, kPi / 4 * std::sqrt(double(big) / m) + 1e-12);
    }
}

TEST(Grover, CircuitMatchesClosedFormUpToTwiceK0) {
  for (int n = 1; n <= 8; ++n)
    for (std::uint64_t m = 1; m <= 4 && m < (std::uint64_t{1} << n); ++m) {
      std::vector<std::uint64_t> sols;
      for (std::uint64_t k = 0; k < m; ++k) sols.push_back((k * 5 + 1) % (std::uint64_t{1} << n));
      std::sort(sols.begin(), sols.end());
      sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
      if (sols.size() != m) continue;
      const GroverInstance inst = GroverInstance::make(n, sols);
      const int k0 = grover_k0(inst.N(), inst.M());
      const auto series = grover_success_series(inst, 2 * k0);
      for (int k = 0; k <= 2 * k0; ++k) EXPECT_NEAR(series[k], grover_success(inst, k), 1e-9);
      EXPECT_LE(1 - series[k0], double(m) / inst.N() + 1e-12);
    }
}

TEST(Grover, SeriesAgreesWithFullCircuit) {
  const GroverInstance inst = GroverInstance::make(4, {2, 7, 11});
  const auto series = grover_success_series(inst, 4);
  for (int k = 0; k <= 4; ++k) {
    const auto p = grover(inst, k);
    EXPECT_NEAR(series[k], p[2] + p[7] + p[11], 1e-12);
    EXPECT_EQ(oracle_applications(grover_circuit(inst, k)), k);
  }
}

TEST(Grover, HamiltonianReachesCertainty) {
  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t m = 1; m <= 4 && m < (std::uint64_t{1} << n); ++m) {
      std::vector<std::uint64_t> sols;
      for (std::uint64_t k = 0; k < m; ++k) sols.push_back(k);
      const GroverInstance inst = GroverInstance::make(n, sols);
      const double t = kPi / 2 * std::sqrt(double(inst.N()) / m);
      EXPECT_NEAR(grover_hamiltonian(inst, t), 1.0, 1e-9) << n << "," << m;
      EXPECT_NEAR(grover_hamiltonian(inst, 0.0), double(m) / inst.N(), 1e-12);
    }
}

TEST(Grover, HamiltonianAgreesWithDenseExponential) {
  const GroverInstance inst = GroverInstance::make(3, {1, 6});
  for (double t : {0.0, 0.3, 1.0, 1.7, 2.5, 4.0}) {
    EXPECT_NEAR(grover_hamiltonian(inst, t), grover_hamiltonian_dense(inst, t), 1e-9) << t;
  }
}

TEST(Grover, RejectsBadInstances) {
  EXPECT_THROW(GroverInstance::make(2, {}), Error);
  EXPECT_THROW(GroverInstance::make(1, {0, 1}), Error);
  EXPECT_THROW(GroverInstance::make(2, {4}), Error);
  EXPECT_THROW(GroverInstance::make(2, {1, 1}), Error);
  EXPECT_THROW(grover_success(GroverInstance::make(2, {1}), -1), Error);
}

}  // namespace
}  // namespace qitk
