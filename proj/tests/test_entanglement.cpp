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

#include "qitk/entanglement.hpp"

#include <algorithm>

#include "qitk/gates.hpp"
#include "qitk/infotheory.hpp"
#include "test_util.hpp"

namespace qitk {
namespace {

using testing::mat2;
using testing::vec;

StateVector two_qubit(double a, double b) {
  return StateVector({2, 2}, vec({std::sqrt(a), 0, 0, std::sqrt(b)}));
}

DensityMatrix local_conjugate(const DensityMatrix& rho, std::uint64_t seed) {
  const int da = rho.dims()[0], db = rho.dims()[1];
  const Matrix u = kron(random_unitary(da, seed), random_unitary(db, seed + 1));
  return DensityMatrix(rho.dims(), u * rho.matrix() * u.adjoint());
}

TEST(Majorization, BasicCases) {
  const MajorizationReport same = majorizes({0.5, 0.3, 0.2}, {0.2, 0.5, 0.3});
  EXPECT_TRUE(same.x_majorized_by_y);
  EXPECT_TRUE(same.y_majorized_by_x);
  const MajorizationReport inc = majorizes({0.4, 0.4, 0.2}, {0.48, 0.26, 0.26});
  EXPECT_FALSE(inc.x_majorized_by_y);
  EXPECT_FALSE(inc.y_majorized_by_x);
  ASSERT_EQ(inc.prefix_sums_x.size(), 3u);
  EXPECT_NEAR(inc.prefix_sums_x[1], 0.8, 1e-15);
  EXPECT_NEAR(inc.prefix_sums_y[1], 0.74, 1e-15);
  EXPECT_THROW(majorizes({1.2, -0.2}, {0.5, 0.5}), Error);
  // Unequal totals cannot be ordered in either direction.
  const MajorizationReport totals = majorizes({0.5, 0.5}, {0.5, 0.6});
  EXPECT_FALSE(totals.x_majorized_by_y);
  EXPECT_FALSE(totals.y_majorized_by_x);
}

TEST(Majorization, UniformIsMajorizedByEverything) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int d = 2 + static_cast<int>(seed % 5);
    const RealVector w = schmidt(random_pure({d, d}, seed), 1).weights();
    std::vector<double> y(w.data(), w.data() + w.size());
    EXPECT_TRUE(majorizes(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d), y, 1e-10).x_majorized_by_y);
  }
}

TEST(Majorization, ZeroPaddingForUnequalLengths) {
  const MajorizationReport r = majorizes({0.5, 0.5}, {0.4, 0.3, 0.3});
  EXPECT_FALSE(r.x_majorized_by_y);
  EXPECT_TRUE(r.y_majorized_by_x);
}

TEST(Locc, MaximallyEntangledReachesAnything) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const StateVector phi = random_pure({3, 3}, seed);
    EXPECT_TRUE(locc_convertible(maximally_entangled(3), phi));
    EXPECT_TRUE(locc_convertible(phi, phi));
  }
}

TEST(Locc, IncomparablePair) {
  const double a = 0.4, b = 0.4, c = 0.2;
  const StateVector psi({3, 3}, vec({std::sqrt(a), 0, 0, 0, std::sqrt(b), 0, 0, 0, std::sqrt(c)}));
  const StateVector phi({3, 3}, vec({std::sqrt(0.48), 0, 0, 0, std::sqrt(0.26), 0, 0, 0, std::sqrt(0.26)}));
  EXPECT_FALSE(locc_convertible(psi, phi));
  EXPECT_FALSE(locc_convertible(phi, psi));
}

TEST(Locc, WorkedProtocolReachesTarget) {
  const double l1 = 0.8, l2 = 0.2;
  const std::vector<Matrix> alice = {mat2(std::sqrt(l1), 0, 0, std::sqrt(l2)),
                                     mat2(0, std::sqrt(l1), std::sqrt(l2), 0)};
  const std::vector<Matrix> bob = {Matrix::Identity(2, 2), pauli(1)};
  const DensityMatrix in(bell_phi_plus());
  const DensityMatrix out = locc_one_way(in, alice, bob);
  const StateVector phi = two_qubit(l1, l2);
  EXPECT_MAT_NEAR(out.matrix(), phi.projector(), 1e-12);
  EXPECT_TRUE(locc_convertible(bell_phi_plus(), phi));
  EXPECT_FALSE(locc_convertible(phi, bell_phi_plus()));
  // Monotones do not increase along the protocol.
  EXPECT_LE(concurrence_mixed_2q(out), concurrence_mixed_2q(in) + 1e-9);
  EXPECT_LE(negativity(out), negativity(in) + 1e-9);
  EXPECT_LE(entanglement_of_formation_2q(out), entanglement_of_formation_2q(in) + 1e-9);
  EXPECT_LE(entanglement_entropy(phi), entanglement_entropy(bell_phi_plus()) + 1e-12);
}

TEST(EntanglementEntropy, Examples) {
  EXPECT_NEAR(entanglement_entropy(bell_phi_plus()), 1.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(tensor(random_pure({2}, 1), random_pure({3}, 2))), 0.0, 1e-9);
  EXPECT_NEAR(entanglement_entropy(maximally_entangled(3)), std::log2(3.0), 1e-12);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const StateVector psi = random_pure({3, 3}, seed);
    const RealVector w = schmidt(psi, 1).weights();
    const double e = entanglement_entropy(psi);
    EXPECT_NEAR(e, shannon(std::vector<double>(w.data(), w.data() + w.size())), 1e-12);
    EXPECT_NEAR(e, von_neumann(reduce(DensityMatrix(psi), {0})), 1e-9);
    EXPECT_LE(e, std::log2(3.0) + 1e-12);
  }
}

TEST(Concurrence, PureForms) {
  EXPECT_NEAR(concurrence_pure(bell_phi_plus()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_pure(tensor(random_pure({2}, 1), random_pure({2}, 2))), 0.0, 1e-7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StateVector psi = random_pure({2, 2}, seed);
    const double c = concurrence_pure(psi);
    EXPECT_NEAR(concurrence_spin_flip(psi), c, 1e-9);
    EXPECT_NEAR(concurrence_determinant(psi), c, 1e-9);
    const StateVector q = random_pure({3, 4}, seed);
    EXPECT_LE(concurrence_pure(q), std::sqrt(2 * (1 - 1.0 / 3)) + 1e-12);
  }
  EXPECT_NEAR(concurrence_pure(maximally_entangled(3)), std::sqrt(2 * (1 - 1.0 / 3)), 1e-12);
}

TEST(Concurrence, MixedAgreesWithPure) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const StateVector psi = random_pure({2, 2}, seed);
    EXPECT_NEAR(concurrence_mixed_2q(DensityMatrix(psi)), concurrence_pure(psi), 1e-9);
  }
  EXPECT_NEAR(concurrence_mixed_2q(DensityMatrix(bell_psi_minus())), 1.0, 1e-9);
}

TEST(Concurrence, WernerFamily) {
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    const DensityMatrix w = werner_state(p);
    EXPECT_NEAR(concurrence_mixed_2q(w), std::max(0.0, (3 * p - 1) / 2), 1e-9) << p;
    const bool entangled = p > 1.0 / 3 + 1e-12;
    EXPECT_EQ(negativity(w) > 1e-12, entangled) << p;
    EXPECT_EQ(!is_ppt(w), entangled) << p;
  }
  EXPECT_NEAR(entanglement_of_formation_2q(werner_state(1.0)), 1.0, 1e-9);
  EXPECT_THROW(werner_state(1.2), Error);
}

TEST(Concurrence, ProductMixedStatesAreUnentangled) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = tensor(random_density({2}, seed), random_density({2}, seed + 1));
    EXPECT_NEAR(concurrence_mixed_2q(rho), 0.0, 1e-9);
    EXPECT_TRUE(is_ppt(rho));
  }
  EXPECT_THROW(concurrence_mixed_2q(random_density({2, 3}, 1)), Error);
}

TEST(Formation, EndpointsAndMonotone) {
  EXPECT_NEAR(eof_from_concurrence(0.0), 0.0, 1e-15);
  EXPECT_NEAR(eof_from_concurrence(1.0), 1.0, 1e-15);
  double prev = -1;
  for (int k = 0; k <= 100; ++k) {
    const double e = eof_from_concurrence(k / 100.0);
    EXPECT_GT(e, prev);
    prev = e;
  }
  EXPECT_THROW(eof_from_concurrence(1.5), Error);
}

TEST(Formation, PureStatesMatchEntanglementEntropy) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StateVector psi = random_pure({2, 2}, seed);
    EXPECT_NEAR(entanglement_of_formation_2q(DensityMatrix(psi)), entanglement_entropy(psi), 1e-8);
  }
}

TEST(PartialTranspose, BellSpectrum) {
  const DensityMatrix bell(bell_phi_plus());
  const RealVector ev = eigenvalues_hermitian(partial_transpose(bell.matrix(), {2, 2}, 0));
  EXPECT_NEAR(ev(0), -0.5, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev(k), 0.5, 1e-12);
  EXPECT_NEAR(negativity(bell), 0.5, 1e-12);
  EXPECT_FALSE(is_ppt(bell));
}

TEST(PartialTranspose, TransposesOnlyOneFactor) {
  const Matrix a = random_density({2}, 1).matrix(), b = random_density({3}, 2).matrix();
  const Matrix m = kron(a, b);
  EXPECT_MAT_NEAR(partial_transpose(m, {2, 3}, 0), kron(a.transpose(), b), 0.0);
  EXPECT_MAT_NEAR(partial_transpose(m, {2, 3}, 1), kron(a, b.transpose()), 0.0);
  EXPECT_MAT_NEAR(partial_transpose(partial_transpose(m, {2, 3}, 0), {2, 3}, 1), m.transpose(), 0.0);
  EXPECT_THROW(partial_transpose(m, {2, 2}, 0), Error);
  EXPECT_THROW(partial_transpose(m, {2, 3}, 2), Error);
}

TEST(PartialTranspose, SeparableMixturesArePpt) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int db = 2 + static_cast<int>(seed % 2);
    Matrix m = Matrix::Zero(2 * db, 2 * db);
    const double p[3] = {0.5, 0.3, 0.2};
    for (int i = 0; i < 3; ++i)
      m += p[i] * kron(random_density({2}, seed * 10 + i).matrix(), random_density({db}, seed * 10 + i + 5).matrix());
    const DensityMatrix rho({2, db}, m);
    EXPECT_NEAR(partial_transpose(m, {2, db}, 0).trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(is_ppt(rho));
    EXPECT_NEAR(negativity(rho), 0.0, 1e-12);
  }
}

TEST(PartialTranspose, NegativityIndependentOfSide) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density({2, 3}, seed);
    EXPECT_NEAR(negativity(rho, 0), negativity(rho, 1), 1e-10);
    EXPECT_GE(negativity(rho), 0.0);
    EXPECT_EQ(negativity(rho) > 1e-10, !is_ppt(rho, 0, 1e-10));
  }
}

TEST(Invariance, LocalUnitariesPreserveMonotones) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density({2, 2}, seed);
    const DensityMatrix v = local_conjugate(rho, seed + 500);
    EXPECT_NEAR(concurrence_mixed_2q(v), concurrence_mixed_2q(rho), 1e-9);
    EXPECT_NEAR(entanglement_of_formation_2q(v), entanglement_of_formation_2q(rho), 1e-9);
    EXPECT_NEAR(negativity(v), negativity(rho), 1e-9);
    const StateVector psi = random_pure({2, 3}, seed);
    const Matrix u = kron(random_unitary(2, seed), random_unitary(3, seed + 9));
    const StateVector upsi({2, 3}, u * psi.amplitudes());
    EXPECT_NEAR(entanglement_entropy(upsi), entanglement_entropy(psi), 1e-9);
    EXPECT_NEAR(concurrence_pure(upsi), concurrence_pure(psi), 1e-9);
  }
}

TEST(MaximallyEntangled, Structure) {
  EXPECT_TRUE(equal_up_to_phase(maximally_entangled(2), bell_phi_plus()));
  for (int d = 2; d <= 5; ++d) {
    const RealVector w = schmidt(maximally_entangled(d), 1).weights();
    ASSERT_EQ(w.size(), d);
    for (int k = 0; k < d; ++k) EXPECT_NEAR(w(k), 1.0 / d, 1e-12);
  }
  EXPECT_THROW(maximally_entangled(1), Error);
}

TEST(RoofBound, NeverBelowExactConcurrence) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density({2, 2}, seed);
    const double bound = concurrence_roof_upper_bound(rho, 200, seed);
    EXPECT_GE(bound, concurrence_mixed_2q(rho) - 1e-9);
  }
  const StateVector psi = random_pure({2, 2}, 3);
  EXPECT_NEAR(concurrence_roof_upper_bound(DensityMatrix(psi), 10, 1), concurrence_pure(psi), 1e-9);
}

TEST(SchurConcavity, KnownFunctions) {
  const auto entropy = [](const std::vector<double>& x) { return shannon(x); };
  EXPECT_TRUE(schur_concavity_check(entropy, 4, 200, 1).passes());
  const auto concurrence = [](const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(std::max(0.0, 2 * (1 - s)));
  };
  EXPECT_TRUE(schur_concavity_check(concurrence, 3, 200, 2).passes());
  const auto largest = [](const std::vector<double>& x) { return *std::max_element(x.begin(), x.end()); };
  const SchurConcavityReport r = schur_concavity_check(largest, 3, 200, 3);
  EXPECT_TRUE(r.symmetric);
  EXPECT_FALSE(r.passes());
  const auto first = [](const std::vector<double>& x) { return x[0]; };
  EXPECT_FALSE(schur_concavity_check(first, 3, 50, 4).symmetric);
}

}  // namespace
}  // namespace qitk
