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

#include "qitk/channels.hpp"

#include <algorithm>

#include "qitk/gates.hpp"

#include "test_util.hpp"

namespace qitk {
namespace {

using testing::kI;
using testing::mat2;

using Table = std::array<std::array<double, 3>, 3>;

Table diag3(double a, double b, double c) {
  Table t{};
  t[0][0] = a;
  t[1][1] = b;
  t[2][2] = c;
  return t;
}

void expect_bloch(const KrausChannel& ch, const Table& linear, const std::array<double, 3>& offset,
                  double tol) {
  const BlochAffineMap m = bloch_map(ch);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(m.offset[i], offset[i], tol) << "offset " << i;
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(m.linear[i][j], linear[i][j], tol) << i << "," << j;
  }
}

TEST(NamedChannels, BlochRescalingTables) {
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
    const double q = 1 - 2 * p;
    expect_bloch(named_channel("bit_flip", p), diag3(1, q, q), {0, 0, 0}, 1e-12);
    expect_bloch(named_channel("phase_flip", p), diag3(q, q, 1), {0, 0, 0}, 1e-12);
    expect_bloch(named_channel("bit_phase_flip", p), diag3(q, 1, q), {0, 0, 0}, 1e-12);
    expect_bloch(named_channel("depolarizing", p), diag3(1 - p, 1 - p, 1 - p), {0, 0, 0}, 1e-12);
    const double s = std::sqrt(1 - p);
    expect_bloch(named_channel("amplitude_damping", p), diag3(s, s, 1 - p), {0, 0, p}, 1e-12);
    expect_bloch(named_channel("phase_damping", p), diag3(s, s, 1), {0, 0, 0}, 1e-12);
  }
}

TEST(NamedChannels, ElementsMatchDefinitions) {
  const double p = 0.3;
  const auto bf = named_channel("bit_flip", p).elements();
  ASSERT_EQ(bf.size(), 2u);
  EXPECT_MAT_NEAR(bf[0], std::sqrt(1 - p) * Matrix::Identity(2, 2), 1e-15);
  EXPECT_MAT_NEAR(bf[1], std::sqrt(p) * pauli(1), 1e-15);
  const auto dep = named_channel("depolarizing", p).elements();
  ASSERT_EQ(dep.size(), 4u);
  EXPECT_MAT_NEAR(dep[0], std::sqrt(1 - 0.75 * p) * Matrix::Identity(2, 2), 1e-15);
  for (int k = 1; k <= 3; ++k) EXPECT_MAT_NEAR(dep[k], std::sqrt(p) / 2 * pauli(k), 1e-15);
  const auto ad = named_channel("amplitude_damping", p).elements();
  EXPECT_MAT_NEAR(ad[0], mat2(1, 0, 0, std::sqrt(1 - p)), 1e-15);
  EXPECT_MAT_NEAR(ad[1], mat2(0, std::sqrt(p), 0, 0), 1e-15);
  const auto pd = named_channel("phase_damping", p).elements();
  EXPECT_MAT_NEAR(pd[0], mat2(1, 0, 0, std::sqrt(1 - p)), 1e-15);
  EXPECT_MAT_NEAR(pd[1], mat2(0, 0, 0, std::sqrt(p)), 1e-15);
}

TEST(NamedChannels, AmplitudeDampingMovesExcitation) {
  const double g = 0.35;
  const Matrix e1 = named_channel("amplitude_damping", g).elements()[1];
  const Matrix one = mat2(0, 0, 0, 1);
  EXPECT_MAT_NEAR(e1 * one * e1.adjoint(), g * mat2(1, 0, 0, 0), 1e-15);
}

TEST(NamedChannels, ZeroParameterIsIdentity) {
  const DensityMatrix rho = random_density({2}, 3);
  for (const std::string& name : named_channel_names()) {
    EXPECT_MAT_NEAR(qitk::apply(named_channel(name, 0.0), rho).matrix(), rho.matrix(), 1e-15) << name;
  }
}

TEST(NamedChannels, CompleteAndCompletelyPositive) {
  for (const std::string& name : named_channel_names())
    for (double p : {0.0, 0.2, 0.7, 1.0}) {
      const KrausChannel ch = named_channel(name, p);
      EXPECT_LT(ch.completeness_residual(), 1e-10) << name;
      EXPECT_TRUE(is_psd(choi(ch), 1e-12)) << name;
    }
}

TEST(NamedChannels, RejectsBadInput) {
  EXPECT_THROW(named_channel("bit_flip", 1.5), Error);
  EXPECT_THROW(named_channel("bit_flip", -0.1), Error);
  EXPECT_THROW(named_channel("teleport", 0.1), Error);
}

TEST(NamedChannels, FullDepolarizingGivesMaximallyMixed) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_density({2}, seed);
    EXPECT_MAT_NEAR(qitk::apply(named_channel("depolarizing", 1.0), rho).matrix(),
                    0.5 * Matrix::Identity(2, 2), 1e-14);
  }
}

TEST(NamedChannels, PhaseDampingIsPhaseFlip) {
  for (double lambda : {0.0, 0.1, 0.4, 0.8, 1.0}) {
    const double p = 0.5 * (1 - std::sqrt(1 - lambda));
    const KrausChannel pd = named_channel("phase_damping", lambda), pf = named_channel("phase_flip", p);
    EXPECT_LT(choi_distance(pd, pf), 1e-10);
    EXPECT_TRUE(channels_equal(pd, pf));
    const DensityMatrix rho = random_density({2}, 17);
    EXPECT_MAT_NEAR(qitk::apply(pd, rho).matrix(), qitk::apply(pf, rho).matrix(), 1e-12);
  }
}

TEST(NamedChannels, FlipCompositionsShrinkEveryAxis) {
  const double p = 0.2, q = (1 - 2 * p) * (1 - 2 * p);
  const std::vector<std::string> names = {"bit_flip", "phase_flip", "bit_phase_flip"};
  std::vector<int> order = {0, 1, 2};
  do {
    const KrausChannel c = compose(named_channel(names[order[2]], p),
                                   compose(named_channel(names[order[1]], p), named_channel(names[order[0]], p)));
    expect_bloch(c, diag3(q, q, q), {0, 0, 0}, 1e-10);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(KrausChannel, ValidatesCompleteness) {
  EXPECT_THROW(KrausChannel(std::vector<Matrix>{Matrix::Identity(2, 2), pauli(1)}, ChannelKind::kTracePreserving), Error);
  EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}, ChannelKind::kTracePreserving),
               Error);
  EXPECT_THROW(KrausChannel({}, ChannelKind::kTracePreserving), Error);
  // A projector alone is a valid sub-normalized operation.
  const KrausChannel sub({mat2(1, 0, 0, 0)}, ChannelKind::kSubNormalized);
  EXPECT_THROW(KrausChannel({2.0 * Matrix::Identity(2, 2)}, ChannelKind::kSubNormalized), Error);
  const DensityMatrix plus({2}, 0.5 * mat2(1, 1, 1, 1));
  const SubNormalizedOutput out = apply_subnormalized(sub, plus);
  EXPECT_NEAR(out.probability, 0.5, 1e-15);
  EXPECT_THROW(qitk::apply(sub, plus), Error);
}

TEST(KrausChannel, IdentityChannelLeavesStateAlone) {
  const DensityMatrix rho = random_density({3}, 2);
  const KrausChannel id({Matrix::Identity(3, 3)}, ChannelKind::kTracePreserving);
  EXPECT_MAT_NEAR(qitk::apply(id, rho).matrix(), rho.matrix(), 0.0);
}

TEST(KrausChannel, LinearOnMixtures) {
  const KrausChannel ch = compose(named_channel("amplitude_damping", 0.3), named_channel("depolarizing", 0.2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix a = random_density({2}, seed), b = random_density({2}, seed + 100);
    const double p = 0.37;
    const Matrix mix = p * a.matrix() + (1 - p) * b.matrix();
    EXPECT_MAT_NEAR(qitk::apply(ch, mix),
                    p * qitk::apply(ch, a.matrix()) + (1 - p) * qitk::apply(ch, b.matrix()), 1e-10);
  }
}

TEST(KrausChannel, ApplyOnOneFactor) {
  const KrausChannel ch = named_channel("amplitude_damping", 0.4);
  const DensityMatrix a = random_density({2}, 1), b = random_density({2}, 2);
  const DensityMatrix out = apply_on(ch, tensor(a, b), 1);
  EXPECT_MAT_NEAR(out.matrix(), kron(a.matrix(), qitk::apply(ch, b.matrix())), 1e-12);
  EXPECT_THROW(apply_on(ch, tensor(a, b), 2), Error);
}

TEST(KrausChannel, DampingParameterFromTimeConstant) {
  EXPECT_NEAR(damping_parameter(0.0, 2.0), 0.0, 0.0);
  EXPECT_NEAR(damping_parameter(2.0, 2.0), 1 - std::exp(-1.0), 1e-15);
  EXPECT_THROW(damping_parameter(1.0, 0.0), Error);
}

TEST(Environment, CnotWithEnvironmentInZeroDephases) {
  EnvironmentModel m{standard_gate("CNOT").dense(), StateVector::qubits(1, 0), 2, 2};
  const KrausChannel ch = kraus_from_environment(m);
  const Matrix p0 = mat2(1, 0, 0, 0), p1 = mat2(0, 0, 0, 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_density({2}, seed);
    const Matrix expected = p0 * rho.matrix() * p0 + p1 * rho.matrix() * p1;
    EXPECT_MAT_NEAR(qitk::apply(ch, rho).matrix(), expected, 1e-12);
    EXPECT_MAT_NEAR(apply_environment(m, rho).matrix(), expected, 1e-12);
  }
}

TEST(Environment, ProductUnitaryGivesSingleElement) {
  const Matrix us = random_unitary(2, 1), ue = random_unitary(2, 2);
  EnvironmentModel m{kron(us, ue), StateVector::qubits(1, 0), 2, 2};
  const KrausChannel ch = kraus_from_environment(m);
  const DensityMatrix rho = random_density({2}, 5);
  EXPECT_MAT_NEAR(qitk::apply(ch, rho).matrix(), us * rho.matrix() * us.adjoint(), 1e-12);
  EXPECT_TRUE(channels_equal(ch, unitary_channel(us)));
}

TEST(Environment, KrausMatchesPartialTraceOnRandomModels) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EnvironmentModel m{random_unitary(6, seed), random_pure({3}, seed + 50), 2, 3};
    const KrausChannel ch = kraus_from_environment(m);
    const DensityMatrix rho = random_density({2}, seed + 7);
    EXPECT_MAT_NEAR(qitk::apply(ch, rho).matrix(), apply_environment(m, rho).matrix(), 1e-9);
  }
  EnvironmentModel bad{Matrix::Identity(4, 4) * 2.0, StateVector::qubits(1, 0), 2, 2};
  EXPECT_THROW(kraus_from_environment(bad), Error);
}

TEST(Stinespring, RoundTripPreservesChoi) {
  std::vector<KrausChannel> channels;
  for (const std::string& name : named_channel_names()) channels.push_back(named_channel(name, 0.3));
  channels.push_back(unitary_channel(random_unitary(3, 4)));
  channels.push_back(compose(named_channel("depolarizing", 0.5), named_channel("amplitude_damping", 0.2)));
  for (const KrausChannel& ch : channels) {
    const EnvironmentModel m = stinespring(ch);
    EXPECT_TRUE(is_unitary(m.joint_unitary, 1e-10));
    EXPECT_GE(m.env_dim, 2);
    EXPECT_LT(choi_distance(kraus_from_environment(m), ch), 1e-9);
  }
}

TEST(Stinespring, UnitaryChannelActsAsUOnReferenceSector) {
  const Matrix u = random_unitary(2, 9);
  const EnvironmentModel m = stinespring(unitary_channel(u));
  EXPECT_EQ(m.env_dim, 2);
  const Matrix ue = kron(u, Matrix::Identity(2, 2));
  // Columns |j>|e0> carry U|j>|e0>.
  for (int j = 0; j < 2; ++j) EXPECT_MAT_NEAR(Matrix(m.joint_unitary.col(2 * j)), Matrix(ue.col(2 * j)), 1e-12);
}

TEST(Stinespring, RejectsSubNormalized) {
  EXPECT_THROW(stinespring(KrausChannel({mat2(1, 0, 0, 0)}, ChannelKind::kSubNormalized)), Error);
}

TEST(Choi, IdentityAndCompletelyDepolarizing) {
  const KrausChannel id({Matrix::Identity(2, 2)}, ChannelKind::kTracePreserving);
  EXPECT_MAT_NEAR(choi(id), 2.0 * bell_phi_plus().projector(), 1e-15);
  EXPECT_MAT_NEAR(choi(named_channel("depolarizing", 1.0)), 0.5 * Matrix::Identity(4, 4), 1e-15);
  const KrausChannel ch = named_channel("amplitude_damping", 0.6);
  EXPECT_NEAR(choi(ch).trace().real(), 2.0, 1e-14);
}

TEST(KrausFreedom, DiagonalProjectorPairGivesHadamard) {
  const Matrix f1 = mat2(1, 0, 0, 0), f2 = mat2(0, 0, 0, 1);
  const KrausChannel e({(f1 + f2) / std::sqrt(2.0), (f1 - f2) / std::sqrt(2.0)}, ChannelKind::kTracePreserving);
  const KrausChannel f({f1, f2}, ChannelKind::kTracePreserving);
  ASSERT_TRUE(channels_equal(e, f));
  const auto u = find_kraus_unitary(e, f);
  ASSERT_TRUE(u.has_value());
  EXPECT_MAT_NEAR(*u, standard_gate("H").dense(), 1e-12);
}

TEST(KrausFreedom, SelfAndPaddedSets) {
  const KrausChannel a = named_channel("depolarizing", 0.4);
  const auto u = find_kraus_unitary(a, a);
  ASSERT_TRUE(u.has_value());
  EXPECT_TRUE(is_unitary(*u, 1e-10));
  // Canonical Kraus set has fewer elements; the relation holds after zero-padding.
  const KrausChannel c = canonical_kraus(named_channel("amplitude_damping", 0.3));
  const KrausChannel b = named_channel("amplitude_damping", 0.3);
  const auto w = find_kraus_unitary(b, c);
  ASSERT_TRUE(w.has_value());
  for (std::size_t j = 0; j < b.elements().size(); ++j) {
    Matrix sum = Matrix::Zero(2, 2);
    for (std::size_t k = 0; k < c.elements().size(); ++k) sum += (*w)(j, k) * c.elements()[k];
    EXPECT_MAT_NEAR(sum, b.elements()[j], 1e-9);
  }
}

TEST(KrausFreedom, DifferentChannelsHaveNoUnitary) {
  const KrausChannel a = named_channel("bit_flip", 0.3), b = named_channel("phase_flip", 0.3);
  EXPECT_FALSE(channels_equal(a, b));
  EXPECT_GT(choi_distance(a, b), 0.1);
  EXPECT_FALSE(find_kraus_unitary(a, b).has_value());
}

TEST(CanonicalKraus, AtMostDSquaredElements) {
  // Ten random unitaries mixed uniformly on a qutrit.
  std::vector<Matrix> elements;
  for (int k = 0; k < 10; ++k) elements.push_back(random_unitary(3, 20 + k) / std::sqrt(10.0));
  const KrausChannel big(elements, ChannelKind::kTracePreserving);
  const KrausChannel c = canonical_kraus(big);
  EXPECT_LE(c.elements().size(), 9u);
  EXPECT_TRUE(channels_equal(c, big));
  EXPECT_LT(c.completeness_residual(), 1e-10);
}

TEST(BlochMap, TracePreservingMapsStayInBall) {
  for (const std::string& name : named_channel_names()) {
    const BlochAffineMap m = bloch_map(named_channel(name, 0.45));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const BlochVector v = bloch_from_qubit(DensityMatrix(random_pure({2}, seed)));
      EXPECT_LE(m(v).norm(), 1.0 + 1e-12) << name;
    }
  }
  EXPECT_THROW(bloch_map(unitary_channel(Matrix::Identity(3, 3))), Error);
}

TEST(BlochMap, AgreesWithApply) {
  const KrausChannel ch = compose(named_channel("amplitude_damping", 0.3), unitary_channel(random_unitary(2, 6)));
  const BlochAffineMap m = bloch_map(ch);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density({2}, seed);
    const BlochVector direct = bloch_from_qubit(qitk::apply(ch, rho));
    const BlochVector mapped = m(bloch_from_qubit(rho));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(direct.v[i], mapped.v[i], 1e-12);
  }
}

}  // namespace
}  // namespace qitk
