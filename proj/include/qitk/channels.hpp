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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qitk/states.hpp"

namespace qitk {

enum class ChannelKind { kTracePreserving, kSubNormalized };

/// Operator-sum representation {E_k}.
class KrausChannel {
 public:
  KrausChannel() = default;
  KrausChannel(std::vector<Matrix> elements, ChannelKind kind,
               double tol = kDefaultTol);

  const std::vector<Matrix>& elements() const { return elements_; }
  ChannelKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(elements_.front().rows()); }
  /// Residual of sum E^dag E = I.
  double completeness_residual() const;

 private:
  std::vector<Matrix> elements_;
  ChannelKind kind_ = ChannelKind::kTracePreserving;
};

/// Sum_k E_k rho E_k^dag without normalization.
Matrix apply(const KrausChannel& ch, const Matrix& rho);
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

struct SubNormalizedOutput {
  Matrix matrix;
  double probability;  // trace of the output
};
SubNormalizedOutput apply_subnormalized(const KrausChannel& ch, const DensityMatrix& rho);

/// Channel acting on one factor of a multipartite state.
DensityMatrix apply_on(const KrausChannel& ch, const DensityMatrix& rho, int subsystem);

/// bit_flip, phase_flip, bit_phase_flip, depolarizing, amplitude_damping,
/// phase_damping; param in [0, 1].
KrausChannel named_channel(const std::string& name, double param);
const std::vector<std::string>& named_channel_names();
KrausChannel unitary_channel(const Matrix& u);
/// E_2 after E_1: elements {F_j E_k}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

/// 1 - exp(-t / T): damping parameter accumulated over time t.
double damping_parameter(double t, double time_constant);

struct EnvironmentModel {
  Matrix joint_unitary;  // on system (x) environment
  StateVector env_init;
  int system_dim = 2;
  int env_dim = 2;
};

/// E_k = <e_k| U |e_0>.
KrausChannel kraus_from_environment(const EnvironmentModel& m, double tol = kDefaultTol);
/// Tr_E[U (rho (x) |e0><e0|) U^dag] evaluated directly.
DensityMatrix apply_environment(const EnvironmentModel& m, const DensityMatrix& rho);
/// U|psi>|0> = sum_k E_k|psi>|k>, completed to a unitary.
EnvironmentModel stinespring(const KrausChannel& ch, double tol = kDefaultTol);

/// Sum_jk |j><k| (x) E(|j><k|).
Matrix choi(const KrausChannel& ch);
double choi_distance(const KrausChannel& a, const KrausChannel& b);
bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol = kDefaultTol);
/// Minimal Kraus set from the Choi eigendecomposition (at most d^2 elements).
KrausChannel canonical_kraus(const KrausChannel& ch, double tol = kDefaultTol);
/// U with E_j = sum_k U_jk F_k after zero-padding, or nothing when the
/// channels differ.
std::optional<Matrix> find_kraus_unitary(const KrausChannel& a, const KrausChannel& b,
                                         double tol = kDefaultTol);

struct BlochAffineMap {
  std::array<std::array<double, 3>, 3> linear{};
  std::array<double, 3> offset{};
  BlochVector operator()(const BlochVector& v) const;
};
BlochAffineMap bloch_map(const KrausChannel& ch);

}  // namespace qitk
