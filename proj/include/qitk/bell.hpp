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

#include <cstdint>

#include "qitk/states.hpp"

namespace qitk {

// Detector direction |a> = cos(a)|1> - sin(a)|0>. This swaps the roles of
// |0> and |1> relative to many texts; the sign convention is kept as is.

struct ChshSettings {
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
  ChshSettings shifted(double phi) const;
};

inline constexpr double kTsirelson = 2.8284271247461903;  // 2 sqrt 2

/// Angles that saturate the quantum bound for |psi->.
ChshSettings tsirelson_settings(double phi = 0.0);

Matrix detector_projector(double angle);
/// p(a, b) = Tr(rho P_a (x) P_b)
double joint_probability(const DensityMatrix& rho, double a, double b);
double correlator(const DensityMatrix& rho, double a, double b);
double chsh_value(const DensityMatrix& rho, const ChshSettings& s);

struct ChshOptimum {
  ChshSettings settings;
  double value = 0.0;
};
/// Grid search over the four angles followed by pattern-search refinement.
ChshOptimum optimize_settings(const DensityMatrix& rho, std::uint64_t seed);

struct ClassicalChshReport {
  int strategies = 0;
  double max_abs_value = 0.0;   // over deterministic strategies
  double mixture_value = 0.0;   // |<S>| of the uniform mixture of all draws
};
/// Local deterministic strategies A(x), B(y) in {+1, -1} from seeded tables.
ClassicalChshReport classical_chsh(int strategies, std::uint64_t seed);

}  // namespace qitk
