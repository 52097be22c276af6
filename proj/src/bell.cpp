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

#include "qitk/bell.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qitk/gates.hpp"

namespace qitk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorKind::kDimensionMismatch, "CHSH needs a two-qubit state");
}

// Correlation tensor restricted to the X-Z plane where the detectors live.
struct XzTensor {
  double t[2][2];  // t[i][j] = Tr(rho s_i (x) s_j), s_0 = Z, s_1 = X

  explicit XzTensor(const DensityMatrix& rho) {
    const Matrix s[2] = {pauli(3), pauli(1)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) t[i][j] = (rho.matrix() * kron(s[i], s[j])).trace().real();
  }

  // Observable P_a - P_{a+pi/2} = -cos(2a) Z - sin(2a) X.
  double correlator(double a, double b) const {
    const double oa[2] = {-std::cos(2 * a), -std::sin(2 * a)};
    const double ob[2] = {-std::cos(2 * b), -std::sin(2 * b)};
    double e = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e += oa[i] * ob[j] * t[i][j];
    return e;
  }

  double chsh(const ChshSettings& s) const {
    return std::abs(correlator(s.alpha, s.beta) - correlator(s.alpha, s.beta_prime) +
                    correlator(s.alpha_prime, s.beta) + correlator(s.alpha_prime, s.beta_prime));
  }
};

}  // namespace

ChshSettings ChshSettings::shifted(double phi) const {
  return {alpha + phi, alpha_prime + phi, beta + phi, beta_prime + phi};
}

ChshSettings tsirelson_settings(double phi) {
  return ChshSettings{0.0, kPi / 4, kPi / 8, 3 * kPi / 8}.shifted(phi);
}

Matrix detector_projector(double angle) {
  if (!std::isfinite(angle)) throw Error(ErrorKind::kInvalidArgument, "non-finite detector angle");
  Vector v(2);
  v << -std::sin(angle), std::cos(angle);
  return v * v.adjoint();
}

double joint_probability(const DensityMatrix& rho, double a, double b) {
  require_two_qubits(rho);
  return (rho.matrix() * kron(detector_projector(a), detector_projector(b))).trace().real();
}

double correlator(const DensityMatrix& rho, double a, double b) {
  const double h = kPi / 2;
  return joint_probability(rho, a, b) + joint_probability(rho, a + h, b + h) -
         joint_probability(rho, a, b + h) - joint_probability(rho, a + h, b);
}

double chsh_value(const DensityMatrix& rho, const ChshSettings& s) {
  for (double x : {s.alpha, s.alpha_prime, s.beta, s.beta_prime}) {
    if (!std::isfinite(x)) throw Error(ErrorKind::kInvalidArgument, "non-finite CHSH angle");
  }
  return std::abs(correlator(rho, s.alpha, s.beta) - correlator(rho, s.alpha, s.beta_prime) +
                  correlator(rho, s.alpha_prime, s.beta) + correlator(rho, s.alpha_prime, s.beta_prime));
}

ChshOptimum optimize_settings(const DensityMatrix& rho, std::uint64_t seed) {
  require_two_qubits(rho);
  const XzTensor t(rho);
  constexpr int kGrid = 16;
  const double step = kPi / kGrid;
  std::array<double, 4> best{};
  double best_v = -1.0;
  for (int a = 0; a < kGrid; ++a)
    for (int ap = 0; ap < kGrid; ++ap)
      for (int b = 0; b < kGrid; ++b)
        for (int bp = 0; bp < kGrid; ++bp) {
          const ChshSettings s{a * step, ap * step, b * step, bp * step};
          const double v = t.chsh(s);
          if (v > best_v) {
            best_v = v;
            best = {s.alpha, s.alpha_prime, s.beta, s.beta_prime};
          }
        }
  auto value = [&](const std::array<double, 4>& x) { return t.chsh({x[0], x[1], x[2], x[3]}); };
  auto refine = [&](std::array<double, 4> x) {
    double v = value(x);
    for (double h = step / 2; h > 1e-9; h /= 2) {
      bool moved = true;
      while (moved) {
        moved = false;
        for (int k = 0; k < 4; ++k)
          for (double sgn : {1.0, -1.0}) {
            std::array<double, 4> y = x;
            y[k] += sgn * h;
            const double vy = value(y);
            if (vy > v + 1e-15) {
              x = y;
              v = vy;
              moved = true;
            }
          }
      }
    }
    return std::pair{x, v};
  };
  auto [x, v] = refine(best);
  // A few seeded restarts guard against a poor grid basin.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, kPi);
  for (int r = 0; r < 4; ++r) {
    auto [y, vy] = refine({uni(rng), uni(rng), uni(rng), uni(rng)});
    if (vy > v) {
      x = y;
      v = vy;
    }
  }
  const ChshSettings s{x[0], x[1], x[2], x[3]};
  return {s, chsh_value(rho, s)};
}

ClassicalChshReport classical_chsh(int strategies, std::uint64_t seed) {
  if (strategies < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one strategy");
  std::mt19937_64 rng(seed);
  ClassicalChshReport r;
  r.strategies = strategies;
  double sum = 0.0;
  for (int k = 0; k < strategies; ++k) {
    // Outcomes A(alpha), A(alpha'), B(beta), B(beta') fixed by the hidden variable.
    const std::uint64_t bits = rng();
    auto sign = [bits](int i) { return ((bits >> i) & 1) ? 1.0 : -1.0; };
    const double a = sign(0), ap = sign(1), b = sign(2), bp = sign(3);
    const double s = a * b - a * bp + ap * b + ap * bp;
    r.max_abs_value = std::max(r.max_abs_value, std::abs(s));
    sum += s;
  }
  r.mixture_value = std::abs(sum / strategies);
  return r;
}

}  // namespace qitk
