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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qitk/linalg.hpp"

namespace qitk::testing {

inline constexpr double kPi = std::numbers::pi;
inline const cplx kI{0.0, 1.0};

inline ::testing::AssertionResult MatNear(const char* a_expr, const char* b_expr,
                                          const char*, const Matrix& a,
                                          const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure()
           << a_expr << " is " << a.rows() << "x" << a.cols() << " but " << b_expr
           << " is " << b.rows() << "x" << b.cols();
  }
  const double err = (a - b).cwiseAbs().maxCoeff();
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a_expr << " vs " << b_expr
                                       << ": max entry deviation " << err
                                       << " exceeds " << tol << "\n"
                                       << a << "\nvs\n"
                                       << b;
}

#define EXPECT_MAT_NEAR(a, b, tol) \
  EXPECT_PRED_FORMAT3(::qitk::testing::MatNear, a, b, tol)
#define ASSERT_MAT_NEAR(a, b, tol) \
  ASSERT_PRED_FORMAT3(::qitk::testing::MatNear, a, b, tol)

inline Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Vector vec(std::initializer_list<cplx> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const cplx& x : xs) v(k++) = x;
  return v;
}

}  // namespace qitk::testing
