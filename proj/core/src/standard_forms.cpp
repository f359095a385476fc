// Copyright 2026 The cvdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvdc/standard_forms.hpp"

#include <cmath>
#include <string>

#include "cvdc/errors.hpp"

namespace cvdc {

namespace {

double clamped_sqrt(double arg, const char* what) {
  if (arg < 0.0) {
    if (arg < -kSqrtClampTolerance) {
      throw DomainError(std::string("negative square-root argument in ") +
                        what + ": " + std::to_string(arg));
    }
    return 0.0;
  }
  return std::sqrt(arg);
}

bool is_vacuum_variance(double a) {
  return std::abs(a - kVacuumVariance) <= kTriangleTolerance;
}

}  // namespace

GaussianState tmsv(double s) {
  const double a = 0.5 * std::cosh(2.0 * s);
  const double c = 0.5 * std::sinh(2.0 * s);
  return two_mode_standard({a, a, c, -c});
}

GaussianState two_mode_standard(const TwoModeStandardForm& p) {
  Matrix cov = Matrix::Zero(4, 4);
  cov(0, 0) = cov(1, 1) = p.a1;
  cov(2, 2) = cov(3, 3) = p.a2;
  cov(0, 2) = cov(2, 0) = p.c12;
  cov(1, 3) = cov(3, 1) = p.d12;
  return GaussianState(Vector::Zero(4), std::move(cov));
}

TriangleCheck triangle_valid(double a1, double a2, double a3) {
  if (!(a1 > kVacuumVariance + kTriangleTolerance)) {
    const bool all_vacuum =
        is_vacuum_variance(a1) && is_vacuum_variance(a2) && is_vacuum_variance(a3);
    return {all_vacuum, 0.0, 0.0};
  }
  TriangleCheck check;
  check.c2 = (a2 - kVacuumVariance) / (a1 - kVacuumVariance);
  check.c3 = (a3 - kVacuumVariance) / (a1 - kVacuumVariance);
  check.valid = std::abs(check.c2 - check.c3) <= 1.0 + kTriangleTolerance &&
                check.c2 + check.c3 >= 1.0 - kTriangleTolerance;
  return check;
}

OffDiagonal offdiagonal(double ai, double aj, double ak) {
  const double diff2 = (ai - aj) * (ai - aj);
  const double sum2 = (ai + aj) * (ai + aj);
  const double km = (ak - 0.5) * (ak - 0.5);
  const double kp = (ak + 0.5) * (ak + 0.5);
  const double d = clamped_sqrt((diff2 - km) * (diff2 - kp), "e_ij (difference term)");
  const double s = clamped_sqrt((sum2 - km) * (sum2 - kp), "e_ij (sum term)");
  const double denom = 4.0 * std::sqrt(ai * aj);
  return {(d + s) / denom, (d - s) / denom};
}

GaussianState pure_three_mode(double a1, double a2, double a3) {
  for (const double a : {a1, a2, a3}) {
    if (!(a >= kVacuumVariance - kTriangleTolerance)) {
      throw DomainError("local variance " + std::to_string(a) +
                        " is below the vacuum value 1/2");
    }
  }
  const TriangleCheck tri = triangle_valid(a1, a2, a3);
  if (!tri.valid) {
    if (!(a1 > kVacuumVariance + kTriangleTolerance)) {
      throw DomainError(
          "a1 = 1/2 admits only the three-mode vacuum (a2 = a3 = 1/2)");
    }
    if (std::abs(tri.c2 - tri.c3) > 1.0 + kTriangleTolerance) {
      throw DomainError("triangle inequality violated: |c2 - c3| = " +
                        std::to_string(std::abs(tri.c2 - tri.c3)) + " > 1");
    }
    throw DomainError("triangle inequality violated: c2 + c3 = " +
                      std::to_string(tri.c2 + tri.c3) + " < 1");
  }

  const OffDiagonal e12 = offdiagonal(a1, a2, a3);
  const OffDiagonal e13 = offdiagonal(a1, a3, a2);
  const OffDiagonal e23 = offdiagonal(a2, a3, a1);

  Matrix cov = Matrix::Zero(6, 6);
  const double a[3] = {a1, a2, a3};
  for (int k = 0; k < 3; ++k) cov(2 * k, 2 * k) = cov(2 * k + 1, 2 * k + 1) = a[k];
  auto place = [&cov](int i, int j, const OffDiagonal& e) {
    cov(2 * i, 2 * j) = cov(2 * j, 2 * i) = e.plus;
    cov(2 * i + 1, 2 * j + 1) = cov(2 * j + 1, 2 * i + 1) = e.minus;
  };
  place(0, 1, e12);
  place(0, 2, e13);
  place(1, 2, e23);
  return GaussianState(Vector::Zero(6), std::move(cov));
}

GaussianState pure_three_mode(const PureThreeModeParams& p) {
  return pure_three_mode(p.a1, p.a2, p.a3);
}

double variance_from_coefficient(double a1, double c) {
  return kVacuumVariance + c * (a1 - kVacuumVariance);
}

PureThreeModeParams params_from_coefficients(double a1, double c2, double c3) {
  return {a1, variance_from_coefficient(a1, c2), variance_from_coefficient(a1, c3)};
}

}  // namespace cvdc
