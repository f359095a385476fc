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

// Canonical constructors: two-mode squeezed vacuum, the two-mode standard
// form, and the pure three-mode standard form.

#pragma once

#include "cvdc/gaussian.hpp"

namespace cvdc {

/// Two-mode standard form: local variances a1, a2 on both quadratures,
/// x-correlation c12 and p-correlation d12.
struct TwoModeStandardForm {
  double a1 = kVacuumVariance;
  double a2 = kVacuumVariance;
  double c12 = 0.0;
  double d12 = 0.0;
};

/// Local variances of a pure three-mode state in standard form.
struct PureThreeModeParams {
  double a1 = kVacuumVariance;
  double a2 = kVacuumVariance;
  double a3 = kVacuumVariance;
};

/// Result of the triangle check on the rescaled coefficients
/// c_j = (a_j - 1/2) / (a1 - 1/2).
struct TriangleCheck {
  bool valid = false;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Off-diagonal pair (e_ij^+, e_ij^-) of the pure three-mode standard form.
struct OffDiagonal {
  double plus = 0.0;
  double minus = 0.0;
};

inline constexpr double kTriangleTolerance = 1e-12;
inline constexpr double kSqrtClampTolerance = 1e-12;

/// Zero-mean TMSV: a = cosh(2s)/2, c12 = sinh(2s)/2, d12 = -sinh(2s)/2.
GaussianState tmsv(double s);

/// Zero-mean state with the standard-form layout. Physicality is not
/// enforced; call validate_cm.
GaussianState two_mode_standard(const TwoModeStandardForm& params);

/// |c2 - c3| <= 1 <= c2 + c3. For a1 = 1/2 the state is valid only if every
/// mode is vacuum, and c2 = c3 = 0 are returned.
TriangleCheck triangle_valid(double a1, double a2, double a3);

/// e_ij^{+/-} for modes with variances (ai, aj), ak being the third mode.
/// Square-root arguments in [-1e-12, 0) are clamped to zero; anything more
/// negative throws DomainError.
OffDiagonal offdiagonal(double ai, double aj, double ak);

/// Pure three-mode standard form. Throws DomainError naming the violated
/// side of the triangle inequality.
GaussianState pure_three_mode(double a1, double a2, double a3);
GaussianState pure_three_mode(const PureThreeModeParams& params);

/// a_j = 1/2 + c_j (a1 - 1/2).
double variance_from_coefficient(double a1, double c);

/// Standard-form parameters read from a (c2, c3) scan coordinate.
PureThreeModeParams params_from_coefficients(double a1, double c2, double c3);

}  // namespace cvdc
