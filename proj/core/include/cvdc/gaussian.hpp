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

// Mean-vector / covariance-matrix description of N-mode Gaussian states.
//
// Conventions used everywhere in cvdc:
//   * [x, p] = i, so the vacuum has variance 1/2 in every quadrature.
//   * Phase-space ordering is interleaved: (x1, p1, x2, p2, ..., xN, pN).
//   * A displacement by the complex amplitude alpha shifts (x, p) by
//     sqrt(2) * (Re alpha, Im alpha), i.e. x = (a + a^dagger) / sqrt(2).

#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace cvdc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Convention tag stored in state files; loaders reject anything else.
inline constexpr std::string_view kConvention = "hbar=1,vac=1/2";

inline constexpr double kVacuumVariance = 0.5;
inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kUncertaintyTolerance = -1e-10;
inline constexpr double kSymplecticTolerance = 1e-10;

/// Block-diagonal symplectic form, one [[0, 1], [-1, 0]] block per mode.
Matrix symplectic_form(int n_modes);

/// N-mode Gaussian state. Immutable once built; only the shape is checked
/// on construction (physicality is reported by validate_cm, not enforced,
/// so boundary probes can be represented).
class GaussianState {
 public:
  GaussianState(Vector mean, Matrix cov);

  static GaussianState vacuum(int n_modes);

  int n_modes() const noexcept { return n_modes_; }
  const Vector& mean() const noexcept { return mean_; }
  const Matrix& cov() const noexcept { return cov_; }

  /// 2x2 covariance block of one mode.
  Eigen::Matrix2d mode_block(int mode) const;

 private:
  int n_modes_;
  Vector mean_;
  Matrix cov_;
};

/// Real 2N x 2N matrix with S Omega S^T = Omega (checked on construction).
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Matrix matrix);

  static SymplecticTransform identity(int n_modes);
  /// diag(e^r, e^-r) on `mode`, identity elsewhere.
  static SymplecticTransform squeezer(int n_modes, int mode, double r);
  /// x' = x cos(theta) + p sin(theta), p' = p cos(theta) - x sin(theta).
  static SymplecticTransform rotation(int n_modes, int mode, double theta);
  /// 50/50 mixer; see beam_splitter_5050 for the port convention.
  static SymplecticTransform beam_splitter_5050(int n_modes, int mode_a,
                                                int mode_b);

  int n_modes() const noexcept { return static_cast<int>(matrix_.rows() / 2); }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// max |S Omega S^T - Omega|.
  double symplectic_residual() const;

 private:
  Matrix matrix_;
};

/// Everything the capacity formulas consume about a sender/receiver pair:
/// variances of x- = (x_a - x_b)/sqrt2 and p+ = (p_a + p_b)/sqrt2, their
/// covariance, and the sender's mean photon number.
struct ChannelStats {
  double v_xm = kVacuumVariance;
  double v_pp = kVacuumVariance;
  double v_xp = 0.0;
  double n0 = 0.0;

  /// V_x- V_p+ - V_xp^2, invariant under the paired rotation {theta, -theta}.
  double determinant() const noexcept { return v_xm * v_pp - v_xp * v_xp; }

  /// Throws DomainError unless v_xm > 0, v_pp > 0, determinant() > 0, n0 >= 0.
  void check() const;
};

struct ValidityReport {
  bool is_symmetric = false;
  double min_uncertainty_eigenvalue = 0.0;
  bool is_physical = false;
};

/// Symmetry and the uncertainty relation cov + (i/2) Omega >= 0.
ValidityReport validate_cm(const GaussianState& state);

GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticTransform& s,
                               const Vector& shift);
GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticTransform& s);

GaussianState local_squeeze(const GaussianState& state, int mode, double r);
GaussianState local_rotate(const GaussianState& state, int mode, double theta);
GaussianState displace(const GaussianState& state, int mode,
                       std::complex<double> alpha);

/// Mixes two modes at a 50/50 beam splitter. Afterwards port `mode_a`
/// carries (x_a - x_b)/sqrt2, (p_a - p_b)/sqrt2 and port `mode_b` carries
/// (x_a + x_b)/sqrt2, (p_a + p_b)/sqrt2, so homodyning x on port a and p on
/// port b reads out the pair (x-, p+).
GaussianState beam_splitter_5050(const GaussianState& state, int mode_a,
                                 int mode_b);

/// Marginal on the listed modes, in the listed order.
GaussianState reduce(const GaussianState& state, std::span<const int> keep);
GaussianState reduce(const GaussianState& state,
                     std::initializer_list<int> keep);

/// (<x^2> + <p^2> - 1) / 2 for one mode, including the mean.
double mean_photon(const GaussianState& state, int mode);

ChannelStats pair_stats(const GaussianState& state, int mode_a, int mode_b);

}  // namespace cvdc
