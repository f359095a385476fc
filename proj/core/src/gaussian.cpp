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

#include "cvdc/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cvdc/errors.hpp"

namespace cvdc {

namespace {

void check_mode(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) {
    throw StructuralError("mode index " + std::to_string(mode) +
                          " out of range for " + std::to_string(n_modes) +
                          "-mode state");
  }
}

void check_distinct(int n_modes, int a, int b) {
  check_mode(n_modes, a);
  check_mode(n_modes, b);
  if (a == b) {
    throw StructuralError("mode indices must be distinct (got " +
                          std::to_string(a) + " twice)");
  }
}

Matrix embed_single_mode(int n_modes, int mode, const Eigen::Matrix2d& block) {
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  s.block<2, 2>(2 * mode, 2 * mode) = block;
  return s;
}

}  // namespace

Matrix symplectic_form(int n_modes) {
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

// ---------------------------------------------------------------------------
// GaussianState

GaussianState::GaussianState(Vector mean, Matrix cov)
    : n_modes_(static_cast<int>(cov.rows() / 2)),
      mean_(std::move(mean)),
      cov_(std::move(cov)) {
  if (cov_.rows() == 0 || cov_.rows() % 2 != 0 || cov_.rows() != cov_.cols()) {
    throw StructuralError("covariance matrix must be 2N x 2N with N >= 1, got " +
                          std::to_string(cov_.rows()) + "x" +
                          std::to_string(cov_.cols()));
  }
  if (mean_.size() != cov_.rows()) {
    throw StructuralError("mean vector has length " +
                          std::to_string(mean_.size()) + ", expected " +
                          std::to_string(cov_.rows()));
  }
}

GaussianState GaussianState::vacuum(int n_modes) {
  if (n_modes < 1) throw StructuralError("vacuum needs at least one mode");
  return GaussianState(Vector::Zero(2 * n_modes),
                       kVacuumVariance * Matrix::Identity(2 * n_modes, 2 * n_modes));
}

Eigen::Matrix2d GaussianState::mode_block(int mode) const {
  check_mode(n_modes_, mode);
  return cov_.block<2, 2>(2 * mode, 2 * mode);
}

// ---------------------------------------------------------------------------
// SymplecticTransform

SymplecticTransform::SymplecticTransform(Matrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() % 2 != 0 ||
      matrix_.rows() != matrix_.cols()) {
    throw StructuralError("symplectic matrix must be 2N x 2N");
  }
  const double residual = symplectic_residual();
  if (!(residual <= kSymplecticTolerance)) {
    throw DomainError("matrix is not symplectic: max|S Omega S^T - Omega| = " +
                      std::to_string(residual));
  }
}

double SymplecticTransform::symplectic_residual() const {
  const Matrix omega = symplectic_form(n_modes());
  return (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().maxCoeff();
}

SymplecticTransform SymplecticTransform::identity(int n_modes) {
  return SymplecticTransform(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticTransform SymplecticTransform::squeezer(int n_modes, int mode,
                                                  double r) {
  check_mode(n_modes, mode);
  Eigen::Matrix2d block;
  block << std::exp(r), 0.0, 0.0, std::exp(-r);
  return SymplecticTransform(embed_single_mode(n_modes, mode, block));
}

SymplecticTransform SymplecticTransform::rotation(int n_modes, int mode,
                                                  double theta) {
  check_mode(n_modes, mode);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d block;
  block << c, s, -s, c;
  return SymplecticTransform(embed_single_mode(n_modes, mode, block));
}

SymplecticTransform SymplecticTransform::beam_splitter_5050(int n_modes,
                                                            int mode_a,
                                                            int mode_b) {
  check_distinct(n_modes, mode_a, mode_b);
  const double h = std::numbers::sqrt2 / 2.0;
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  for (int q = 0; q < 2; ++q) {
    const int ia = 2 * mode_a + q;
    const int ib = 2 * mode_b + q;
    s(ia, ia) = h;
    s(ia, ib) = -h;
    s(ib, ia) = h;
    s(ib, ib) = h;
  }
  return SymplecticTransform(std::move(s));
}

// ---------------------------------------------------------------------------
// ChannelStats

void ChannelStats::check() const {
  if (!(v_xm > 0.0) || !(v_pp > 0.0)) {
    throw DomainError("channel variances must be positive (V_x- = " +
                      std::to_string(v_xm) + ", V_p+ = " + std::to_string(v_pp) +
                      ")");
  }
  if (!(determinant() > 0.0)) {
    throw DomainError("unphysical channel stats: V_x- V_p+ - V_xp^2 = " +
                      std::to_string(determinant()) + " <= 0");
  }
  if (!(n0 >= 0.0)) {
    throw DomainError("sender photon number n0 = " + std::to_string(n0) +
                      " is negative");
  }
}

// ---------------------------------------------------------------------------
// Operations

ValidityReport validate_cm(const GaussianState& state) {
  const Matrix& cov = state.cov();
  ValidityReport report;
  report.is_symmetric =
      (cov - cov.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTolerance;

  const Matrix sym = 0.5 * (cov + cov.transpose());
  const Eigen::MatrixXcd hermitian =
      sym.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) *
          symplectic_form(state.n_modes()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      hermitian, Eigen::EigenvaluesOnly);
  report.min_uncertainty_eigenvalue = solver.eigenvalues().minCoeff();
  report.is_physical = report.is_symmetric &&
                       report.min_uncertainty_eigenvalue >= kUncertaintyTolerance;
  return report;
}

GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticTransform& s,
                               const Vector& shift) {
  const Matrix& m = s.matrix();
  if (m.rows() != state.cov().rows()) {
    throw StructuralError("symplectic transform acts on " +
                          std::to_string(s.n_modes()) + " modes, state has " +
                          std::to_string(state.n_modes()));
  }
  if (shift.size() != state.mean().size()) {
    throw StructuralError("displacement vector has wrong length");
  }
  return GaussianState(m * state.mean() + shift,
                       m * state.cov() * m.transpose());
}

GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticTransform& s) {
  return apply_symplectic(state, s, Vector::Zero(state.mean().size()));
}

GaussianState local_squeeze(const GaussianState& state, int mode, double r) {
  return apply_symplectic(
      state, SymplecticTransform::squeezer(state.n_modes(), mode, r));
}

GaussianState local_rotate(const GaussianState& state, int mode, double theta) {
  return apply_symplectic(
      state, SymplecticTransform::rotation(state.n_modes(), mode, theta));
}

GaussianState displace(const GaussianState& state, int mode,
                       std::complex<double> alpha) {
  check_mode(state.n_modes(), mode);
  Vector mean = state.mean();
  mean(2 * mode) += std::numbers::sqrt2 * alpha.real();
  mean(2 * mode + 1) += std::numbers::sqrt2 * alpha.imag();
  return GaussianState(std::move(mean), state.cov());
}

GaussianState beam_splitter_5050(const GaussianState& state, int mode_a,
                                 int mode_b) {
  return apply_symplectic(state, SymplecticTransform::beam_splitter_5050(
                                     state.n_modes(), mode_a, mode_b));
}

GaussianState reduce(const GaussianState& state, std::span<const int> keep) {
  if (keep.empty()) throw StructuralError("reduce: empty mode list");
  std::vector<bool> seen(static_cast<std::size_t>(state.n_modes()), false);
  std::vector<int> rows;
  rows.reserve(2 * keep.size());
  for (const int mode : keep) {
    check_mode(state.n_modes(), mode);
    if (seen[static_cast<std::size_t>(mode)]) {
      throw StructuralError("reduce: mode " + std::to_string(mode) +
                            " listed twice");
    }
    seen[static_cast<std::size_t>(mode)] = true;
    rows.push_back(2 * mode);
    rows.push_back(2 * mode + 1);
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Vector mean(n);
  Matrix cov(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    mean(i) = state.mean()(rows[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) {
      cov(i, j) = state.cov()(rows[static_cast<std::size_t>(i)],
                              rows[static_cast<std::size_t>(j)]);
    }
  }
  return GaussianState(std::move(mean), std::move(cov));
}

GaussianState reduce(const GaussianState& state,
                     std::initializer_list<int> keep) {
  return reduce(state, std::span<const int>(keep.begin(), keep.size()));
}

double mean_photon(const GaussianState& state, int mode) {
  check_mode(state.n_modes(), mode);
  const double mx = state.mean()(2 * mode);
  const double mp = state.mean()(2 * mode + 1);
  const double x2 = mx * mx + state.cov()(2 * mode, 2 * mode);
  const double p2 = mp * mp + state.cov()(2 * mode + 1, 2 * mode + 1);
  return 0.5 * (x2 + p2 - 1.0);
}

ChannelStats pair_stats(const GaussianState& state, int mode_a, int mode_b) {
  check_distinct(state.n_modes(), mode_a, mode_b);
  const double h = std::numbers::sqrt2 / 2.0;
  Vector x_minus = Vector::Zero(2 * state.n_modes());
  Vector p_plus = Vector::Zero(2 * state.n_modes());
  x_minus(2 * mode_a) = h;
  x_minus(2 * mode_b) = -h;
  p_plus(2 * mode_a + 1) = h;
  p_plus(2 * mode_b + 1) = h;

  const Matrix& cov = state.cov();
  ChannelStats stats;
  stats.v_xm = x_minus.dot(cov * x_minus);
  stats.v_pp = p_plus.dot(cov * p_plus);
  stats.v_xp = x_minus.dot(cov * p_plus);
  stats.n0 = mean_photon(state, mode_a);
  return stats;
}

}  // namespace cvdc
