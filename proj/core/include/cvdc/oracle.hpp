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

// Independent routes to the dense-coding mutual information.
//
// Bob's record beta = (x-, p+) is an affine function of Alice's amplitude
// plus input-independent Gaussian noise:
//
//   beta = offset + gain * (alpha_x, alpha_p) + noise,   noise ~ N(0, V)
//
// The model is read off the symplectic propagation displace -> 50/50 mixer
// -> marginal, never from the closed-form capacity code. With our
// displacement convention the gain is the identity.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "cvdc/densecode.hpp"
#include "cvdc/gaussian.hpp"

namespace cvdc {

struct MCConfig {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
  /// Histogram resolution for diagnostics; the estimator ignores it.
  int bins = 64;

  /// Throws DomainError when samples < 1000 or bins < 1.
  void check() const;
};

inline constexpr std::size_t kMinSamples = 1000;
/// Fixed shard count, so results do not depend on the thread count.
inline constexpr int kMonteCarloShards = 64;

struct ConditionalGaussian {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
};

/// Displaces the sender by alpha, mixes sender and receiver on the 50/50
/// beam splitter and returns the distribution of (x on the sender port,
/// p on the receiver port).
ConditionalGaussian conditional_via_symplectic(const GaussianState& state,
                                               std::complex<double> alpha,
                                               int sender = 0,
                                               int receiver = 1);

struct MeasurementModel {
  Eigen::Vector2d offset = Eigen::Vector2d::Zero();
  Eigen::Matrix2d gain = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d noise = Eigen::Matrix2d::Identity() * kVacuumVariance;
};

/// Model extracted from three propagations (alpha = 0, 1, i).
MeasurementModel measurement_model(const GaussianState& state, int sender = 0,
                                   int receiver = 1);
/// Model with unit gain and noise (V_x-, V_xp; V_xp, V_p+).
MeasurementModel measurement_model(const ChannelStats& stats);

/// 1/2 ln(det S_alpha det S_beta / det S_joint) with the alpha prior
/// diag(sigma_x^2/2, sigma_p^2/2). Components with zero encoding variance
/// carry no information and are dropped.
double joint_gaussian_mi(const MeasurementModel& model, const EncodingPolicy& enc);
double joint_gaussian_mi(const GaussianState& state, const EncodingPolicy& enc);

struct MCEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
  /// RNG and sharding description, echoed into output metadata.
  std::string algorithm;
};

/// Gaussian plug-in estimate from sample covariances. Samples are drawn in
/// kMonteCarloShards fixed shards, shard k seeded by seed_seq{seed, k}; the
/// estimate pools all shards and the standard error is the spread of the
/// per-shard estimates over sqrt(shards).
MCEstimate monte_carlo_mi(const MeasurementModel& model, const EncodingPolicy& enc,
                          const MCConfig& cfg, int threads = 1);
MCEstimate monte_carlo_mi(const GaussianState& state, const EncodingPolicy& enc,
                          const MCConfig& cfg, int threads = 1);

/// Writes alpha_x,alpha_p,beta_x,beta_p rows (same streams as
/// monte_carlo_mi) as CSV.
void write_samples(const MeasurementModel& model, const EncodingPolicy& enc,
                   const MCConfig& cfg, std::ostream& out);

/// Name of the sampling algorithm, including the library version.
std::string rng_algorithm();

}  // namespace cvdc
