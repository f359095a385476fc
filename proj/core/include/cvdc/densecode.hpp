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

// Dense-coding mutual information over a two-mode Gaussian channel, the
// single-mode benchmark capacities it is compared against, and the
// advantage criteria. All information quantities are in nats.

#pragma once

#include <numbers>
#include <string_view>

#include "cvdc/gaussian.hpp"

namespace cvdc {

enum class Scheme { coherent, squeezed, fock };

std::string_view to_string(Scheme scheme);
/// Accepts "coherent"/"coh", "squeezed"/"sq", "fock"/"number".
Scheme scheme_from_string(std::string_view name);

/// Beat-the-squeezed-state threshold on V_x- V_p+ - V_xp^2.
inline constexpr double kSqueezedThreshold = 1.0 / 16.0;
/// Beat-the-number-state threshold (large photon budget): (1/2e)^2.
inline constexpr double kFockThreshold =
    1.0 / (4.0 * std::numbers::e * std::numbers::e);
/// Inseparability bound on the same product, for reference.
inline constexpr double kEntanglementThreshold = 1.0 / 4.0;
/// Slack for the strict comparisons against the thresholds above; pure
/// boundary states sit exactly on 1/16 and round to either side.
inline constexpr double kCriterionTolerance = 1e-12;

inline bool below_threshold(double v_product, double threshold) {
  return v_product < threshold - kCriterionTolerance;
}

/// Per-quadrature encoding variances sigma_x^2, sigma_p^2 of the Gaussian
/// displacement prior, in photon-number units.
struct EncodingPolicy {
  double sigma_x2 = 0.0;
  double sigma_p2 = 0.0;

  /// Mean photons added by the encoding, (sigma_x^2 + sigma_p^2) / 2.
  double n_s() const noexcept { return 0.5 * (sigma_x2 + sigma_p2); }
};

/// Total channel photon number n_bar = n0 + n_s.
struct EnergyBudget {
  double n_bar = 0.0;

  /// n_bar - n0; throws DomainError when n_bar < n0.
  double encoding_photons(const ChannelStats& stats) const;
};

struct CapacityReport {
  double h_max = 0.0;
  double c_coh = 0.0;
  double c_sq = 0.0;
  double c_fock = 0.0;
  /// exp(h_max) - exp(c_sq).
  double f_sq = 0.0;
  bool beats_coh = false;
  bool beats_sq = false;
  bool beats_fock = false;
  /// sqrt(V_x- V_p+ - V_xp^2).
  double u_eff = 0.0;
  /// u_eff^2 < 1/16: some photon budget beats the squeezed-state scheme.
  bool criterion_sq = false;
  /// u_eff^2 < 1/(2e)^2: large budgets beat the number-state scheme.
  bool criterion_fock = false;
};

/// ln(1 + n), ln(1 + 2n) or (1 + n) ln(1 + n) - n ln n. n = 0 is allowed
/// (the number-state capacity takes its limit 0); n < 0 throws DomainError.
double capacity_single_mode(Scheme scheme, double n_bar);

/// ln(1 + n + n^2): TMSV dense coding with the optimal encoding variance.
double tmsv_capacity(double n_bar);

/// Mutual information between Alice's displacement and Bob's dual-homodyne
/// outcome for the given channel and encoding prior.
double mutual_information(const ChannelStats& stats, const EncodingPolicy& enc);

/// Split of the encoding photons that maximizes mutual_information at fixed
/// sigma_x^2 + sigma_p^2 = 2 n_s. Throws SingleQuadratureRegime when
/// n_s <= |V_x- - V_p+|.
EncodingPolicy optimal_encoding(const ChannelStats& stats, double n_s);

/// Optimized mutual information after the paired rotation that removes
/// V_xp: ln[(n_bar - n0 + V_x- + V_p+) / (2 sqrt(V_x- V_p+ - V_xp^2))].
/// Requires n_s above sqrt((V_x- - V_p+)^2 + 4 V_xp^2), the rotated-frame
/// two-quadrature boundary.
double h_max(const ChannelStats& stats, const EnergyBudget& budget);

/// Mutual information at the optimal encoding without rotating the frame;
/// equals h_max when V_xp = 0 and is below it otherwise.
double h_max_fixed_frame(const ChannelStats& stats, const EnergyBudget& budget);

CapacityReport advantage(const ChannelStats& stats, const EnergyBudget& budget);

/// Photon budget where TMSV dense coding overtakes the number-state scheme,
/// by bisection of ln(1 + n + n^2) - C_fock(n) on [1, 3].
double fock_crossover(double tolerance = 1e-6);

}  // namespace cvdc
