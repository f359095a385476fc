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

// Local-unitary optimization of a two-mode dense-coding channel and the
// (c2, c3) region scans over pure three-mode states.
//
// The pipeline order is fixed: zero Alice's displacement, apply the paired
// rotation {theta, -theta} that removes V_xp, then apply the local squeezing
// that minimizes V_x- V_p+ - V_xp^2. That product depends on the squeezings
// only through t = exp(r1 - r2); the canonical split reported is r2 = -r1.

#pragma once

#include <string>
#include <vector>

#include "cvdc/densecode.hpp"
#include "cvdc/gaussian.hpp"
#include "cvdc/standard_forms.hpp"

namespace cvdc {

struct SqueezeSearchResult {
  double t_opt = 1.0;
  double v_product_min = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  int iterations = 0;
};

/// How the sender's own energy n0 enters the photon budget.
///   photon_number:  n0 = (<x^2> + <p^2> - 1) / 2, the mean photon number.
///   quadrature_sum: n0 = <x^2> + <p^2>, the raw second-moment sum. Only
///                   used to regenerate the published squeezing landscape.
enum class EnergyAccounting { photon_number, quadrature_sum };

/// Search bracket for log t in minimize_v_product.
inline constexpr double kLogTBracket = 5.0;
inline constexpr double kLogTTolerance = 1e-10;
/// Box for the joint (r1, r2) refinement.
inline constexpr double kJointSqueezeBox = 1.0;

/// Shifts `mode` back to zero mean; the covariance is untouched.
GaussianState zero_displacement(const GaussianState& state, int mode);

/// Angle theta in (-pi/4, pi/4] such that rotating the sender by theta and
/// the receiver by -theta leaves V_xp = 0.
double optimal_rotation(const ChannelStats& stats);

GaussianState paired_rotation(const GaussianState& state, int mode_a,
                              int mode_b, double theta);

/// Channel stats of the pair after squeezing mode_a by r1 and mode_b by r2,
/// evaluated directly on the 4x4 pair block.
ChannelStats squeezed_pair_stats(const GaussianState& state, int mode_a,
                                 int mode_b, double r1, double r2);

/// Minimizes V_x- V_p+ - V_xp^2 over t = exp(r1 - r2) by golden section on
/// log t in [-5, 5]. Throws BoundaryError if the minimum sits on the bracket
/// edge.
SqueezeSearchResult minimize_v_product(const GaussianState& state,
                                       int mode_a = 0, int mode_b = 1);
SqueezeSearchResult minimize_v_product(const TwoModeStandardForm& form);

struct PipelineResult {
  GaussianState state;
  CapacityReport report;
  double theta = 0.0;
  SqueezeSearchResult squeeze;
  /// False when squeezing to t_opt would have lowered h_max (the extra
  /// sender energy outweighed the smaller noise); the unsqueezed state is
  /// then returned.
  bool squeeze_applied = false;
};

/// Runs displacement zeroing, paired rotation and V-product squeezing on a
/// two-mode state (mode 0 sends, mode 1 receives).
PipelineResult optimize_pipeline(const GaussianState& state, double n_bar);

double sender_energy(const GaussianState& state, int mode,
                     EnergyAccounting accounting);

/// h_max of the pair after local squeezings (r1, r2), with n0 taken per
/// `accounting`. Returns -infinity outside the two-quadrature regime.
double joint_squeeze_objective(const GaussianState& state, double n_bar,
                               double r1, double r2,
                               EnergyAccounting accounting);

struct JointSqueezeResult {
  double r1 = 0.0;
  double r2 = 0.0;
  double h = 0.0;
  int iterations = 0;
};

/// Direct search over (r1, r2) in [-1, 1]^2 maximizing
/// joint_squeeze_objective, seeded at the t_opt split.
JointSqueezeResult refine_joint_squeeze(
    const GaussianState& state, double n_bar,
    EnergyAccounting accounting = EnergyAccounting::photon_number);

/// One (c2, c3) cell of a pure three-mode scan. "ab" is the pair
/// {Alice, Bob} = modes {0, 1}, "ac" the pair {0, 2}.
struct RegionRecord {
  double c2 = 0.0;
  double c3 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  /// h_max of the standard-form pair, no local squeezing.
  double h_ab = 0.0;
  double h_ac = 0.0;
  /// V_x- V_p+ of the standard-form pair.
  double crit_ab = 0.0;
  double crit_ac = 0.0;
  bool beats_coh_ab = false;
  bool beats_coh_ac = false;
  bool beats_sq_ab = false;
  bool beats_sq_ac = false;
  double t_opt_ab = 1.0;
  double t_opt_ac = 1.0;
  /// V product after the optimal local squeezing.
  double crit_ab_opt = 0.0;
  double crit_ac_opt = 0.0;
  /// Both optimized criteria below 1/16.
  bool overlap_flag = false;
  /// Non-empty if part of the cell could not be evaluated.
  std::string error;
};

struct ScanConfig {
  double a1 = 1.5;
  double n_bar = 10.0;
  int grid = 201;
  double c_max = 2.0;
  /// 0 = resolve_threads() default.
  int threads = 0;
};

/// Evaluates every grid cell of [0, c_max]^2 inside the pure-state triangle,
/// row-major in (c2, c3). Cells outside the triangle are omitted; per-cell
/// failures are recorded in RegionRecord::error.
std::vector<RegionRecord> region_scan(const ScanConfig& config);

RegionRecord evaluate_cell(double a1, double n_bar, double c2, double c3);

/// Cells where both pairs beat `scheme` (coherent or squeezed) without
/// optimization.
std::size_t count_both_beat(const std::vector<RegionRecord>& records,
                            Scheme scheme);

}  // namespace cvdc
