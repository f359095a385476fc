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

// Monogamy of the dense-coding advantage: a sender sharing one multimode
// Gaussian state with two receivers can satisfy the squeezed-state
// criterion with at most one of them.
//
// The guarantee rests on the uncertainty relation between the two pairs'
// variables: for any local squeezings, and paired rotations {theta_b,
// -theta_b}, {theta_c, -theta_c} applied before them,
//
//   V_x-(AB) V_p+(AB) V_x-(AC) V_p+(AC) >= cos^4(theta_b - theta_c) / 256.
//
// It is proven for states with V_xp = 0 on both pairs and for
// permutation-symmetric states; anything else is reported, not certified.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvdc/gaussian.hpp"
#include "cvdc/optimize.hpp"

namespace cvdc {

struct PairSqueezes {
  double sender_b = 0.0;    // r1' on Alice for pair AB
  double receiver_b = 0.0;  // r2' on Bob
  double sender_c = 0.0;    // r1'' on Alice for pair AC
  double receiver_c = 0.0;  // r3'' on Charlie
};

struct PairAssignment {
  int sender = 0;
  int receiver_b = 1;
  int receiver_c = 2;
  PairSqueezes squeeze;
  double theta_b = 0.0;
  double theta_c = 0.0;

  /// Throws StructuralError unless the three indices are distinct and valid.
  void check(int n_modes) const;
};

/// Product of the two pairs' V_x- V_p+ after each pair's local operations
/// (paired rotation first, then squeezing) applied to the shared state.
double pair_product(const GaussianState& state, const PairAssignment& assign);

/// cos^4(theta_b - theta_c) / 256.
double pair_product_bound(const PairAssignment& assign);

enum class MonogamyHypothesis {
  zero_cross_correlation,
  permutation_symmetric,
  unproven,
};

std::string_view to_string(MonogamyHypothesis h);

struct PairVerdict {
  /// V_x- V_p+ - V_xp^2 after the optimization pipeline.
  double criterion = 0.0;
  /// Same quantity before any local operation.
  double criterion_initial = 0.0;
  std::optional<double> h_max;
  bool advantage = false;
  std::string error;
};

struct MonogamyReport {
  PairVerdict ab;
  PairVerdict ac;
  MonogamyHypothesis hypothesis = MonogamyHypothesis::unproven;
  /// At most one pair satisfies the squeezed-state criterion.
  bool holds = true;
  /// "ab", "ac", or empty when neither pair has the advantage.
  std::string advantaged_pair;
  /// Set when the state is outside the proven hypotheses, or when a pair
  /// could not be optimized.
  std::string warning;
};

/// Optimizes each pair independently on its reduced state and checks that
/// at most one of them satisfies V_x- V_p+ < 1/16.
MonogamyReport monogamy_certificate(const GaussianState& state, double n_bar,
                                    int sender = 0, int receiver_b = 1,
                                    int receiver_c = 2);

/// Hypothesis test used by monogamy_certificate.
MonogamyHypothesis classify_hypothesis(const GaussianState& state, int sender,
                                       int receiver_b, int receiver_c);

struct MonogamyScan {
  std::vector<RegionRecord> records;
  std::size_t red_cells = 0;      // optimized AB criterion satisfied
  std::size_t blue_cells = 0;     // optimized AC criterion satisfied
  std::size_t overlap_cells = 0;  // both
  std::size_t fock_overlap_cells = 0;
};

/// Region scan with the optimized criteria tallied per pair.
MonogamyScan monogamy_scan(const ScanConfig& config);

}  // namespace cvdc
