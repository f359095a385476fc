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

#include "cvdc/monogamy.hpp"

#include <cmath>
#include <string>

#include "cvdc/densecode.hpp"
#include "cvdc/errors.hpp"

namespace cvdc {

namespace {

constexpr double kHypothesisTolerance = 1e-10;

double pair_v_product(const GaussianState& state, int sender, int receiver,
                      double theta, double r_sender, double r_receiver) {
  GaussianState s = paired_rotation(state, sender, receiver, theta);
  s = local_squeeze(local_squeeze(s, sender, r_sender), receiver, r_receiver);
  const ChannelStats st = pair_stats(s, sender, receiver);
  return st.v_xm * st.v_pp;
}

bool swap_invariant(const Matrix& cov, int i, int j) {
  const int n = static_cast<int>(cov.rows() / 2);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
  std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  double worst = 0.0;
  for (int a = 0; a < 2 * n; ++a) {
    const int pa = 2 * perm[static_cast<std::size_t>(a / 2)] + a % 2;
    for (int b = 0; b < 2 * n; ++b) {
      const int pb = 2 * perm[static_cast<std::size_t>(b / 2)] + b % 2;
      worst = std::max(worst, std::abs(cov(a, b) - cov(pa, pb)));
    }
  }
  return worst <= kHypothesisTolerance;
}

PairVerdict evaluate_pair(const GaussianState& state, double n_bar, int sender,
                          int receiver) {
  PairVerdict v;
  const GaussianState pair = reduce(state, {sender, receiver});
  v.criterion_initial = pair_stats(pair, 0, 1).determinant();

  const GaussianState centered = zero_displacement(pair, 0);
  const double theta = optimal_rotation(pair_stats(centered, 0, 1));
  try {
    v.criterion =
        minimize_v_product(paired_rotation(centered, 0, 1, theta)).v_product_min;
  } catch (const std::exception& e) {
    v.criterion = v.criterion_initial;
    v.error = e.what();
  }
  v.advantage = below_threshold(v.criterion, kSqueezedThreshold);

  try {
    v.h_max = optimize_pipeline(pair, n_bar).report.h_max;
  } catch (const std::exception& e) {
    if (!v.error.empty()) v.error += "; ";
    v.error += e.what();
  }
  return v;
}

}  // namespace

void PairAssignment::check(int n_modes) const {
  for (const int m : {sender, receiver_b, receiver_c}) {
    if (m < 0 || m >= n_modes) {
      throw StructuralError("pair assignment index " + std::to_string(m) +
                            " out of range for " + std::to_string(n_modes) +
                            "-mode state");
    }
  }
  if (sender == receiver_b || sender == receiver_c || receiver_b == receiver_c) {
    throw StructuralError("pair assignment needs three distinct modes");
  }
}

double pair_product(const GaussianState& state, const PairAssignment& assign) {
  assign.check(state.n_modes());
  const double ab = pair_v_product(state, assign.sender, assign.receiver_b,
                                   assign.theta_b, assign.squeeze.sender_b,
                                   assign.squeeze.receiver_b);
  const double ac = pair_v_product(state, assign.sender, assign.receiver_c,
                                   assign.theta_c, assign.squeeze.sender_c,
                                   assign.squeeze.receiver_c);
  return ab * ac;
}

double pair_product_bound(const PairAssignment& assign) {
  const double c = std::cos(assign.theta_b - assign.theta_c);
  return c * c * c * c / 256.0;
}

std::string_view to_string(MonogamyHypothesis h) {
  switch (h) {
    case MonogamyHypothesis::zero_cross_correlation:
      return "zero_cross_correlation";
    case MonogamyHypothesis::permutation_symmetric:
      return "permutation_symmetric";
    case MonogamyHypothesis::unproven:
      return "unproven";
  }
  return "unknown";
}

MonogamyHypothesis classify_hypothesis(const GaussianState& state, int sender,
                                       int receiver_b, int receiver_c) {
  PairAssignment{sender, receiver_b, receiver_c, {}, 0.0, 0.0}.check(state.n_modes());
  // Symmetric states also have V_xp = 0 on every pair; report the stronger label.
  bool symmetric = true;
  for (int k = 0; k + 1 < state.n_modes() && symmetric; ++k) {
    symmetric = swap_invariant(state.cov(), k, k + 1);
  }
  if (symmetric) return MonogamyHypothesis::permutation_symmetric;
  if (std::abs(pair_stats(state, sender, receiver_b).v_xp) <= kHypothesisTolerance &&
      std::abs(pair_stats(state, sender, receiver_c).v_xp) <= kHypothesisTolerance) {
    return MonogamyHypothesis::zero_cross_correlation;
  }
  return MonogamyHypothesis::unproven;
}

MonogamyReport monogamy_certificate(const GaussianState& state, double n_bar,
                                    int sender, int receiver_b, int receiver_c) {
  MonogamyReport report;
  report.hypothesis = classify_hypothesis(state, sender, receiver_b, receiver_c);
  report.ab = evaluate_pair(state, n_bar, sender, receiver_b);
  report.ac = evaluate_pair(state, n_bar, sender, receiver_c);

  report.holds = !(report.ab.advantage && report.ac.advantage);
  if (report.ab.advantage) report.advantaged_pair = "ab";
  if (report.ac.advantage) report.advantaged_pair = report.ab.advantage ? "ab+ac" : "ac";

  if (report.hypothesis == MonogamyHypothesis::unproven) {
    report.warning =
        "state is outside the proven hypotheses (V_xp = 0 on both pairs, or "
        "permutation symmetry); the verdict is an observation, not a certificate";
  }
  for (const PairVerdict* v : {&report.ab, &report.ac}) {
    if (!v->error.empty()) {
      if (!report.warning.empty()) report.warning += "; ";
      report.warning += (v == &report.ab ? "ab: " : "ac: ") + v->error;
    }
  }
  return report;
}

MonogamyScan monogamy_scan(const ScanConfig& config) {
  MonogamyScan scan;
  scan.records = region_scan(config);
  for (const RegionRecord& r : scan.records) {
    const bool red = below_threshold(r.crit_ab_opt, kSqueezedThreshold);
    const bool blue = below_threshold(r.crit_ac_opt, kSqueezedThreshold);
    scan.red_cells += red ? 1 : 0;
    scan.blue_cells += blue ? 1 : 0;
    scan.overlap_cells += r.overlap_flag ? 1 : 0;
    scan.fock_overlap_cells += (below_threshold(r.crit_ab_opt, kFockThreshold) &&
                                below_threshold(r.crit_ac_opt, kFockThreshold))
                                   ? 1
                                   : 0;
  }
  return scan;
}

}  // namespace cvdc
