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

// Acceptance suite. Each criterion prints one line:
//   [PASS] <id> <description>: <details> (<seconds>s)
// Usage: cvdc_acceptance [--criterion ID]...   (no arguments: run all)
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cvdc/densecode.hpp"
#include "cvdc/errors.hpp"
#include "cvdc/gaussian.hpp"
#include "cvdc/monogamy.hpp"
#include "cvdc/optimize.hpp"
#include "cvdc/oracle.hpp"
#include "cvdc/standard_forms.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

namespace {

using namespace cvdc;
using testing::Rng;

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Criterion {
  std::string id;
  std::string description;
  double time_limit = 0.0;  // seconds; 0 = unlimited
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

// --- 1 ---------------------------------------------------------------------

Outcome tmsv_closed_form() {
  double worst = 0.0;
  for (const double n : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    // n = sigma^2 + sinh^2 s, so s is fixed by the split.
    const auto best = testing::brent_maximize(
        [n](double sig2) {
          return testing::tmsv_mutual_information(sig2, std::asinh(std::sqrt(n - sig2)));
        },
        0.0, n);
    worst = std::max(worst, std::abs(best.second - tmsv_capacity(n)));
  }
  return {worst < 1e-8, fmt("max |closed form - numeric max| = %.3e over 5 budgets", worst)};
}

// --- 2, 3 ------------------------------------------------------------------

Outcome squeezed_crossover() {
  const double gap = std::abs(tmsv_capacity(1.0) - capacity_single_mode(Scheme::squeezed, 1.0));
  const double n = 1.0 + 1e-6;
  const double above = tmsv_capacity(n) - capacity_single_mode(Scheme::squeezed, n);
  return {gap < 1e-12 && above > 0.0,
          fmt("|C_dense(1) - C_sq(1)| = %.3e, C_dense - C_sq at 1+1e-6 = %.3e", gap, above)};
}

Outcome fock_crossing() {
  const double n = fock_crossover();
  return {n >= 1.8830 && n <= 1.8840, fmt("root n = %.6f", n)};
}

// --- 4 ---------------------------------------------------------------------

testing::StateShape varied_shape(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  testing::StateShape shape;
  shape.scale = 0.2 + 0.8 * u(rng);
  shape.max_excess = 2.0 * u(rng);
  shape.max_mean = 1.0;
  return shape;
}

Outcome general_formula() {
  Rng rng(4001);
  std::uniform_real_distribution<double> enc(0.0, 20.0);

  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto s = testing::random_physical_state(2, rng, varied_shape(rng));
    const EncodingPolicy e{enc(rng), k % 20 == 0 ? 0.0 : enc(rng)};
    const double closed = mutual_information(pair_stats(s, 0, 1), e);
    worst = std::max(worst, std::abs(closed - joint_gaussian_mi(measurement_model(s), e)));
  }

  constexpr int kCases = 50;
  constexpr int kSeeds = 20;
  int within = 0;
  double worst_z = 0.0;
  for (int c = 0; c < kCases; ++c) {
    const auto s = testing::random_physical_state(2, rng, varied_shape(rng));
    const EncodingPolicy e{enc(rng), enc(rng)};
    const MeasurementModel model = measurement_model(s);
    const double closed = mutual_information(pair_stats(s, 0, 1), e);
    for (int seed = 0; seed < kSeeds; ++seed) {
      MCConfig cfg;
      cfg.samples = 1'000'000;
      cfg.seed = 1000u * static_cast<unsigned>(c) + static_cast<unsigned>(seed);
      const MCEstimate est = monte_carlo_mi(model, e, cfg);
      const double z = std::abs(est.estimate - closed) / est.stderr_;
      worst_z = std::max(worst_z, z);
      within += z <= 4.0 ? 1 : 0;
    }
  }
  const double frac = static_cast<double>(within) / (kCases * kSeeds);
  return {worst < 1e-9 && frac >= 0.99,
          fmt("determinant oracle max dev %.3e (10^4 cases); Monte Carlo %d/%d within 4 "
              "stderr (%.2f%%), max |z| %.2f",
              worst, within, kCases * kSeeds, 100.0 * frac, worst_z)};
}

// --- 5 ---------------------------------------------------------------------

Outcome criterion_theorem() {
  Rng rng(5001);
  std::vector<double> grid(400);
  for (int i = 0; i < 400; ++i) grid[static_cast<std::size_t>(i)] = std::pow(10.0, -2.0 + 6.0 * i / 399.0);

  int disagreements = 0, below = 0;
  double closest_missed = 1.0, closest_below = 1.0;
  std::uniform_real_distribution<double> scale(0.1, 1.5);
  for (int k = 0; k < 10000; ++k) {
    // Generic mixed states rarely reach u < 1/4; perturbed TMSV states cover
    // that side, including values close to the threshold.
    GaussianState s = testing::random_physical_state(2, rng, varied_shape(rng));
    if (k % 3 == 1) s = testing::random_pure_state(2, rng, scale(rng));
    if (k % 3 == 2) {
      const SymplecticTransform local(testing::random_symplectic(2, rng, 0.3));
      s = apply_symplectic(tmsv(2.0 * scale(rng)), local);
    }
    const double theta = optimal_rotation(pair_stats(s, 0, 1));
    ChannelStats st = pair_stats(paired_rotation(s, 0, 1, theta), 0, 1);
    st.v_xp = 0.0;  // residual is ~1e-16 after the rotation
    const bool predicate = std::sqrt(st.determinant()) < 0.25;
    below += predicate ? 1 : 0;
    if (predicate) closest_below = std::min(closest_below, 0.25 - std::sqrt(st.determinant()));
    bool found = false;
    for (const double n : grid) {
      if (n < st.n0) continue;
      // The library only covers the two-quadrature regime; below its boundary
      // the numeric split search supplies the best one-quadrature value.
      double h = 0.0;
      try {
        h = h_max(st, EnergyBudget{n});
      } catch (const SingleQuadratureRegime&) {
        h = testing::numeric_best_mi(st, n - st.n0);
      }
      if (h > capacity_single_mode(Scheme::squeezed, n)) {
        found = true;
        break;
      }
    }
    if (found != predicate) {
      ++disagreements;
      closest_missed = std::min(closest_missed, std::abs(std::sqrt(st.determinant()) - 0.25));
    }
  }
  std::string d = fmt("%d disagreements over 10^4 stats (%d with u < 1/4, closest 1/4 - u = %.2e)",
                      disagreements, below, closest_below);
  if (disagreements > 0) d += fmt(", smallest |u - 1/4| among them %.2e", closest_missed);
  return {disagreements == 0, d};
}

// --- 6 ---------------------------------------------------------------------

Outcome rotation_invariants() {
  Rng rng(6001);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst_sum = 0.0, worst_det = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto s = testing::random_physical_state(2, rng, varied_shape(rng));
    const ChannelStats a = pair_stats(s, 0, 1);
    const ChannelStats b = pair_stats(paired_rotation(s, 0, 1, angle(rng)), 0, 1);
    worst_sum = std::max(worst_sum, std::abs((a.v_xm + a.v_pp) - (b.v_xm + b.v_pp)));
    worst_det = std::max(worst_det, std::abs(a.determinant() - b.determinant()));
  }
  return {worst_sum < 1e-12 && worst_det < 1e-12,
          fmt("max drift: V sum %.3e, V V - V_xp^2 %.3e", worst_sum, worst_det)};
}

// --- 7 ---------------------------------------------------------------------

GaussianState landmark_pair() { return reduce(pure_three_mode(1.2, 1.4, 0.9), {0, 1}); }

Outcome v_product_landmark() {
  const PipelineResult p = optimize_pipeline(landmark_pair(), 10.0);
  const double d = p.squeeze.r1 - p.squeeze.r2;
  return {std::abs(d - (-0.034)) <= 0.002,
          fmt("r1 - r2 = %+.5f (target -0.034 +- 0.002)", d)};
}

Outcome joint_landmark() {
  const JointSqueezeResult j =
      refine_joint_squeeze(landmark_pair(), 10.0, EnergyAccounting::quadrature_sum);
  const bool ok = std::abs(j.r1 - (-0.054)) <= 0.005 && std::abs(j.r2 - (-0.095)) <= 0.005;
  return {ok, fmt("maximum at (r1, r2) = (%+.5f, %+.5f), target (-0.054, -0.095) +- 0.005",
                  j.r1, j.r2)};
}

// --- 8, 9 ------------------------------------------------------------------

Outcome region_counts() {
  ScanConfig sc;
  sc.a1 = 1.5;
  sc.n_bar = 10.0;
  sc.grid = 201;
  const auto records = region_scan(sc);
  const std::size_t coh = count_both_beat(records, Scheme::coherent);
  const std::size_t sq = count_both_beat(records, Scheme::squeezed);
  return {coh > 0 && sq == 0,
          fmt("%zu cells; both pairs beat coherent in %zu, squeezed in %zu", records.size(),
              coh, sq)};
}

Outcome monogamy_regions() {
  ScanConfig sc;
  sc.a1 = 1.5;
  sc.grid = 201;
  const MonogamyScan scan = monogamy_scan(sc);

  Rng rng(9001);
  std::uniform_real_distribution<double> sq(-1.5, 1.5);
  std::uniform_real_distribution<double> th(-std::numbers::pi, std::numbers::pi);
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100000; ++k) {
    const auto s = k % 2 ? pure_three_mode(testing::random_triangle_params(rng))
                         : testing::random_physical_state(3, rng, varied_shape(rng));
    PairAssignment a;
    a.squeeze = {sq(rng), sq(rng), sq(rng), sq(rng)};
    a.theta_b = th(rng);
    a.theta_c = th(rng);
    worst = std::min(worst, pair_product(s, a) - pair_product_bound(a));
  }
  const bool ok = scan.red_cells > 0 && scan.blue_cells > 0 && scan.overlap_cells == 0 &&
                  worst >= -1e-10;
  return {ok, fmt("red %zu, blue %zu, overlap %zu cells; min(product - bound) over 10^5 "
                  "trials %.3e",
                  scan.red_cells, scan.blue_cells, scan.overlap_cells, worst)};
}

// --- 10 --------------------------------------------------------------------

Outcome pure_determinant() {
  Rng rng(10001);
  double worst = 0.0, seen = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double det = pure_three_mode(testing::random_triangle_params(rng)).cov().determinant();
    if (std::abs(det - 0.125) >= worst) {
      worst = std::abs(det - 0.125);
      seen = det;
    }
  }
  return {worst < 1e-8,
          fmt("max |det - 1/8| = %.6f (det = %.10f; the pure value in this convention is "
              "(1/2)^6 = 1/64)",
              worst, seen)};
}

Outcome reduced_determinants() {
  Rng rng(10002);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto s = pure_three_mode(testing::random_triangle_params(rng));
    for (int m = 0; m < 3; ++m) {
      std::vector<int> pair;
      for (int j = 0; j < 3; ++j) {
        if (j != m) pair.push_back(j);
      }
      const double dij = reduce(s, pair).cov().determinant();
      const double dk = reduce(s, std::vector<int>{m}).cov().determinant();
      worst = std::max(worst, std::abs(dij - 0.25 * dk));
    }
  }
  return {worst < 1e-8, fmt("max |det s_ij - det s_k / 4| = %.3e", worst)};
}

std::vector<Criterion> criteria() {
  return {
      {"1", "TMSV capacity closed form vs numeric maximization", 1.0, tmsv_closed_form},
      {"2", "dense coding meets squeezed-state capacity at n = 1", 0.0, squeezed_crossover},
      {"3", "dense coding overtakes number states near n = 1.8835", 1.0, fock_crossing},
      {"4", "closed-form mutual information vs determinant and Monte Carlo oracles", 120.0,
       general_formula},
      {"5", "advantage exists on the budget grid iff u < 1/4", 0.0, criterion_theorem},
      {"6", "paired rotation preserves V sum and determinant", 0.0, rotation_invariants},
      {"7a", "V-product minimizer landmark r1 - r2", 10.0, v_product_landmark},
      {"7b", "joint squeezing maximum landmark (r1, r2)", 10.0, joint_landmark},
      {"8", "a1 = 1.5 regions: coherent overlap non-empty, squeezed overlap empty", 60.0,
       region_counts},
      {"9", "a1 = 1.5 monogamy: disjoint red/blue regions and product bound", 120.0,
       monogamy_regions},
      {"10a", "pure three-mode determinant equals 1/8", 0.0, pure_determinant},
      {"10b", "pure three-mode det s_ij = det s_k / 4", 0.0, reduced_determinants},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      wanted.emplace_back(argv[++i]);
    } else if (arg == "--list") {
      for (const auto& c : criteria()) std::printf("%s %s\n", c.id.c_str(), c.description.c_str());
      return 0;
    } else {
      std::fprintf(stderr, "usage: cvdc_acceptance [--criterion ID]... [--list]\n");
      return 1;
    }
  }

  const auto all = criteria();
  for (const auto& w : wanted) {
    if (std::none_of(all.begin(), all.end(), [&](const Criterion& c) { return c.id == w; })) {
      std::fprintf(stderr, "unknown criterion '%s'\n", w.c_str());
      return 1;
    }
  }

  int failed = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      o.pass = false;
      o.details += fmt("; runtime %.1fs exceeds %.0fs", secs, c.time_limit);
    }
    std::printf("[%s] %s %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id.c_str(),
                c.description.c_str(), o.details.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
