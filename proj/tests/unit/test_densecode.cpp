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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cvdc/densecode.hpp"
#include "cvdc/errors.hpp"
#include "cvdc/optimize.hpp"
#include "cvdc/standard_forms.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

namespace cvdc {
namespace {

using testing::Rng;

// Random stats of physical two-mode states, rotated so that V_xp = 0 when
// `diagonal` is set.
ChannelStats random_stats(Rng& rng, bool diagonal) {
  const auto s = testing::random_physical_state(2, rng);
  if (!diagonal) return pair_stats(s, 0, 1);
  const double th = optimal_rotation(pair_stats(s, 0, 1));
  return pair_stats(paired_rotation(s, 0, 1, th), 0, 1);
}

TEST(SingleMode, ClosedForms) {
  EXPECT_NEAR(capacity_single_mode(Scheme::coherent, 10), std::log(11.0), 1e-15);
  EXPECT_NEAR(capacity_single_mode(Scheme::squeezed, 10), std::log(21.0), 1e-15);
  EXPECT_NEAR(capacity_single_mode(Scheme::fock, 1), 2 * std::log(2.0), 1e-15);
  EXPECT_EQ(capacity_single_mode(Scheme::fock, 0), 0.0);
  EXPECT_NEAR(capacity_single_mode(Scheme::fock, 1e-12), 0.0, 1e-10);
  EXPECT_THROW(capacity_single_mode(Scheme::coherent, -1), DomainError);
}

TEST(SchemeNames, RoundTrip) {
  for (Scheme s : {Scheme::coherent, Scheme::squeezed, Scheme::fock}) {
    EXPECT_EQ(scheme_from_string(to_string(s)), s);
  }
  EXPECT_THROW(scheme_from_string("laser"), StructuralError);
}

TEST(Tmsv, CapacityAndCrossovers) {
  EXPECT_NEAR(tmsv_capacity(1), std::log(3.0), 1e-15);
  EXPECT_NEAR(tmsv_capacity(1), capacity_single_mode(Scheme::squeezed, 1), 1e-15);
  const double n = fock_crossover();
  EXPECT_GT(n, 1.8830);
  EXPECT_LT(n, 1.8840);
  const CapacityReport lo = advantage(pair_stats(tmsv(std::asinh(std::sqrt(0.75))), 0, 1),
                                      EnergyBudget{1.5});
  EXPECT_FALSE(lo.beats_fock);
}

TEST(Tmsv, NumericMaximumOverEncoding) {
  const double n_bar = 2.0;
  const auto [arg, best] = testing::brent_maximize(
      [&](double s2) {
        return testing::tmsv_mutual_information(s2, std::asinh(std::sqrt(n_bar - s2)));
      },
      0.0, n_bar);
  EXPECT_NEAR(best, std::log(7.0), 1e-8);
  const double s = std::asinh(std::sqrt(n_bar - arg));
  EXPECT_NEAR(arg, std::cosh(s) * std::sinh(s), 1e-6);
}

TEST(Hierarchy, BenchmarksOrderedAndIncreasing) {
  double prev_dense = -1, prev_coh = -1, prev_sq = -1, prev_fock = -1;
  for (double n = 1e-3; n < 1e4; n *= 1.37) {
    const double coh = capacity_single_mode(Scheme::coherent, n);
    const double sq = capacity_single_mode(Scheme::squeezed, n);
    const double fock = capacity_single_mode(Scheme::fock, n);
    const double dense = tmsv_capacity(n);
    EXPECT_LT(coh, sq);
    EXPECT_LT(coh, fock);
    EXPECT_GT(dense, coh);
    EXPECT_GT(coh, prev_coh);
    EXPECT_GT(sq, prev_sq);
    EXPECT_GT(fock, prev_fock);
    EXPECT_GT(dense, prev_dense);
    prev_coh = coh;
    prev_sq = sq;
    prev_fock = fock;
    prev_dense = dense;
  }
}

TEST(MutualInformation, Examples) {
  const ChannelStats st{0.2, 0.3, 0.05, 0.1};
  EXPECT_EQ(mutual_information(st, {0, 0}), 0.0);
  const double s = 0.9;
  const ChannelStats t = pair_stats(tmsv(s), 0, 1);
  EXPECT_NEAR(mutual_information(t, {1.7, 1.7}),
              testing::tmsv_mutual_information(1.7, s), 1e-12);
  EXPECT_THROW(mutual_information({0.1, 0.1, 0.2, 0}, {1, 1}), DomainError);
  EXPECT_THROW(mutual_information(st, {-1, 1}), DomainError);
}

TEST(MutualInformation, MatchesEntropyFormAndFactorizes) {
  Rng rng(17);
  std::uniform_real_distribution<double> enc(0.0, 20.0);
  for (int k = 0; k < 1000; ++k) {
    const ChannelStats st = random_stats(rng, k % 2 == 0);
    const double sx = enc(rng), sp = enc(rng);
    EXPECT_NEAR(mutual_information(st, {sx, sp}), testing::entropy_mi(st, sx, sp), 1e-12);
    if (k % 2 == 0) {
      const double fact = 0.5 * std::log((1 + sx / (2 * st.v_xm)) * (1 + sp / (2 * st.v_pp)));
      EXPECT_NEAR(mutual_information(st, {sx, sp}), fact, 1e-11);
    }
  }
}

TEST(OptimalEncoding, Examples) {
  const auto e = optimal_encoding({0.1, 0.3, 0.0, 0.0}, 1.0);
  EXPECT_NEAR(e.sigma_x2, 1.2, 1e-15);
  EXPECT_NEAR(e.sigma_p2, 0.8, 1e-15);
  const auto sym = optimal_encoding({0.2, 0.2, 0.0, 0.0}, 3.0);
  EXPECT_DOUBLE_EQ(sym.sigma_x2, 3.0);
  EXPECT_DOUBLE_EQ(sym.sigma_p2, 3.0);
  EXPECT_NEAR(testing::numeric_best_mi({0.1, 0.3, 0, 0}, 1.0),
              mutual_information({0.1, 0.3, 0, 0}, e), 1e-10);
}

TEST(OptimalEncoding, SingleQuadratureRegime) {
  try {
    optimal_encoding({0.1, 2.1, 0.0, 0.0}, 1.5);
    FAIL();
  } catch (const SingleQuadratureRegime& e) {
    EXPECT_DOUBLE_EQ(e.boundary(), 2.0);
    EXPECT_DOUBLE_EQ(e.n_s(), 1.5);
  }
}

TEST(OptimalEncoding, LocallyOptimal) {
  Rng rng(23);
  std::uniform_real_distribution<double> extra(0.1, 10.0);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const ChannelStats st = random_stats(rng, true);
    const double n_s = std::abs(st.v_xm - st.v_pp) + extra(rng);
    const auto e = optimal_encoding(st, n_s);
    const double best = mutual_information(st, e);
    const double eps = 1e-3;
    EXPECT_GT(best, mutual_information(st, {e.sigma_x2 + eps, e.sigma_p2 - eps}));
    EXPECT_GT(best, mutual_information(st, {e.sigma_x2 - eps, e.sigma_p2 + eps}));
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(HMax, Examples) {
  EXPECT_NEAR(h_max({0.5, 0.5, 0.0, 0.0}, {10}), std::log(11.0), 1e-14);
  const double s = 0.7;
  const double n_bar = std::sinh(s) * std::sinh(s) + std::cosh(s) * std::sinh(s);
  EXPECT_NEAR(h_max(pair_stats(tmsv(s), 0, 1), {n_bar}), tmsv_capacity(n_bar), 1e-12);
  EXPECT_THROW(h_max({0.5, 0.5, 0.0, 2.0}, {1.0}), DomainError);
}

TEST(HMax, EqualsMutualInformationAtOptimalEncoding) {
  Rng rng(29);
  std::uniform_real_distribution<double> extra(0.5, 20.0);
  for (int k = 0; k < 1000; ++k) {
    const ChannelStats st = random_stats(rng, true);
    const double n_bar = st.n0 + std::abs(st.v_xm - st.v_pp) + extra(rng);
    EXPECT_NEAR(h_max(st, {n_bar}), h_max_fixed_frame(st, {n_bar}), 1e-12);
    EXPECT_NEAR(h_max(st, {n_bar}), testing::numeric_best_mi(st, n_bar - st.n0), 1e-9);
  }
}

TEST(HMax, RotatedFrameValueDominatesFixedFrame) {
  Rng rng(31);
  for (int k = 0; k < 500; ++k) {
    const auto s = testing::random_physical_state(2, rng);
    const ChannelStats st = pair_stats(s, 0, 1);
    const double n_bar = st.n0 + 30.0;
    EXPECT_GE(h_max(st, {n_bar}) + 1e-12, h_max_fixed_frame(st, {n_bar}));
    // Invariant under the paired rotation of the underlying state.
    const auto r = paired_rotation(s, 0, 1, 0.37);
    EXPECT_NEAR(h_max(pair_stats(r, 0, 1), {n_bar}),
                h_max(st, {n_bar}), 1e-12);
  }
}

TEST(Advantage, FlagsFollowValues) {
  Rng rng(37);
  for (int k = 0; k < 300; ++k) {
    const ChannelStats st = random_stats(rng, false);
    const double n_bar = st.n0 + 40.0;
    const auto r = advantage(st, {n_bar});
    EXPECT_EQ(r.beats_coh, r.h_max > r.c_coh);
    EXPECT_EQ(r.beats_fock, r.h_max > r.c_fock);
    EXPECT_EQ(r.beats_sq, r.f_sq > 0);
    EXPECT_NEAR(r.f_sq, std::exp(r.h_max) - std::exp(r.c_sq), 1e-9 * std::exp(r.h_max));
    EXPECT_NEAR(r.u_eff, std::sqrt(st.determinant()), 1e-15);
  }
}

TEST(Advantage, TmsvExamples) {
  // n_bar = 2 with the optimal squeezing: ln 7 > ln 5.
  const double n_bar = 2.0;
  // Optimal squeezing: sinh^2 s = n_bar^2 / (1 + 2 n_bar).
  const double ss = std::asinh(n_bar / std::sqrt(1 + 2 * n_bar));
  const auto r = advantage(pair_stats(tmsv(ss), 0, 1), {n_bar});
  EXPECT_NEAR(r.h_max, std::log(7.0), 1e-12);
  EXPECT_TRUE(r.beats_sq);

  const double n25 = 2.5;
  const double s25 = std::asinh(n25 / std::sqrt(1 + 2 * n25));
  EXPECT_TRUE(advantage(pair_stats(tmsv(s25), 0, 1), {n25}).beats_fock);
  const double n15 = 1.5;
  const double s15 = std::asinh(n15 / std::sqrt(1 + 2 * n15));
  EXPECT_FALSE(advantage(pair_stats(tmsv(s15), 0, 1), {n15}).beats_fock);
}

TEST(Advantage, NoAdvantageAboveQuarter) {
  Rng rng(41);
  int tested = 0;
  while (tested < 200) {
    const ChannelStats st = random_stats(rng, true);
    if (std::sqrt(st.determinant()) < 0.25) continue;
    ++tested;
    for (double n = 1e-2; n <= 1e4; n *= 1.5) {
      if (n < st.n0) continue;
      try {
        EXPECT_LT(advantage(st, {n}).f_sq, 0.0);
      } catch (const SingleQuadratureRegime&) {
      }
    }
  }
}

}  // namespace
}  // namespace cvdc
