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

#include "cvdc/optimize.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "cvdc/errors.hpp"
#include "cvdc/minimize.hpp"
#include "cvdc/parallel.hpp"

namespace cvdc {

namespace {

constexpr int kCoarseSteps = 200;

std::optional<double> try_h_max(const ChannelStats& stats, double n_bar) {
  try {
    return h_max(stats, EnergyBudget{n_bar});
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

GaussianState zero_displacement(const GaussianState& state, int mode) {
  const double mx = state.mean()(2 * mode);
  const double mp = state.mean()(2 * mode + 1);
  return displace(state, mode,
                  std::complex<double>(-mx, -mp) / std::numbers::sqrt2);
}

double optimal_rotation(const ChannelStats& stats) {
  if (stats.v_xp == 0.0) return 0.0;
  const double quarter = std::numbers::pi / 4.0;
  const double d = stats.v_xm - stats.v_pp;
  double theta = d == 0.0 ? quarter : 0.5 * std::atan(2.0 * stats.v_xp / d);
  if (theta <= -quarter) theta += 2.0 * quarter;
  return theta;
}

GaussianState paired_rotation(const GaussianState& state, int mode_a,
                              int mode_b, double theta) {
  return local_rotate(local_rotate(state, mode_a, theta), mode_b, -theta);
}

ChannelStats squeezed_pair_stats(const GaussianState& state, int mode_a,
                                 int mode_b, double r1, double r2) {
  // Squeezing multiplies cov(i, j) by s_i s_j with s = (e^r, e^-r) per mode.
  const Matrix& cov = state.cov();
  const int xa = 2 * mode_a, pa = xa + 1, xb = 2 * mode_b, pb = xb + 1;
  const double ea = std::exp(r1), eb = std::exp(r2);
  const double sxa = ea, spa = 1.0 / ea, sxb = eb, spb = 1.0 / eb;

  ChannelStats st;
  st.v_xm = 0.5 * (cov(xa, xa) * sxa * sxa + cov(xb, xb) * sxb * sxb -
                   2.0 * cov(xa, xb) * sxa * sxb);
  st.v_pp = 0.5 * (cov(pa, pa) * spa * spa + cov(pb, pb) * spb * spb +
                   2.0 * cov(pa, pb) * spa * spb);
  st.v_xp = 0.5 * (cov(xa, pa) * sxa * spa + cov(xa, pb) * sxa * spb -
                   cov(xb, pa) * sxb * spa - cov(xb, pb) * sxb * spb);
  const double mx = state.mean()(xa) * sxa;
  const double mp = state.mean()(pa) * spa;
  st.n0 = 0.5 * (mx * mx + cov(xa, xa) * sxa * sxa + mp * mp +
                 cov(pa, pa) * spa * spa - 1.0);
  return st;
}

SqueezeSearchResult minimize_v_product(const GaussianState& state, int mode_a,
                                       int mode_b) {
  if (state.n_modes() < 2) throw StructuralError("minimize_v_product needs two modes");
  // Validates the indices once up front.
  (void)pair_stats(state, mode_a, mode_b);

  auto objective = [&](double log_t) {
    return squeezed_pair_stats(state, mode_a, mode_b, 0.5 * log_t, -0.5 * log_t)
        .determinant();
  };

  // Coarse scan to bracket the global minimum, then golden section inside.
  const double step = 2.0 * kLogTBracket / kCoarseSteps;
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kCoarseSteps; ++k) {
    const double v = objective(-kLogTBracket + k * step);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  if (best == 0 || best == kCoarseSteps) {
    throw BoundaryError("V-product minimum lies on the log t bracket edge (" +
                        std::to_string(best == 0 ? -kLogTBracket : kLogTBracket) +
                        "); no interior minimum");
  }
  const double lo = -kLogTBracket + (best - 1) * step;
  const double hi = -kLogTBracket + (best + 1) * step;
  const auto min = numerics::golden_section(objective, lo, hi, kLogTTolerance);

  SqueezeSearchResult result;
  result.t_opt = std::exp(min.x);
  result.v_product_min = min.value;
  result.r1 = 0.5 * min.x;
  result.r2 = -0.5 * min.x;
  result.iterations = min.iterations + kCoarseSteps + 1;
  return result;
}

SqueezeSearchResult minimize_v_product(const TwoModeStandardForm& form) {
  return minimize_v_product(two_mode_standard(form));
}

PipelineResult optimize_pipeline(const GaussianState& state, double n_bar) {
  if (state.n_modes() != 2) {
    throw StructuralError("optimize_pipeline expects a two-mode state; reduce first");
  }
  const GaussianState centered = zero_displacement(state, 0);
  const double theta = optimal_rotation(pair_stats(centered, 0, 1));
  const GaussianState rotated = paired_rotation(centered, 0, 1, theta);
  const SqueezeSearchResult squeeze = minimize_v_product(rotated);

  GaussianState squeezed =
      local_squeeze(local_squeeze(rotated, 0, squeeze.r1), 1, squeeze.r2);
  // Squeezing a rotated frame can reintroduce V_xp; rotate it away again.
  const double theta2 = optimal_rotation(pair_stats(squeezed, 0, 1));
  if (theta2 != 0.0) squeezed = paired_rotation(squeezed, 0, 1, theta2);

  const auto h_rotated = try_h_max(pair_stats(rotated, 0, 1), n_bar);
  const auto h_squeezed = try_h_max(pair_stats(squeezed, 0, 1), n_bar);

  bool use_squeezed = false;
  if (h_squeezed && (!h_rotated || *h_squeezed >= *h_rotated)) use_squeezed = true;

  const GaussianState& chosen = use_squeezed ? squeezed : rotated;
  // advantage() throws the domain error if neither candidate is usable.
  CapacityReport report = advantage(pair_stats(chosen, 0, 1), EnergyBudget{n_bar});
  return PipelineResult{chosen, report, theta, squeeze, use_squeezed};
}

double sender_energy(const GaussianState& state, int mode,
                     EnergyAccounting accounting) {
  const double n = mean_photon(state, mode);
  return accounting == EnergyAccounting::photon_number ? n : 2.0 * n + 1.0;
}

double joint_squeeze_objective(const GaussianState& state, double n_bar,
                               double r1, double r2,
                               EnergyAccounting accounting) {
  ChannelStats st = squeezed_pair_stats(state, 0, 1, r1, r2);
  if (accounting == EnergyAccounting::quadrature_sum) st.n0 = 2.0 * st.n0 + 1.0;
  const auto h = try_h_max(st, n_bar);
  return h ? *h : -std::numeric_limits<double>::infinity();
}

JointSqueezeResult refine_joint_squeeze(const GaussianState& state, double n_bar,
                                        EnergyAccounting accounting) {
  if (state.n_modes() != 2) {
    throw StructuralError("refine_joint_squeeze expects a two-mode state");
  }
  const SqueezeSearchResult seed = minimize_v_product(state);
  auto negated = [&](const std::array<double, 2>& r) {
    if (std::abs(r[0]) > kJointSqueezeBox || std::abs(r[1]) > kJointSqueezeBox) {
      return std::numeric_limits<double>::infinity();
    }
    return -joint_squeeze_objective(state, n_bar, r[0], r[1], accounting);
  };
  const auto min = numerics::nelder_mead_2d(negated, {seed.r1, seed.r2}, 0.1,
                                            1e-10, 1e-14);
  if (!std::isfinite(min.value)) {
    throw DomainError("joint squeeze refinement found no point in the "
                      "two-quadrature regime inside [-1, 1]^2");
  }
  return {min.x[0], min.x[1], -min.value, min.iterations};
}

RegionRecord evaluate_cell(double a1, double n_bar, double c2, double c3) {
  RegionRecord rec;
  rec.c2 = c2;
  rec.c3 = c3;
  rec.a2 = variance_from_coefficient(a1, c2);
  rec.a3 = variance_from_coefficient(a1, c3);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rec.h_ab = rec.h_ac = rec.crit_ab = rec.crit_ac = nan;
  rec.t_opt_ab = rec.t_opt_ac = rec.crit_ab_opt = rec.crit_ac_opt = nan;

  std::optional<GaussianState> state;
  try {
    state = pure_three_mode(a1, rec.a2, rec.a3);
  } catch (const std::exception& e) {
    rec.error = e.what();
    return rec;
  }
  const double c_coh = capacity_single_mode(Scheme::coherent, n_bar);
  const double c_sq = capacity_single_mode(Scheme::squeezed, n_bar);

  struct PairOut {
    double& h;
    double& crit;
    bool& coh;
    bool& sq;
    double& t_opt;
    double& crit_opt;
    int receiver;
  };
  PairOut pairs[2] = {
      {rec.h_ab, rec.crit_ab, rec.beats_coh_ab, rec.beats_sq_ab, rec.t_opt_ab,
       rec.crit_ab_opt, 1},
      {rec.h_ac, rec.crit_ac, rec.beats_coh_ac, rec.beats_sq_ac, rec.t_opt_ac,
       rec.crit_ac_opt, 2}};
  for (PairOut& out : pairs) {
    const char* tag = out.receiver == 1 ? "ab: " : "ac: ";
    const ChannelStats st = pair_stats(*state, 0, out.receiver);
    out.crit = st.determinant();
    try {
      out.h = h_max(st, EnergyBudget{n_bar});
      out.coh = out.h > c_coh;
      out.sq = out.h > c_sq;
    } catch (const std::exception& e) {
      if (!rec.error.empty()) rec.error += "; ";
      rec.error += tag + std::string(e.what());
    }
    try {
      const SqueezeSearchResult s = minimize_v_product(*state, 0, out.receiver);
      out.t_opt = s.t_opt;
      out.crit_opt = s.v_product_min;
    } catch (const std::exception& e) {
      if (!rec.error.empty()) rec.error += "; ";
      rec.error += tag + std::string(e.what());
    }
  }
  rec.overlap_flag = below_threshold(rec.crit_ab_opt, kSqueezedThreshold) &&
                     below_threshold(rec.crit_ac_opt, kSqueezedThreshold);
  return rec;
}

std::vector<RegionRecord> region_scan(const ScanConfig& config) {
  if (!(config.a1 > kVacuumVariance)) {
    throw DomainError("region scan needs a1 > 1/2");
  }
  if (config.grid < 2) throw DomainError("region scan needs grid >= 2");
  const int g = config.grid;

  std::vector<std::vector<RegionRecord>> rows(static_cast<std::size_t>(g));
  parallel_for(static_cast<std::size_t>(g), resolve_threads(config.threads),
               [&](std::size_t i) {
                 const double c2 = config.c_max * static_cast<double>(i) / (g - 1);
                 auto& row = rows[i];
                 for (int j = 0; j < g; ++j) {
                   const double c3 = config.c_max * j / (g - 1);
                   if (!triangle_valid(config.a1,
                                       variance_from_coefficient(config.a1, c2),
                                       variance_from_coefficient(config.a1, c3))
                            .valid) {
                     continue;
                   }
                   row.push_back(evaluate_cell(config.a1, config.n_bar, c2, c3));
                 }
               });

  std::vector<RegionRecord> out;
  for (auto& row : rows) {
    for (auto& rec : row) out.push_back(std::move(rec));
  }
  return out;
}

std::size_t count_both_beat(const std::vector<RegionRecord>& records,
                            Scheme scheme) {
  std::size_t count = 0;
  for (const RegionRecord& r : records) {
    switch (scheme) {
      case Scheme::coherent:
        count += (r.beats_coh_ab && r.beats_coh_ac) ? 1 : 0;
        break;
      case Scheme::squeezed:
        count += (r.beats_sq_ab && r.beats_sq_ac) ? 1 : 0;
        break;
      case Scheme::fock:
        throw StructuralError("scan records carry coherent and squeezed flags only");
    }
  }
  return count;
}

}  // namespace cvdc
