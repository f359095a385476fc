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

#include "cvdc/densecode.hpp"

#include <cmath>
#include <string>

#include "cvdc/errors.hpp"

namespace cvdc {

namespace {

void check_budget(double n_bar) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
    throw DomainError("photon budget must be finite and nonnegative, got " +
                      std::to_string(n_bar));
  }
}

double rotated_spread(const ChannelStats& stats) {
  const double d = stats.v_xm - stats.v_pp;
  return std::sqrt(d * d + 4.0 * stats.v_xp * stats.v_xp);
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::coherent:
      return "coherent";
    case Scheme::squeezed:
      return "squeezed";
    case Scheme::fock:
      return "fock";
  }
  return "unknown";
}

Scheme scheme_from_string(std::string_view name) {
  if (name == "coherent" || name == "coh") return Scheme::coherent;
  if (name == "squeezed" || name == "sq") return Scheme::squeezed;
  if (name == "fock" || name == "number") return Scheme::fock;
  throw StructuralError("unknown scheme '" + std::string(name) +
                        "' (expected coherent, squeezed or fock)");
}

double EnergyBudget::encoding_photons(const ChannelStats& stats) const {
  check_budget(n_bar);
  if (n_bar < stats.n0) {
    throw DomainError("photon budget n_bar = " + std::to_string(n_bar) +
                      " is below the sender's own photon number n0 = " +
                      std::to_string(stats.n0));
  }
  return n_bar - stats.n0;
}

double capacity_single_mode(Scheme scheme, double n_bar) {
  check_budget(n_bar);
  switch (scheme) {
    case Scheme::coherent:
      return std::log1p(n_bar);
    case Scheme::squeezed:
      return std::log1p(2.0 * n_bar);
    case Scheme::fock:
      if (n_bar == 0.0) return 0.0;
      return (1.0 + n_bar) * std::log1p(n_bar) - n_bar * std::log(n_bar);
  }
  throw StructuralError("unknown scheme");
}

double tmsv_capacity(double n_bar) {
  check_budget(n_bar);
  return std::log1p(n_bar + n_bar * n_bar);
}

double mutual_information(const ChannelStats& stats, const EncodingPolicy& enc) {
  stats.check();
  if (!(enc.sigma_x2 >= 0.0) || !(enc.sigma_p2 >= 0.0)) {
    throw DomainError("encoding variances must be nonnegative");
  }
  const double numer = stats.v_pp * enc.sigma_x2 + stats.v_xm * enc.sigma_p2 +
                       0.5 * enc.sigma_x2 * enc.sigma_p2;
  return 0.5 * std::log1p(numer / (2.0 * stats.determinant()));
}

EncodingPolicy optimal_encoding(const ChannelStats& stats, double n_s) {
  stats.check();
  const double boundary = std::abs(stats.v_xm - stats.v_pp);
  if (!(n_s > boundary)) throw SingleQuadratureRegime(n_s, boundary);
  return {n_s + (stats.v_pp - stats.v_xm), n_s + (stats.v_xm - stats.v_pp)};
}

double h_max(const ChannelStats& stats, const EnergyBudget& budget) {
  stats.check();
  const double n_s = budget.encoding_photons(stats);
  const double boundary = rotated_spread(stats);
  if (!(n_s > boundary)) throw SingleQuadratureRegime(n_s, boundary);
  return std::log((n_s + stats.v_xm + stats.v_pp) /
                  (2.0 * std::sqrt(stats.determinant())));
}

double h_max_fixed_frame(const ChannelStats& stats, const EnergyBudget& budget) {
  return mutual_information(stats,
                            optimal_encoding(stats, budget.encoding_photons(stats)));
}

CapacityReport advantage(const ChannelStats& stats, const EnergyBudget& budget) {
  CapacityReport r;
  r.h_max = h_max(stats, budget);
  r.c_coh = capacity_single_mode(Scheme::coherent, budget.n_bar);
  r.c_sq = capacity_single_mode(Scheme::squeezed, budget.n_bar);
  r.c_fock = capacity_single_mode(Scheme::fock, budget.n_bar);
  r.u_eff = std::sqrt(stats.determinant());
  const double n_s = budget.n_bar - stats.n0;
  r.f_sq = (n_s + stats.v_xm + stats.v_pp) / (2.0 * r.u_eff) -
           (1.0 + 2.0 * budget.n_bar);
  r.beats_coh = r.h_max > r.c_coh;
  r.beats_sq = r.f_sq > 0.0;
  r.beats_fock = r.h_max > r.c_fock;
  r.criterion_sq = below_threshold(stats.determinant(), kSqueezedThreshold);
  r.criterion_fock = below_threshold(stats.determinant(), kFockThreshold);
  return r;
}

double fock_crossover(double tolerance) {
  auto gap = [](double n) {
    return tmsv_capacity(n) - capacity_single_mode(Scheme::fock, n);
  };
  double lo = 1.0;
  double hi = 3.0;
  if (!(gap(lo) < 0.0 && gap(hi) > 0.0)) {
    throw BoundaryError("dense-coding / number-state gap does not change sign on [1, 3]");
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cvdc
