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

// Reference computations written independently of the library code paths
// they check.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "cvdc/gaussian.hpp"

namespace cvdc::testing {

/// Brent maximization on [lo, hi]; returns (argmax, max).
inline std::pair<double, double> brent_maximize(const std::function<double(double)>& f,
                                                double lo, double hi) {
  std::uintmax_t iters = 500;
  const auto r = boost::math::tools::brent_find_minima(
      [&](double x) { return -f(x); }, lo, hi, 52, iters);
  return {r.first, -r.second};
}

/// ln(1 + sigma^2 e^{2s}) for a two-mode squeezed vacuum resource.
inline double tmsv_mutual_information(double sigma2, double s) {
  return std::log1p(sigma2 * std::exp(2.0 * s));
}

/// Mutual information of the dual-homodyne channel written out from the
/// Gaussian entropies: 1/2 ln(det(V + P) / det V), P = diag(sx/2, sp/2).
inline double entropy_mi(const ChannelStats& st, double sigma_x2, double sigma_p2) {
  const double det_v = st.v_xm * st.v_pp - st.v_xp * st.v_xp;
  const double det_out = (st.v_xm + 0.5 * sigma_x2) * (st.v_pp + 0.5 * sigma_p2) -
                         st.v_xp * st.v_xp;
  return 0.5 * std::log(det_out / det_v);
}

/// Best split of 2 n_s between the two quadratures, found numerically.
inline double numeric_best_mi(const ChannelStats& st, double n_s) {
  return brent_maximize([&](double sx) { return entropy_mi(st, sx, 2.0 * n_s - sx); },
                        0.0, 2.0 * n_s)
      .second;
}

}  // namespace cvdc::testing
