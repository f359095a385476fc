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

// Derivative-free minimizers used by the optimization module.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace cvdc::numerics {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for a unimodal f on [lo, hi], stopping once the
/// bracket is narrower than `tolerance`.
template <typename F>
ScalarMinimum golden_section(F&& f, double lo, double hi, double tolerance,
                             int max_iterations = 1000) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > tolerance && it < max_iterations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), it};
}

struct SimplexMinimum {
  std::array<double, 2> x{};
  double value = 0.0;
  int iterations = 0;
};

/// Nelder-Mead on two variables with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). Stops when
/// both the simplex diameter and the spread of values fall below the
/// tolerances.
template <typename F>
SimplexMinimum nelder_mead_2d(F&& f, std::array<double, 2> start, double step,
                              double x_tolerance, double f_tolerance,
                              int max_iterations = 5000) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> p{start, Point{start[0] + step, start[1]},
                         Point{start[0], start[1] + step}};
  std::array<double, 3> v{f(p[0]), f(p[1]), f(p[2])};

  auto lerp = [](const Point& from, const Point& to, double t) {
    return Point{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
  };

  int it = 0;
  for (; it < max_iterations; ++it) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&v](int i, int j) { return v[i] < v[j]; });
    const int best = order[0];
    const int mid = order[1];
    const int worst = order[2];

    double diameter = 0.0;
    for (int k = 1; k < 3; ++k) {
      diameter = std::max({diameter, std::abs(p[order[k]][0] - p[best][0]),
                           std::abs(p[order[k]][1] - p[best][1])});
    }
    if (diameter < x_tolerance && std::abs(v[worst] - v[best]) < f_tolerance) break;

    const Point centroid{0.5 * (p[best][0] + p[mid][0]), 0.5 * (p[best][1] + p[mid][1])};
    const Point reflected = lerp(centroid, p[worst], -1.0);
    const double fr = f(reflected);
    if (fr < v[best]) {
      const Point expanded = lerp(centroid, p[worst], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        p[worst] = expanded;
        v[worst] = fe;
      } else {
        p[worst] = reflected;
        v[worst] = fr;
      }
      continue;
    }
    if (fr < v[mid]) {
      p[worst] = reflected;
      v[worst] = fr;
      continue;
    }
    const bool outside = fr < v[worst];
    const Point contracted = outside ? lerp(centroid, reflected, 0.5)
                                     : lerp(centroid, p[worst], 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : v[worst])) {
      p[worst] = contracted;
      v[worst] = fc;
      continue;
    }
    for (int k = 1; k < 3; ++k) {
      const int idx = order[k];
      p[idx] = lerp(p[best], p[idx], 0.5);
      v[idx] = f(p[idx]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  return {p[best], v[best], it};
}

}  // namespace cvdc::numerics
