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

// Random physical Gaussian states for property tests. Symplectic matrices
// come from exp(Omega H) with H symmetric, built here rather than from the
// library's own factories.

#pragma once

#include <cstdint>
#include <random>

#include "cvdc/gaussian.hpp"
#include "cvdc/standard_forms.hpp"

namespace cvdc::testing {

using Rng = std::mt19937_64;

struct StateShape {
  /// Symmetric generator entries ~ U(-scale, scale).
  double scale = 0.6;
  /// Symplectic eigenvalues drawn from [1/2, 1/2 + max_excess].
  double max_excess = 1.0;
  /// Mean entries ~ U(-max_mean, max_mean).
  double max_mean = 0.0;
};

Matrix random_symplectic(int n_modes, Rng& rng, double scale);

/// S diag(nu_k) S^T with random symplectic S and nu_k >= 1/2.
GaussianState random_physical_state(int n_modes, Rng& rng, const StateShape& shape = {});

/// Pure state: every symplectic eigenvalue is exactly 1/2.
GaussianState random_pure_state(int n_modes, Rng& rng, double scale = 0.6);

/// Average of cov over all mode permutations; zero mean. Physical whenever
/// the input is.
GaussianState symmetrize(const GaussianState& state);

/// (a1, a2, a3) inside the pure three-mode triangle, a1 in (1/2, a1_max].
PureThreeModeParams random_triangle_params(Rng& rng, double a1_max = 3.0);

/// Independent evaluation of the channel variances from explicit
/// measurement vectors u = (e_xa - e_xb)/sqrt2, w = (e_pa + e_pb)/sqrt2.
ChannelStats stats_by_vectors(const GaussianState& state, int a, int b);

/// Smallest eigenvalue of the Hermitian matrix cov + (i/2) Omega.
double min_uncertainty_eigenvalue(const Matrix& cov);

}  // namespace cvdc::testing
