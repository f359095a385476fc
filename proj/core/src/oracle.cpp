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

#include "cvdc/oracle.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/version.hpp>

#include "cvdc/errors.hpp"
#include "cvdc/parallel.hpp"

namespace cvdc {

namespace {

using Engine = boost::random::mt19937_64;

Engine shard_engine(std::uint64_t seed, int shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  return Engine(seq);
}

std::size_t shard_size(std::size_t total, int shard) {
  const auto k = static_cast<std::size_t>(kMonteCarloShards);
  return total / k + (static_cast<std::size_t>(shard) < total % k ? 1 : 0);
}

void check_encoding(const EncodingPolicy& enc) {
  if (!(enc.sigma_x2 >= 0.0) || !(enc.sigma_p2 >= 0.0) ||
      !std::isfinite(enc.sigma_x2) || !std::isfinite(enc.sigma_p2)) {
    throw DomainError("encoding variances must be finite and nonnegative");
  }
}

// Indices (0 = alpha_x, 1 = alpha_p) with nonzero prior variance.
std::vector<int> active_inputs(const EncodingPolicy& enc) {
  std::vector<int> idx;
  if (enc.sigma_x2 > 0.0) idx.push_back(0);
  if (enc.sigma_p2 > 0.0) idx.push_back(1);
  return idx;
}

// 1/2 ln(det S_a det S_b / det S) for a joint covariance over
// (active alpha components, beta_x, beta_p).
double gaussian_mi(const Eigen::Matrix4d& joint, const std::vector<int>& active) {
  if (active.empty()) return 0.0;
  std::vector<int> keep = active;
  keep.push_back(2);
  keep.push_back(3);
  const auto n = static_cast<Eigen::Index>(keep.size());
  const auto na = static_cast<Eigen::Index>(active.size());
  Matrix s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      s(i, j) = joint(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    }
  }
  const double det_joint = s.determinant();
  const double det_a = s.topLeftCorner(na, na).determinant();
  const double det_b = s.bottomRightCorner(2, 2).determinant();
  if (!(det_joint > 0.0) || !(det_a > 0.0) || !(det_b > 0.0)) {
    throw DomainError("joint covariance is singular (det = " +
                      std::to_string(det_joint) + ")");
  }
  return 0.5 * std::log(det_a * det_b / det_joint);
}

struct Moments {
  std::size_t count = 0;
  std::array<double, 4> sum{};
  std::array<double, 16> outer{};

  void add(const std::array<double, 4>& v) {
    ++count;
    for (int i = 0; i < 4; ++i) {
      sum[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
      for (int j = i; j < 4; ++j) {
        outer[static_cast<std::size_t>(4 * i + j)] +=
            v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      }
    }
  }

  void merge(const Moments& o) {
    count += o.count;
    for (std::size_t i = 0; i < 4; ++i) sum[i] += o.sum[i];
    for (std::size_t i = 0; i < 16; ++i) outer[i] += o.outer[i];
  }

  Eigen::Matrix4d covariance() const {
    const double n = static_cast<double>(count);
    Eigen::Matrix4d c;
    for (int i = 0; i < 4; ++i) {
      for (int j = i; j < 4; ++j) {
        const double v = outer[static_cast<std::size_t>(4 * i + j)] / n -
                         sum[static_cast<std::size_t>(i)] * sum[static_cast<std::size_t>(j)] / (n * n);
        c(i, j) = v;
        c(j, i) = v;
      }
    }
    return c;
  }
};

// Draws one shard. `sink` receives (alpha_x, alpha_p, beta_x, beta_p) with
// beta measured from the model offset.
template <class Sink>
void draw_shard(const MeasurementModel& model, const EncodingPolicy& enc,
                std::uint64_t seed, int shard, std::size_t count, Sink&& sink) {
  Engine engine = shard_engine(seed, shard);
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  const double sx = std::sqrt(0.5 * enc.sigma_x2);
  const double sp = std::sqrt(0.5 * enc.sigma_p2);
  const Eigen::Matrix2d chol = model.noise.llt().matrixL();
  for (std::size_t k = 0; k < count; ++k) {
    const double ax = sx * normal(engine);
    const double ap = sp * normal(engine);
    const double z1 = normal(engine);
    const double z2 = normal(engine);
    const double bx = model.gain(0, 0) * ax + model.gain(0, 1) * ap + chol(0, 0) * z1;
    const double bp = model.gain(1, 0) * ax + model.gain(1, 1) * ap +
                      chol(1, 0) * z1 + chol(1, 1) * z2;
    sink(std::array<double, 4>{ax, ap, bx, bp});
  }
}

void check_noise(const MeasurementModel& model) {
  Eigen::LLT<Eigen::Matrix2d> llt(model.noise);
  if (llt.info() != Eigen::Success || !(model.noise.determinant() > 0.0)) {
    throw DomainError("measurement noise covariance is not positive definite");
  }
}

}  // namespace

void MCConfig::check() const {
  if (samples < kMinSamples) {
    throw DomainError("Monte Carlo needs at least " + std::to_string(kMinSamples) +
                      " samples, got " + std::to_string(samples));
  }
  if (bins < 1) throw DomainError("bins must be positive");
}

std::string rng_algorithm() {
  return "boost::random::mt19937_64+normal_distribution(ziggurat) boost-" +
         std::string(BOOST_LIB_VERSION) + " seed_seq{seed_lo,seed_hi,shard} shards=" +
         std::to_string(kMonteCarloShards);
}

ConditionalGaussian conditional_via_symplectic(const GaussianState& state,
                                               std::complex<double> alpha,
                                               int sender, int receiver) {
  const GaussianState out =
      beam_splitter_5050(displace(state, sender, alpha), sender, receiver);
  const int ix = 2 * sender;
  const int ip = 2 * receiver + 1;
  ConditionalGaussian c;
  c.center << out.mean()(ix), out.mean()(ip);
  c.cov << out.cov()(ix, ix), out.cov()(ix, ip), out.cov()(ip, ix), out.cov()(ip, ip);
  return c;
}

MeasurementModel measurement_model(const GaussianState& state, int sender,
                                   int receiver) {
  const ConditionalGaussian c0 = conditional_via_symplectic(state, {0.0, 0.0}, sender, receiver);
  const ConditionalGaussian cx = conditional_via_symplectic(state, {1.0, 0.0}, sender, receiver);
  const ConditionalGaussian cp = conditional_via_symplectic(state, {0.0, 1.0}, sender, receiver);
  MeasurementModel m;
  m.offset = c0.center;
  m.gain.col(0) = cx.center - c0.center;
  m.gain.col(1) = cp.center - c0.center;
  m.noise = c0.cov;
  return m;
}

MeasurementModel measurement_model(const ChannelStats& stats) {
  stats.check();
  MeasurementModel m;
  m.noise << stats.v_xm, stats.v_xp, stats.v_xp, stats.v_pp;
  return m;
}

double joint_gaussian_mi(const MeasurementModel& model, const EncodingPolicy& enc) {
  check_encoding(enc);
  Eigen::Matrix2d prior = Eigen::Matrix2d::Zero();
  prior(0, 0) = 0.5 * enc.sigma_x2;
  prior(1, 1) = 0.5 * enc.sigma_p2;
  Eigen::Matrix4d joint;
  joint.topLeftCorner<2, 2>() = prior;
  joint.topRightCorner<2, 2>() = prior * model.gain.transpose();
  joint.bottomLeftCorner<2, 2>() = model.gain * prior;
  joint.bottomRightCorner<2, 2>() = model.gain * prior * model.gain.transpose() + model.noise;
  return gaussian_mi(joint, active_inputs(enc));
}

double joint_gaussian_mi(const GaussianState& state, const EncodingPolicy& enc) {
  return joint_gaussian_mi(measurement_model(state), enc);
}

MCEstimate monte_carlo_mi(const MeasurementModel& model, const EncodingPolicy& enc,
                          const MCConfig& cfg, int threads) {
  cfg.check();
  check_encoding(enc);
  check_noise(model);
  MCEstimate result;
  result.samples = cfg.samples;
  result.algorithm = rng_algorithm();
  const std::vector<int> active = active_inputs(enc);
  if (active.empty()) return result;

  std::vector<Moments> shards(kMonteCarloShards);
  parallel_for(shards.size(), resolve_threads(threads), [&](std::size_t k) {
    const int shard = static_cast<int>(k);
    Moments& m = shards[k];
    draw_shard(model, enc, cfg.seed, shard, shard_size(cfg.samples, shard),
               [&m](const std::array<double, 4>& v) { m.add(v); });
  });

  Moments pooled;
  std::vector<double> per_shard;
  per_shard.reserve(shards.size());
  for (const Moments& m : shards) {
    pooled.merge(m);
    per_shard.push_back(gaussian_mi(m.covariance(), active));
  }
  result.estimate = gaussian_mi(pooled.covariance(), active);
  const double n = static_cast<double>(per_shard.size());
  const double mean = std::accumulate(per_shard.begin(), per_shard.end(), 0.0) / n;
  double ss = 0.0;
  for (const double v : per_shard) ss += (v - mean) * (v - mean);
  result.stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return result;
}

MCEstimate monte_carlo_mi(const GaussianState& state, const EncodingPolicy& enc,
                          const MCConfig& cfg, int threads) {
  return monte_carlo_mi(measurement_model(state), enc, cfg, threads);
}

void write_samples(const MeasurementModel& model, const EncodingPolicy& enc,
                   const MCConfig& cfg, std::ostream& out) {
  cfg.check();
  check_encoding(enc);
  check_noise(model);
  out << "# algorithm=" << rng_algorithm() << "\n# seed=" << cfg.seed
      << "\nalpha_x,alpha_p,beta_x,beta_p\n";
  const auto old_precision = out.precision(17);
  for (int shard = 0; shard < kMonteCarloShards; ++shard) {
    draw_shard(model, enc, cfg.seed, shard, shard_size(cfg.samples, shard),
               [&](const std::array<double, 4>& v) {
                 out << v[0] << ',' << v[1] << ',' << v[2] + model.offset(0) << ','
                     << v[3] + model.offset(1) << '\n';
               });
  }
  out.precision(old_precision);
}

}  // namespace cvdc
