// Copyright 2026 The Offload Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "offload/generator.hpp"

#include <cmath>
#include <random>
#include <string>

#include "offload/errors.hpp"

namespace offload {

GammaConvention parse_gamma_convention(std::string_view text) {
  if (text == "scale") return GammaConvention::kShapeScale;
  if (text == "rate") return GammaConvention::kShapeRate;
  throw ConfigError("gamma convention must be 'scale' or 'rate', got '" +
                    std::string(text) + "'");
}

void check_generator_config(const GeneratorConfig& c) {
  if (c.l_max < 1) throw ConfigError("l_max must be >= 1");
  if (c.e_max < 1) throw ConfigError("e_max must be >= 1");
  if (c.n_h < 1) throw ConfigError("n_h must be >= 1");
  if (!(c.gamma_scale > 0.0) || !std::isfinite(c.gamma_scale)) {
    throw ConfigError("gamma scale parameter must be positive");
  }
  for (double n : {c.n_mu, c.n_gamma, c.n_xi}) {
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw ConfigError("gamma divisor n must be positive");
    }
    if (!(c.gamma_shape_base / n > 0.0)) {
      throw DomainError("gamma shape must be positive");
    }
  }
}

namespace {

class RateSampler {
 public:
  RateSampler(const GeneratorConfig& c, double divisor)
      : dist_(c.gamma_shape_base / divisor,
              c.convention == GammaConvention::kShapeScale
                  ? c.gamma_scale
                  : 1.0 / c.gamma_scale) {}

  // Gamma draws can underflow to 0 for small shapes; rates must stay > 0.
  double operator()(std::mt19937_64& rng) {
    double v = 0.0;
    while (!(v > 0.0)) v = dist_(rng);
    return v;
  }

 private:
  std::gamma_distribution<double> dist_;
};

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
  check_generator_config(config);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::int64_t> size_dist(1, config.l_max);
  std::uniform_int_distribution<std::int64_t> cap_dist(1, config.e_max);
  RateSampler mu_dist(config, config.n_mu);
  RateSampler gamma_dist(config, config.n_gamma);
  RateSampler xi_dist(config, config.n_xi);

  Instance instance;
  instance.n_h = config.n_h;
  for (std::size_t i = 0; i < config.tasks; ++i) {
    instance.tasks.push_back({i, size_dist(rng)});
  }

  if (config.uniform) {
    const std::int64_t capacity = cap_dist(rng);
    const MobilityParams mobility{mu_dist(rng), gamma_dist(rng)};
    for (std::size_t j = 0; j < config.helpers; ++j) {
      instance.helpers.push_back({j, capacity, mobility});
    }
    instance.xi = Matrix<double>(config.tasks, config.helpers, 1.0);
    for (std::size_t i = 0; i < config.tasks; ++i) {
      const double xi = xi_dist(rng);
      for (std::size_t j = 0; j < config.helpers; ++j) instance.xi(i, j) = xi;
    }
  } else {
    for (std::size_t j = 0; j < config.helpers; ++j) {
      const std::int64_t capacity = cap_dist(rng);
      const double mu = mu_dist(rng);
      const double gamma = gamma_dist(rng);
      instance.helpers.push_back({j, capacity, {mu, gamma}});
    }
    instance.xi = Matrix<double>(config.tasks, config.helpers, 1.0);
    for (std::size_t i = 0; i < config.tasks; ++i) {
      for (std::size_t j = 0; j < config.helpers; ++j) {
        instance.xi(i, j) = xi_dist(rng);
      }
    }
  }
  return instance;
}

}  // namespace offload
