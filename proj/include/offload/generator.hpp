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

#ifndef OFFLOAD_GENERATOR_HPP_
#define OFFLOAD_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "offload/model.hpp"

namespace offload {

// How the two Gamma parameters are read. Shape/scale gives mean
// shape * scale; shape/rate gives mean shape / rate.
enum class GammaConvention { kShapeScale, kShapeRate };

GammaConvention parse_gamma_convention(std::string_view text);  // "scale" | "rate"

// Random instance recipe. Rates mu_j, gamma_j and xi_ij are drawn from
// Gamma(gamma_shape_base / n, gamma_scale) with a separate divisor n per rate
// family. Sizes are uniform on [1, l_max], capacities uniform on [1, e_max].
// l_max may exceed e_max; such tasks are simply never assignable.
struct GeneratorConfig {
  std::size_t tasks = 10;
  std::size_t helpers = 5;
  std::int64_t l_max = 10;
  std::int64_t e_max = 30;
  double gamma_shape_base = 4.43;
  double gamma_scale = 1.0 / 1088.0;
  double n_mu = 1.0;
  double n_gamma = 1.0;
  double n_xi = 1.0;
  int n_h = 1;
  // All helpers share one (mu, gamma, capacity) and xi_ij = xi_i.
  bool uniform = false;
  GammaConvention convention = GammaConvention::kShapeScale;
  std::uint64_t seed = 1;
};

void check_generator_config(const GeneratorConfig& config);

Instance generate_instance(const GeneratorConfig& config);

}  // namespace offload

#endif  // OFFLOAD_GENERATOR_HPP_
