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

#include "offload/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "offload/errors.hpp"

namespace offload {

namespace {

void check_shapes(const Instance& instance, const SuccessProbMatrix& probs) {
  if (probs.rows() != instance.task_count() ||
      probs.cols() != instance.helper_count()) {
    throw StructuralError("probability matrix does not match the instance");
  }
}

}  // namespace

Assignment mcsa(const Instance& instance, const SuccessProbMatrix& probs,
                const BaselineConfig& config) {
  check_shapes(instance, probs);
  if (config.mcsa_iterations < 1) {
    throw ConfigError("mcsa_iterations must be >= 1");
  }
  const std::size_t r = instance.task_count();
  const std::size_t h = instance.helper_count();
  Assignment best(r, h);
  if (r == 0 || h == 0) return best;

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick(0, h - 1);
  double best_value = -1.0;
  std::vector<std::size_t> choice(r);
  std::vector<std::int64_t> spare(h);
  for (int it = 0; it < config.mcsa_iterations; ++it) {
    for (std::size_t j = 0; j < h; ++j) spare[j] = instance.helpers[j].capacity;
    double value = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t j = pick(rng);
      if (spare[j] >= instance.tasks[i].size) {
        spare[j] -= instance.tasks[i].size;
        choice[i] = j;
        value += probs(i, j);
      } else {
        choice[i] = h;
      }
    }
    if (value > best_value) {
      best_value = value;
      best = Assignment(r, h);
      for (std::size_t i = 0; i < r; ++i) {
        if (choice[i] < h) best.set(i, choice[i]);
      }
    }
  }
  return best;
}

Assignment ga(const Instance& instance, const SuccessProbMatrix& probs) {
  check_shapes(instance, probs);
  const std::size_t r = instance.task_count();
  const std::size_t h = instance.helper_count();
  Assignment x(r, h);
  std::vector<std::int64_t> spare(h);
  for (std::size_t j = 0; j < h; ++j) spare[j] = instance.helpers[j].capacity;

  std::vector<std::size_t> order(h);
  std::vector<double> key(h);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      const auto& m = instance.helpers[j].mobility;
      key[j] = 1.0 / m.mu + 1.0 / m.gamma + 1.0 / instance.xi(i, j);
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
    for (std::size_t j : order) {
      if (spare[j] >= instance.tasks[i].size) {
        spare[j] -= instance.tasks[i].size;
        x.set(i, j);
        break;
      }
    }
  }
  return x;
}

}  // namespace offload
