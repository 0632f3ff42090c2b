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

#include "offload/knapsack_dp.hpp"

#include <algorithm>
#include <string>

#include "offload/errors.hpp"

namespace offload {

namespace {

void check_dp_inputs(std::span<const std::int64_t> sizes,
                     std::span<const double> probs, std::int64_t budget) {
  if (budget < 0) throw DomainError("capacity budget must be >= 0");
  if (sizes.size() != probs.size()) {
    throw StructuralError("sizes and probabilities differ in length");
  }
  for (std::int64_t l : sizes) {
    if (l < 1) throw DomainError("task sizes must be >= 1");
  }
}

}  // namespace

void check_uniform(const UniformInstance& uniform) {
  if (uniform.task_probs.size() != uniform.tasks.size()) {
    throw StructuralError("task_probs must have one entry per task");
  }
  if (uniform.capacity < 0) throw DomainError("capacity must be >= 0");
  for (double p : uniform.task_probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("task probabilities must lie in [0, 1]");
    }
  }
  for (const auto& t : uniform.tasks) {
    if (t.size < 1) throw DomainError("task sizes must be >= 1");
  }
}

UniformInstance uniform_view(const Instance& instance,
                             const SuccessProbMatrix& probs) {
  const std::size_t r = instance.task_count();
  const std::size_t h = instance.helper_count();
  if (probs.rows() != r || probs.cols() != h) {
    throw StructuralError("probability matrix does not match the instance");
  }
  if (h == 0) throw ConfigError("uniform scenario needs at least one helper");
  const auto& first = instance.helpers.front();
  for (const auto& helper : instance.helpers) {
    if (helper.capacity != first.capacity ||
        !(helper.mobility == first.mobility)) {
      throw ConfigError("helpers differ in capacity or mobility; "
                        "instance is not uniform");
    }
  }
  UniformInstance u;
  u.tasks = instance.tasks;
  u.helper_count = h;
  u.capacity = first.capacity;
  u.task_probs.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 1; j < h; ++j) {
      if (probs(i, j) != probs(i, 0)) {
        throw ConfigError("success probability of task " + std::to_string(i) +
                          " depends on the helper; instance is not uniform");
      }
    }
    u.task_probs[i] = probs(i, 0);
  }
  return u;
}

DpTable dp_table(std::span<const std::int64_t> sizes,
                 std::span<const double> probs, std::int64_t budget) {
  check_dp_inputs(sizes, probs, budget);
  const std::size_t n = sizes.size();
  const auto cols = static_cast<std::size_t>(budget) + 1;
  DpTable table{Matrix<double>(n + 1, cols, 0.0),
                Matrix<std::uint8_t>(n + 1, cols, std::uint8_t{0})};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::int64_t size = sizes[r - 1];
    for (std::size_t q = 0; q < cols; ++q) {
      double best = table.values(r - 1, q);
      if (size <= static_cast<std::int64_t>(q)) {
        const double take =
            probs[r - 1] + table.values(r - 1, q - static_cast<std::size_t>(size));
        if (take > best) {
          best = take;
          table.choices(r, q) = 1;
        }
      }
      table.values(r, q) = best;
    }
  }
  return table;
}

DpSolution dp_solve(std::span<const std::int64_t> sizes,
                    std::span<const double> probs, std::int64_t budget) {
  const DpTable table = dp_table(sizes, probs, budget);
  const std::size_t n = sizes.size();
  DpSolution sol{std::vector<bool>(n, false),
                 table.values(n, static_cast<std::size_t>(budget))};
  auto q = static_cast<std::size_t>(budget);
  for (std::size_t r = n; r >= 1; --r) {
    if (table.choices(r, q)) {
      sol.selection[r - 1] = true;
      q -= static_cast<std::size_t>(sizes[r - 1]);
    }
  }
  return sol;
}

double dp_value(std::span<const std::int64_t> sizes,
                std::span<const double> probs, std::int64_t budget) {
  check_dp_inputs(sizes, probs, budget);
  const auto cols = static_cast<std::size_t>(budget) + 1;
  std::vector<double> prev(cols, 0.0);
  std::vector<double> cur(cols, 0.0);
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const std::int64_t size = sizes[r];
    for (std::size_t q = 0; q < cols; ++q) {
      double best = prev[q];
      if (size <= static_cast<std::int64_t>(q)) {
        const double take = probs[r] + prev[q - static_cast<std::size_t>(size)];
        if (take > best) best = take;
      }
      cur[q] = best;
    }
    prev.swap(cur);
  }
  return prev.back();
}

double upper_bound(const UniformInstance& uniform) {
  check_uniform(uniform);
  if (uniform.tasks.empty()) return 0.0;
  std::vector<std::int64_t> sizes;
  for (const auto& t : uniform.tasks) sizes.push_back(t.size);
  std::int64_t total = 0;
  for (std::int64_t l : sizes) total += l;
  // Capacity beyond the total size cannot be used.
  std::int64_t pooled = uniform.capacity *
                        static_cast<std::int64_t>(uniform.helper_count);
  if (pooled > total) pooled = total;
  return dp_value(sizes, uniform.task_probs, pooled) /
         static_cast<double>(uniform.tasks.size());
}

Assignment tsdp(const UniformInstance& uniform) {
  check_uniform(uniform);
  const std::size_t r = uniform.tasks.size();
  Assignment x(r, uniform.helper_count);
  std::vector<std::size_t> remaining(r);
  for (std::size_t i = 0; i < r; ++i) remaining[i] = i;

  for (std::size_t j = 0; j < uniform.helper_count && !remaining.empty(); ++j) {
    std::vector<std::int64_t> sizes;
    std::vector<double> probs;
    std::int64_t total = 0;
    for (std::size_t i : remaining) {
      sizes.push_back(uniform.tasks[i].size);
      probs.push_back(uniform.task_probs[i]);
      total += uniform.tasks[i].size;
    }
    const DpSolution sol =
        dp_solve(sizes, probs, std::min(uniform.capacity, total));
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (sol.selection[k]) {
        x.set(remaining[k], j);
      } else {
        rest.push_back(remaining[k]);
      }
    }
    remaining.swap(rest);
  }
  return x;
}

}  // namespace offload
