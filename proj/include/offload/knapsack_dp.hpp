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

#ifndef OFFLOAD_KNAPSACK_DP_HPP_
#define OFFLOAD_KNAPSACK_DP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "offload/matrix.hpp"
#include "offload/model.hpp"

namespace offload {

// Uniform scenario: every helper has the same mobility and capacity, so a
// task's success probability does not depend on which helper runs it.
struct UniformInstance {
  std::vector<TaskSpec> tasks;
  std::size_t helper_count = 0;
  std::int64_t capacity = 0;
  std::vector<double> task_probs;
};

// Throws StructuralError / DomainError on a malformed uniform instance.
void check_uniform(const UniformInstance& uniform);

// Extracts the uniform view of a full instance. Throws ConfigError if helpers
// differ in capacity or mobility, or if p(i, j) varies with j.
UniformInstance uniform_view(const Instance& instance,
                             const SuccessProbMatrix& probs);

// values(r, q): best probability sum over the first r tasks with capacity q.
// choices(r, q) is 1 iff task r-1 is taken at that state.
struct DpTable {
  Matrix<double> values;
  Matrix<std::uint8_t> choices;
};

struct DpSolution {
  std::vector<bool> selection;
  double value = 0.0;  // un-normalized probability sum
};

DpTable dp_table(std::span<const std::int64_t> sizes,
                 std::span<const double> probs, std::int64_t budget);

// 0/1 knapsack by the take/skip recursion. Ties keep the task out.
DpSolution dp_solve(std::span<const std::int64_t> sizes,
                    std::span<const double> probs, std::int64_t budget);

// Same optimum as dp_solve(...).value with O(budget) memory.
double dp_value(std::span<const std::int64_t> sizes,
                std::span<const double> probs, std::int64_t budget);

// Optimum of the pooled relaxation (one knapsack of capacity E*H), divided
// by R. Dominates every feasible assignment of the uniform instance.
double upper_bound(const UniformInstance& uniform);

// Fills helpers one at a time with a knapsack over the still-unassigned
// tasks.
Assignment tsdp(const UniformInstance& uniform);

}  // namespace offload

#endif  // OFFLOAD_KNAPSACK_DP_HPP_
