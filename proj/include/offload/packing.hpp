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

#ifndef OFFLOAD_PACKING_HPP_
#define OFFLOAD_PACKING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "offload/model.hpp"

namespace offload {

// One helper together with the non-empty set of tasks it runs.
struct PackingEntry {
  std::size_t helper = 0;
  std::vector<std::size_t> tasks;

  friend bool operator==(const PackingEntry&, const PackingEntry&) = default;
};

// A set of (helper, task set) pairs with distinct helpers and disjoint task
// sets. Helpers not mentioned are unused; tasks not mentioned are unassigned.
struct Packing {
  std::size_t task_count = 0;
  std::size_t helper_count = 0;
  std::vector<PackingEntry> entries;

  Packing() = default;
  Packing(std::size_t tasks, std::size_t helpers)
      : task_count(tasks), helper_count(helpers) {}

  std::vector<std::size_t> unused_helpers() const;    // L1
  std::vector<std::size_t> unassigned_tasks() const;  // L2
  std::size_t assigned_task_count() const;

  // Sorts entries by helper and each task list ascending.
  void normalize();

  friend bool operator==(const Packing&, const Packing&) = default;
};

// Throws StructuralError on out-of-range ids, repeated helpers, empty task
// sets, or a task that appears in two entries.
void check_packing(const Packing& packing);

// Structure is sound and every entry fits its helper's capacity.
bool packing_is_feasible(const Packing& packing,
                         std::span<const std::int64_t> sizes,
                         std::span<const std::int64_t> capacities);

Assignment assignment_from_packing(const Packing& packing);

// Inverse of assignment_from_packing; the result is normalized. Throws
// StructuralError if a task is assigned to more than one helper.
Packing packing_from_assignment(const Assignment& assignment);

// delta * (#unassigned tasks) + sum of p over assigned (task, helper) pairs.
double packing_value(const Packing& packing, const SuccessProbMatrix& probs,
                     double delta);

}  // namespace offload

#endif  // OFFLOAD_PACKING_HPP_
