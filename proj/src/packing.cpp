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

#include "offload/packing.hpp"

#include <algorithm>
#include <string>

#include "offload/errors.hpp"

namespace offload {

std::vector<std::size_t> Packing::unused_helpers() const {
  std::vector<bool> used(helper_count, false);
  for (const auto& e : entries) {
    if (e.helper < helper_count) used[e.helper] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < helper_count; ++j) {
    if (!used[j]) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> Packing::unassigned_tasks() const {
  std::vector<bool> assigned(task_count, false);
  for (const auto& e : entries) {
    for (std::size_t i : e.tasks) {
      if (i < task_count) assigned[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < task_count; ++i) {
    if (!assigned[i]) out.push_back(i);
  }
  return out;
}

std::size_t Packing::assigned_task_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.tasks.size();
  return n;
}

void Packing::normalize() {
  for (auto& e : entries) std::sort(e.tasks.begin(), e.tasks.end());
  std::sort(entries.begin(), entries.end(),
            [](const PackingEntry& a, const PackingEntry& b) {
              return a.helper < b.helper;
            });
}

void check_packing(const Packing& packing) {
  std::vector<bool> helper_seen(packing.helper_count, false);
  std::vector<bool> task_seen(packing.task_count, false);
  for (const auto& e : packing.entries) {
    if (e.helper >= packing.helper_count) {
      throw StructuralError("packing refers to unknown helper " +
                            std::to_string(e.helper));
    }
    if (helper_seen[e.helper]) {
      throw StructuralError("helper " + std::to_string(e.helper) +
                            " appears in two packing entries");
    }
    helper_seen[e.helper] = true;
    if (e.tasks.empty()) {
      throw StructuralError("packing entry for helper " +
                            std::to_string(e.helper) + " has no tasks");
    }
    for (std::size_t i : e.tasks) {
      if (i >= packing.task_count) {
        throw StructuralError("packing refers to unknown task " +
                              std::to_string(i));
      }
      if (task_seen[i]) {
        throw StructuralError("task " + std::to_string(i) +
                              " appears in two packing entries");
      }
      task_seen[i] = true;
    }
  }
}

bool packing_is_feasible(const Packing& packing,
                         std::span<const std::int64_t> sizes,
                         std::span<const std::int64_t> capacities) {
  check_packing(packing);
  if (sizes.size() != packing.task_count ||
      capacities.size() != packing.helper_count) {
    throw StructuralError("packing dimensions do not match the instance");
  }
  for (const auto& e : packing.entries) {
    std::int64_t load = 0;
    for (std::size_t i : e.tasks) load += sizes[i];
    if (load > capacities[e.helper]) return false;
  }
  return true;
}

Assignment assignment_from_packing(const Packing& packing) {
  check_packing(packing);
  Assignment x(packing.task_count, packing.helper_count);
  for (const auto& e : packing.entries) {
    for (std::size_t i : e.tasks) x.set(i, e.helper);
  }
  return x;
}

Packing packing_from_assignment(const Assignment& assignment) {
  Packing packing(assignment.task_count(), assignment.helper_count());
  std::vector<std::vector<std::size_t>> by_helper(assignment.helper_count());
  for (std::size_t i = 0; i < assignment.task_count(); ++i) {
    int hits = 0;
    for (std::size_t j = 0; j < assignment.helper_count(); ++j) {
      if (!assignment.get(i, j)) continue;
      if (++hits > 1) {
        throw StructuralError("task " + std::to_string(i) +
                              " is assigned to more than one helper");
      }
      by_helper[j].push_back(i);
    }
  }
  for (std::size_t j = 0; j < by_helper.size(); ++j) {
    if (!by_helper[j].empty()) {
      packing.entries.push_back({j, std::move(by_helper[j])});
    }
  }
  return packing;
}

double packing_value(const Packing& packing, const SuccessProbMatrix& probs,
                     double delta) {
  double value = 0.0;
  for (const auto& e : packing.entries) {
    for (std::size_t i : e.tasks) value += probs(i, e.helper);
  }
  const auto unassigned =
      static_cast<double>(packing.task_count - packing.assigned_task_count());
  return delta * unassigned + value;
}

}  // namespace offload
