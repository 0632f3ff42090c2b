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

#ifndef OFFLOAD_RMA_HPP_
#define OFFLOAD_RMA_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "offload/matching.hpp"
#include "offload/model.hpp"
#include "offload/packing.hpp"

namespace offload {

// Stand-in helper for unassigned tasks: capacity 0, and a task parked on it
// scores the unassigned penalty instead of a success probability.
inline constexpr std::size_t kAuxiliaryHelper =
    std::numeric_limits<std::size_t>::max();

enum class ReallocationMode {
  kGreedy,
  // Enumerates every subset of movable tasks. Limited to 20 tasks per merge;
  // meant for tests.
  kExhaustive,
};

struct RmaConfig {
  double delta = -0.1;  // penalty per unassigned task, must be < 0
  int max_iterations = 1000;
  ReallocationMode reallocation = ReallocationMode::kGreedy;
};

void check_rma_config(const RmaConfig& config);

// Read-only problem data shared by the matching-value computations.
struct RmaProblem {
  const SuccessProbMatrix& probs;
  std::span<const std::int64_t> sizes;
  std::span<const std::int64_t> capacities;
  double delta = -0.1;

  // p(task, helper), or delta on the auxiliary helper.
  double score(std::size_t task, std::size_t helper) const {
    return helper == kAuxiliaryHelper ? delta : probs(task, helper);
  }
  std::int64_t capacity(std::size_t helper) const {
    return helper == kAuxiliaryHelper ? 0 : capacities[helper];
  }
};

struct TaskMove {
  std::size_t task = 0;
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const TaskMove&, const TaskMove&) = default;
};

struct Reallocation {
  std::vector<TaskMove> moves;
  double gain = 0.0;
  // Both helpers end within capacity. Only an auxiliary side can start (and
  // so possibly end) over capacity.
  bool feasible = true;
};

// Sorts the per-task gains of switching helpers in descending order and
// moves each task with a positive gain when the destination's spare capacity
// admits it. Throws StructuralError if a real helper starts over capacity.
Reallocation reallocate_greedy(std::span<const std::size_t> tasks_a,
                               std::size_t helper_a,
                               std::span<const std::size_t> tasks_b,
                               std::size_t helper_b,
                               const RmaProblem& problem);

// Best feasible reallocation by enumeration. Throws DomainError beyond 20
// tasks.
Reallocation reallocate_exhaustive(std::span<const std::size_t> tasks_a,
                                   std::size_t helper_a,
                                   std::span<const std::size_t> tasks_b,
                                   std::size_t helper_b,
                                   const RmaProblem& problem);

// Member of L1 (unused helper), L2 (unassigned task) or L3 (packing entry).
struct Element {
  enum class Kind { kHelper, kTask, kEntry };
  Kind kind = Kind::kHelper;
  std::size_t index = 0;  // helper id, task id, or position in entries

  friend bool operator==(const Element&, const Element&) = default;
};

// L1, then L2, then L3: the row/column order of the value matrix.
std::vector<Element> packing_elements(const Packing& packing);

struct Merge {
  // Change of the packing value if the two elements are merged, or
  // forbidden.
  MatchValue value = MatchValue::forbidden();
  // Entries that replace whatever the two elements held.
  std::vector<PackingEntry> entries;
};

// Helper/helper and task/task pairs are forbidden. Everything else compares
// three outcomes: all tasks on the first helper, all on the second, or a
// reallocation between the two. Ties prefer the reallocation, then the
// first helper.
Merge merge_value(const Element& a, const Element& b, const Packing& packing,
                  const RmaProblem& problem,
                  ReallocationMode mode = ReallocationMode::kGreedy);

ValueMatrix build_value_matrix(
    const Packing& packing, const RmaProblem& problem,
    ReallocationMode mode = ReallocationMode::kGreedy);

struct RmaResult {
  Packing packing;
  Assignment assignment;
  // Packing value of the initial packing, then of every accepted iteration.
  std::vector<double> accepted_values;
  int iterations = 0;
};

// Repeated matching: solve a matching over the current packing, apply the
// matched merges, keep the result while the packing value strictly improves.
RmaResult rma_run(const Instance& instance, const SuccessProbMatrix& probs,
                  const Packing& initial, const RmaConfig& config = {});

Assignment rma_solve(const Instance& instance, const SuccessProbMatrix& probs,
                     const Packing& initial, const RmaConfig& config = {});

}  // namespace offload

#endif  // OFFLOAD_RMA_HPP_
