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

#ifndef OFFLOAD_MODEL_HPP_
#define OFFLOAD_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "offload/matrix.hpp"

namespace offload {

// A task produced by the requester. `size` is in abstract data units and is
// charged against a helper's transmission capacity.
struct TaskSpec {
  std::size_t id = 0;
  std::int64_t size = 1;

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

// Exponential contact model of one helper: contact periods have rate `mu`,
// inter-contact gaps have rate `gamma`. The variances follow as 1/mu^2 and
// 1/gamma^2.
struct MobilityParams {
  double mu = 1.0;
  double gamma = 1.0;

  double contact_variance() const { return 1.0 / (mu * mu); }
  double gap_variance() const { return 1.0 / (gamma * gamma); }

  friend bool operator==(const MobilityParams&, const MobilityParams&) = default;
};

struct HelperSpec {
  std::size_t id = 0;
  std::int64_t capacity = 0;
  MobilityParams mobility;

  friend bool operator==(const HelperSpec&, const HelperSpec&) = default;
};

// Problem data. Processing time of task i on helper j is Erlang with shape
// `n_h` and rate `xi(i, j)`.
struct Instance {
  std::vector<TaskSpec> tasks;
  std::vector<HelperSpec> helpers;
  Matrix<double> xi;
  int n_h = 1;

  std::size_t task_count() const { return tasks.size(); }
  std::size_t helper_count() const { return helpers.size(); }

  std::vector<std::int64_t> task_sizes() const;
  std::vector<std::int64_t> helper_capacities() const;

  // Variance of the processing time of task i on helper j.
  double processing_variance(std::size_t i, std::size_t j) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws StructuralError or DomainError when `instance` breaks its
// invariants (xi shape, positive rates, sizes >= 1, capacities >= 0).
void check_instance(const Instance& instance);

// p(i, j): probability that task i offloaded to helper j succeeds.
using SuccessProbMatrix = Matrix<double>;

// Binary task-to-helper decision matrix.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::size_t tasks, std::size_t helpers)
      : x_(tasks, helpers, std::uint8_t{0}) {}

  std::size_t task_count() const { return x_.rows(); }
  std::size_t helper_count() const { return x_.cols(); }

  bool get(std::size_t task, std::size_t helper) const {
    return x_(task, helper) != 0;
  }
  void set(std::size_t task, std::size_t helper, bool value = true) {
    x_(task, helper) = value ? 1 : 0;
  }

  // First helper the task is assigned to, if any.
  std::optional<std::size_t> helper_of(std::size_t task) const;
  std::size_t assigned_count() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  Matrix<std::uint8_t> x_;
};

// True iff every task goes to at most one helper and no helper's capacity is
// exceeded. Throws StructuralError on a dimension mismatch.
bool validate(const Instance& instance, const Assignment& assignment);

// Average offloading success probability (1/R) * sum_ij p_ij x_ij. Zero when
// there are no tasks.
double objective(const Assignment& assignment, const SuccessProbMatrix& probs);

}  // namespace offload

#endif  // OFFLOAD_MODEL_HPP_
