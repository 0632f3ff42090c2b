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

#include "offload/model.hpp"

#include <cmath>
#include <string>

#include "offload/errors.hpp"

namespace offload {

std::vector<std::int64_t> Instance::task_sizes() const {
  std::vector<std::int64_t> sizes;
  sizes.reserve(tasks.size());
  for (const auto& t : tasks) sizes.push_back(t.size);
  return sizes;
}

std::vector<std::int64_t> Instance::helper_capacities() const {
  std::vector<std::int64_t> caps;
  caps.reserve(helpers.size());
  for (const auto& h : helpers) caps.push_back(h.capacity);
  return caps;
}

double Instance::processing_variance(std::size_t i, std::size_t j) const {
  const double rate = xi(i, j);
  return static_cast<double>(n_h) / (rate * rate);
}

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void check_instance(const Instance& instance) {
  const std::size_t r = instance.task_count();
  const std::size_t h = instance.helper_count();
  if (instance.xi.rows() != r || instance.xi.cols() != h) {
    // An empty xi is acceptable for degenerate instances.
    if (!(instance.xi.empty() && (r == 0 || h == 0))) {
      throw StructuralError("xi is " + std::to_string(instance.xi.rows()) +
                            "x" + std::to_string(instance.xi.cols()) +
                            ", expected " + std::to_string(r) + "x" +
                            std::to_string(h));
    }
  }
  if (instance.n_h < 1) throw DomainError("n_h must be >= 1");
  for (std::size_t i = 0; i < r; ++i) {
    if (instance.tasks[i].size < 1) {
      throw DomainError("task " + std::to_string(i) + " has size < 1");
    }
  }
  for (std::size_t j = 0; j < h; ++j) {
    const auto& helper = instance.helpers[j];
    if (helper.capacity < 0) {
      throw DomainError("helper " + std::to_string(j) +
                        " has negative capacity");
    }
    if (!positive_finite(helper.mobility.mu) ||
        !positive_finite(helper.mobility.gamma)) {
      throw DomainError("helper " + std::to_string(j) +
                        " has a non-positive mobility rate");
    }
  }
  for (std::size_t i = 0; i < instance.xi.rows(); ++i) {
    for (std::size_t j = 0; j < instance.xi.cols(); ++j) {
      if (!positive_finite(instance.xi(i, j))) {
        throw DomainError("xi(" + std::to_string(i) + "," +
                          std::to_string(j) + ") is not a positive rate");
      }
    }
  }
}

std::optional<std::size_t> Assignment::helper_of(std::size_t task) const {
  for (std::size_t j = 0; j < helper_count(); ++j) {
    if (get(task, j)) return j;
  }
  return std::nullopt;
}

std::size_t Assignment::assigned_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < task_count(); ++i) {
    if (helper_of(i)) ++n;
  }
  return n;
}

bool validate(const Instance& instance, const Assignment& assignment) {
  const std::size_t r = instance.task_count();
  const std::size_t h = instance.helper_count();
  if (assignment.task_count() != r || assignment.helper_count() != h) {
    throw StructuralError("assignment dimensions do not match the instance");
  }
  std::vector<std::int64_t> load(h, 0);
  for (std::size_t i = 0; i < r; ++i) {
    int row_sum = 0;
    for (std::size_t j = 0; j < h; ++j) {
      if (!assignment.get(i, j)) continue;
      ++row_sum;
      load[j] += instance.tasks[i].size;
    }
    if (row_sum > 1) return false;
  }
  for (std::size_t j = 0; j < h; ++j) {
    if (load[j] > instance.helpers[j].capacity) return false;
  }
  return true;
}

double objective(const Assignment& assignment, const SuccessProbMatrix& probs) {
  if (assignment.task_count() != probs.rows() ||
      assignment.helper_count() != probs.cols()) {
    throw StructuralError("assignment and probability matrix differ in shape");
  }
  const std::size_t r = assignment.task_count();
  if (r == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < assignment.helper_count(); ++j) {
      if (assignment.get(i, j)) sum += probs(i, j);
    }
  }
  return sum / static_cast<double>(r);
}

}  // namespace offload
