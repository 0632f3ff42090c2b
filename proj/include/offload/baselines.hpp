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

#ifndef OFFLOAD_BASELINES_HPP_
#define OFFLOAD_BASELINES_HPP_

#include <cstdint>

#include "offload/model.hpp"

namespace offload {

struct BaselineConfig {
  int mcsa_iterations = 10000;
  std::uint64_t seed = 1;
};

// Monte Carlo search. Each round walks the tasks in index order, draws one
// helper uniformly at random per task and assigns the task only if that
// helper still has room. Returns the best round; ties keep the earlier one.
Assignment mcsa(const Instance& instance, const SuccessProbMatrix& probs,
                const BaselineConfig& config);

// Greedy helper ranking. For each task (index order) helpers are ranked by
// 1/mu_j + 1/gamma_j + 1/xi_ij, largest first, ties by helper id; the task
// goes to the first ranked helper with room, if any.
Assignment ga(const Instance& instance, const SuccessProbMatrix& probs);

}  // namespace offload

#endif  // OFFLOAD_BASELINES_HPP_
