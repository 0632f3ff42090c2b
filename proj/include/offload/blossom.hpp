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

#ifndef OFFLOAD_BLOSSOM_HPP_
#define OFFLOAD_BLOSSOM_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace offload {

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t weight = 0;
};

// Maximum-weight matching in a general undirected graph (Edmonds' blossom
// method with primal-dual updates, O(n^3)). Integer weights keep the dual
// arithmetic exact. Returns mate[v], or -1 for an unmatched vertex. The
// matching is not required to be perfect or of maximum cardinality.
std::vector<long> max_weight_matching(std::size_t vertex_count,
                                      const std::vector<WeightedEdge>& edges);

}  // namespace offload

#endif  // OFFLOAD_BLOSSOM_HPP_
