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

#include "offload/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "offload/blossom.hpp"
#include "offload/errors.hpp"

namespace offload {

namespace {

void check_square(const ValueMatrix& values) {
  if (values.rows() != values.cols()) {
    throw StructuralError("value matrix must be square");
  }
}

void check_symmetric(const ValueMatrix& values) {
  check_square(values);
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = i + 1; j < values.cols(); ++j) {
      if (!(values(i, j) == values(j, i))) {
        throw StructuralError("value matrix is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      }
    }
  }
}

bool positive(MatchValue v) { return !v.is_forbidden() && v.value() > 0.0; }

Pairing finish(const ValueMatrix& values,
               std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t d = values.rows();
  Pairing out;
  std::vector<bool> used(d, false);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    used[a] = used[b] = true;
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) out.value += values(a, b).value();
  out.pairs = std::move(pairs);
  for (std::size_t i = 0; i < d; ++i) {
    if (!used[i]) out.singles.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> solve_assignment(const Matrix<MatchValue>& values) {
  check_square(values);
  const std::size_t n = values.rows();
  if (n == 0) return {};
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Minimize cost = -value; forbidden cells cost +inf. 1-based potentials.
  auto cost = [&](std::size_t i, std::size_t j) {
    const MatchValue v = values(i - 1, j - 1);
    return v.is_forbidden() ? kInf : -v.value();
  };
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0 || !std::isfinite(delta)) {
        throw StructuralError("no assignment avoids the forbidden cells");
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[p[j] - 1] = j - 1;
  return col_of_row;
}

Pairing solve_matching(const ValueMatrix& values) {
  check_symmetric(values);
  const std::size_t d = values.rows();
  if (d == 0) return {};

  ValueMatrix relaxed = values;
  for (std::size_t i = 0; i < d; ++i) relaxed(i, i) = MatchValue(0.0);
  const std::vector<std::size_t> perm = solve_assignment(relaxed);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> seen(d, false);
  for (std::size_t start = 0; start < d; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    const std::size_t len = cycle.size();
    if (len == 1) continue;
    if (len % 2 == 1) return solve_matching_blossom(values);
    // Even cycle: keep the better of its two alternating edge sets. Either
    // one reaches half the cycle's relaxation value.
    double best = -1.0;
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t offset = 0; offset < 2; ++offset) {
      double sum = 0.0;
      std::vector<std::pair<std::size_t, std::size_t>> candidate;
      for (std::size_t k = offset; k < len; k += 2) {
        const std::size_t a = cycle[k];
        const std::size_t b = cycle[(k + 1) % len];
        if (positive(values(a, b))) {
          sum += values(a, b).value();
          candidate.emplace_back(a, b);
        }
      }
      if (sum > best) {
        best = sum;
        chosen = std::move(candidate);
      }
    }
    pairs.insert(pairs.end(), chosen.begin(), chosen.end());
  }
  return finish(values, std::move(pairs));
}

Pairing solve_matching_blossom(const ValueMatrix& values) {
  check_symmetric(values);
  const std::size_t d = values.rows();
  if (d == 0) return {};

  double max_value = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (positive(values(i, j))) max_value = std::max(max_value, values(i, j).value());
    }
  }
  if (max_value == 0.0) return finish(values, {});

  // Fixed-point weights: the largest value maps just below 2^48, which leaves
  // headroom for the dual variables in 64-bit arithmetic.
  int exponent = 0;
  std::frexp(max_value, &exponent);
  const double scale = std::ldexp(1.0, 48 - exponent);

  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!positive(values(i, j))) continue;
      const auto w = static_cast<std::int64_t>(std::llround(values(i, j).value() * scale));
      if (w > 0) edges.push_back({i, j, w});
    }
  }
  const std::vector<long> mate = max_weight_matching(d, edges);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    if (mate[i] > static_cast<long>(i)) {
      pairs.emplace_back(i, static_cast<std::size_t>(mate[i]));
    }
  }
  return finish(values, std::move(pairs));
}

}  // namespace offload
