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

#ifndef OFFLOAD_MATCHING_HPP_
#define OFFLOAD_MATCHING_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "offload/matrix.hpp"

namespace offload {

// A matching score, or the explicit "forbidden" sentinel. Addition saturates:
// anything plus forbidden is forbidden.
class MatchValue {
 public:
  constexpr MatchValue() = default;
  constexpr explicit MatchValue(double v) : value_(v) {}

  static constexpr MatchValue forbidden() {
    MatchValue m;
    m.forbidden_ = true;
    return m;
  }

  constexpr bool is_forbidden() const { return forbidden_; }
  // Precondition: !is_forbidden().
  constexpr double value() const { return value_; }

  friend constexpr MatchValue operator+(MatchValue a, MatchValue b) {
    if (a.forbidden_ || b.forbidden_) return forbidden();
    return MatchValue(a.value_ + b.value_);
  }
  friend constexpr bool operator==(MatchValue a, MatchValue b) {
    if (a.forbidden_ || b.forbidden_) return a.forbidden_ == b.forbidden_;
    return a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
  bool forbidden_ = false;
};

// Symmetric d x d matrix of pair values. The diagonal is ignored: an element
// left on its own always scores 0.
using ValueMatrix = Matrix<MatchValue>;

struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // first < second
  std::vector<std::size_t> singles;
  double value = 0.0;
};

// Maximum-value assignment (rows to distinct columns) on a square matrix by
// the Hungarian method in O(d^3). Forbidden cells are never used. Returns
// col_of_row. Throws StructuralError if the matrix is not square or no
// assignment avoids the forbidden cells.
std::vector<std::size_t> solve_assignment(const Matrix<MatchValue>& values);

// Maximum-value matching where every element is paired with at most one other
// element. Only pairs of strictly positive value are returned; every other
// element is a single. Throws StructuralError if `values` is not square or not
// symmetric.
//
// The Hungarian method is run on the assignment relaxation with a zero
// diagonal. When its permutation has no odd cycle longer than one, the
// relaxation bound is met and the decomposed pairing is optimal. Otherwise the
// exact blossom matcher takes over.
Pairing solve_matching(const ValueMatrix& values);

// Always uses the blossom matcher.
Pairing solve_matching_blossom(const ValueMatrix& values);

}  // namespace offload

#endif  // OFFLOAD_MATCHING_HPP_
