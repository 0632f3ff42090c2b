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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "offload/errors.hpp"
#include "offload/instance_io.hpp"
#include "offload/model.hpp"
#include "offload/packing.hpp"
#include "oracles.hpp"

namespace offload {
namespace {

Instance sized(std::vector<std::int64_t> sizes, std::vector<std::int64_t> caps) {
  Instance inst;
  for (std::size_t i = 0; i < sizes.size(); ++i) inst.tasks.push_back({i, sizes[i]});
  for (std::size_t j = 0; j < caps.size(); ++j) {
    inst.helpers.push_back({j, caps[j], {1.0, 1.0}});
  }
  inst.xi = Matrix<double>(sizes.size(), caps.size(), 1.0);
  return inst;
}

TEST_CASE("validate: empty assignment is feasible") {
  const Instance inst = sized({3, 4}, {1, 1});
  CHECK(validate(inst, Assignment(2, 2)));
}

TEST_CASE("validate: capacity violation") {
  const Instance inst = sized({5}, {4});
  Assignment x(1, 1);
  x.set(0, 0);
  CHECK_FALSE(validate(inst, x));
}

TEST_CASE("validate: two tasks exactly fill one helper") {
  const Instance inst = sized({2, 3}, {5});
  Assignment x(2, 1);
  x.set(0, 0);
  x.set(1, 0);
  CHECK(validate(inst, x));
}

TEST_CASE("validate: task on two helpers") {
  const Instance inst = sized({1}, {5, 5});
  Assignment x(1, 2);
  x.set(0, 0);
  x.set(0, 1);
  CHECK_FALSE(validate(inst, x));
}

TEST_CASE("validate: dimension mismatch is a structural error") {
  const Instance inst = sized({1, 2}, {5});
  CHECK_THROWS_AS(validate(inst, Assignment(3, 1)), StructuralError);
  CHECK_THROWS_AS(validate(inst, Assignment(2, 2)), StructuralError);
}

TEST_CASE("objective values") {
  SuccessProbMatrix p(2, 1, 0.0);
  p(0, 0) = 0.8;
  p(1, 0) = 0.3;
  CHECK(objective(Assignment(2, 1), p) == 0.0);
  Assignment x(2, 1);
  x.set(0, 0);
  CHECK(objective(x, p) == doctest::Approx(0.4).epsilon(1e-15));

  SuccessProbMatrix q(3, 2, 0.0);
  q(0, 0) = 0.9;
  q(1, 1) = 0.8;
  Assignment y(3, 2);
  y.set(0, 0);
  y.set(1, 1);
  double oracle = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) oracle += y.get(i, j) ? q(i, j) : 0.0;
  }
  CHECK(objective(y, q) == doctest::Approx(oracle / 3.0));
  CHECK(objective(y, q) == doctest::Approx(0.5667).epsilon(1e-4));

  CHECK_THROWS_AS(objective(Assignment(2, 2), p), StructuralError);
  CHECK(objective(Assignment(0, 3), SuccessProbMatrix(0, 3)) == 0.0);
}

TEST_CASE("assignment_from_packing") {
  SUBCASE("empty packing") {
    const Assignment x = assignment_from_packing(Packing(3, 2));
    CHECK(x == Assignment(3, 2));
  }
  SUBCASE("helper 2 running tasks 3 and 4 of five, four helpers") {
    Packing p(5, 4);
    p.entries.push_back({1, {2, 3}});  // zero-based ids
    const Assignment x = assignment_from_packing(p);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const bool expected = j == 1 && (i == 2 || i == 3);
        CHECK(x.get(i, j) == expected);
      }
    }
    CHECK(p.unused_helpers() == std::vector<std::size_t>{0, 2, 3});
    CHECK(p.unassigned_tasks() == std::vector<std::size_t>{0, 1, 4});
  }
  SUBCASE("task in two entries") {
    Packing p(3, 2);
    p.entries.push_back({0, {1}});
    p.entries.push_back({1, {1, 2}});
    CHECK_THROWS_AS(assignment_from_packing(p), StructuralError);
  }
  SUBCASE("repeated helper") {
    Packing p(3, 2);
    p.entries.push_back({0, {0}});
    p.entries.push_back({0, {1}});
    CHECK_THROWS_AS(check_packing(p), StructuralError);
  }
}

TEST_CASE("packing -> assignment -> packing round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng() % 9;
    const std::size_t h = 1 + rng() % 5;
    std::vector<std::vector<std::size_t>> groups(h);
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t slot = rng() % (h + 1);
      if (slot < h) groups[slot].push_back(i);
    }
    Packing p(r, h);
    for (std::size_t j = 0; j < h; ++j) {
      if (!groups[j].empty()) p.entries.push_back({j, groups[j]});
    }
    std::shuffle(p.entries.begin(), p.entries.end(), rng);
    Packing back = packing_from_assignment(assignment_from_packing(p));
    p.normalize();
    CHECK(back == p);
  }
}

TEST_CASE("feasibility is monotone and the objective is linear and bounded") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 6, 3, 5, 12);
    SuccessProbMatrix p(6, 3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 3; ++j) p(i, j) = u(rng);
    }
    // Random feasible assignment by first-fit over a shuffled order.
    Assignment x(6, 3);
    std::vector<std::int64_t> spare = inst.helper_capacities();
    for (std::size_t i = 0; i < 6; ++i) {
      const std::size_t j = rng() % 3;
      if (spare[j] >= inst.tasks[i].size) {
        spare[j] -= inst.tasks[i].size;
        x.set(i, j);
      }
    }
    REQUIRE(validate(inst, x));
    Assignment first(6, 3), second(6, 3);
    for (std::size_t i = 0; i < 6; ++i) {
      if (auto j = x.helper_of(i)) {
        Assignment& part = i % 2 == 0 ? first : second;
        part.set(i, *j);
        Assignment fewer = x;
        fewer.set(i, *j, false);
        CHECK(validate(inst, fewer));
      }
    }
    CHECK(objective(x, p) ==
          doctest::Approx(objective(first, p) + objective(second, p)));
    double cap = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      cap += *std::max_element(p.row(i).begin(), p.row(i).end());
    }
    CHECK(objective(x, p) >= 0.0);
    CHECK(objective(x, p) <= cap / 6.0 + 1e-15);
  }
}

TEST_CASE("check_instance rejects bad data") {
  Instance inst = sized({1, 2}, {3});
  CHECK_NOTHROW(check_instance(inst));
  inst.xi = Matrix<double>(1, 1, 1.0);
  CHECK_THROWS_AS(check_instance(inst), StructuralError);
  inst = sized({1, 2}, {3});
  inst.xi(1, 0) = 0.0;
  CHECK_THROWS_AS(check_instance(inst), DomainError);
  inst = sized({0}, {3});
  CHECK_THROWS_AS(check_instance(inst), DomainError);
  inst = sized({1}, {-1});
  CHECK_THROWS_AS(check_instance(inst), DomainError);
  inst = sized({1}, {1});
  inst.helpers[0].mobility.gamma = -2.0;
  CHECK_THROWS_AS(check_instance(inst), DomainError);
  inst = sized({1}, {1});
  inst.n_h = 0;
  CHECK_THROWS_AS(check_instance(inst), DomainError);
}

TEST_CASE("derived variances") {
  Instance inst = sized({1}, {1});
  inst.helpers[0].mobility = {2.0, 4.0};
  inst.xi(0, 0) = 0.5;
  inst.n_h = 3;
  CHECK(inst.helpers[0].mobility.contact_variance() == 0.25);
  CHECK(inst.helpers[0].mobility.gap_variance() == 0.0625);
  CHECK(inst.processing_variance(0, 0) == 12.0);
}

TEST_CASE("instance JSON round trip and malformed documents") {
  std::mt19937_64 rng(3);
  const Instance inst = testing::random_instance(rng, 4, 3, 6, 10, 2);
  const nlohmann::json doc = instance_to_json(inst);
  CHECK(doc.at("tasks").size() == 4);
  CHECK(doc.at("helpers")[0].contains("mu"));
  CHECK(doc.at("xi").size() == 4);
  CHECK(instance_from_json(doc) == inst);
  CHECK(instance_digest(inst) == instance_digest(instance_from_json(doc)));
  CHECK(instance_digest(inst).size() == 16);

  nlohmann::json ragged = doc;
  ragged["xi"][1].erase(0);
  CHECK_THROWS_AS(instance_from_json(ragged), InputFormatError);
  nlohmann::json missing = doc;
  missing.erase("n_h");
  CHECK_THROWS_AS(instance_from_json(missing), InputFormatError);
  nlohmann::json negative = doc;
  negative["helpers"][0]["mu"] = -1.0;
  CHECK_THROWS_AS(instance_from_json(negative), InputFormatError);
  nlohmann::json wrong_type = doc;
  wrong_type["tasks"][0]["size"] = "big";
  CHECK_THROWS_AS(instance_from_json(wrong_type), InputFormatError);
}

}  // namespace
}  // namespace offload
