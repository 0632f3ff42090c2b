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

#ifndef OFFLOAD_INSTANCE_IO_HPP_
#define OFFLOAD_INSTANCE_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "offload/model.hpp"

namespace offload {

// Interchange document:
//   {"tasks":   [{"id": 0, "size": 3}, ...],
//    "helpers": [{"id": 0, "capacity": 10, "mu": 0.5, "gamma": 1.0}, ...],
//    "xi":      [[...H values...], ...R rows...],
//    "n_h":     2}
nlohmann::json instance_to_json(const Instance& instance);

// Throws InputFormatError for missing fields, wrong types, ragged xi, or
// values that violate the instance invariants.
Instance instance_from_json(const nlohmann::json& doc);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance);

// 16 hex digits (FNV-1a 64) of the compact JSON serialization.
std::string instance_digest(const Instance& instance);

}  // namespace offload

#endif  // OFFLOAD_INSTANCE_IO_HPP_
