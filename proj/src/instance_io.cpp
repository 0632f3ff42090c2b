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

#include "offload/instance_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "offload/errors.hpp"

namespace offload {

using nlohmann::json;

json instance_to_json(const Instance& instance) {
  json tasks = json::array();
  for (const auto& t : instance.tasks) {
    tasks.push_back({{"id", t.id}, {"size", t.size}});
  }
  json helpers = json::array();
  for (const auto& h : instance.helpers) {
    helpers.push_back({{"id", h.id},
                       {"capacity", h.capacity},
                       {"mu", h.mobility.mu},
                       {"gamma", h.mobility.gamma}});
  }
  json xi = json::array();
  for (std::size_t i = 0; i < instance.task_count(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < instance.helper_count(); ++j) {
      row.push_back(instance.xi(i, j));
    }
    xi.push_back(std::move(row));
  }
  return {{"tasks", std::move(tasks)},
          {"helpers", std::move(helpers)},
          {"xi", std::move(xi)},
          {"n_h", instance.n_h}};
}

Instance instance_from_json(const json& doc) {
  Instance instance;
  try {
    for (const auto& t : doc.at("tasks")) {
      instance.tasks.push_back({t.at("id").get<std::size_t>(),
                                t.at("size").get<std::int64_t>()});
    }
    for (const auto& h : doc.at("helpers")) {
      instance.helpers.push_back(
          {h.at("id").get<std::size_t>(), h.at("capacity").get<std::int64_t>(),
           {h.at("mu").get<double>(), h.at("gamma").get<double>()}});
    }
    instance.n_h = doc.at("n_h").get<int>();
    const auto& xi = doc.at("xi");
    const std::size_t r = instance.tasks.size();
    const std::size_t h = instance.helpers.size();
    if (xi.size() != r) {
      throw InputFormatError("xi must have one row per task");
    }
    instance.xi = Matrix<double>(r, h);
    for (std::size_t i = 0; i < r; ++i) {
      if (!xi[i].is_array() || xi[i].size() != h) {
        throw InputFormatError("xi row " + std::to_string(i) +
                               " must have one entry per helper");
      }
      for (std::size_t j = 0; j < h; ++j) {
        instance.xi(i, j) = xi[i][j].get<double>();
      }
    }
    check_instance(instance);
  } catch (const json::exception& e) {
    throw InputFormatError(std::string("instance document: ") + e.what());
  } catch (const StructuralError& e) {
    throw InputFormatError(std::string("instance document: ") + e.what());
  } catch (const DomainError& e) {
    throw InputFormatError(std::string("instance document: ") + e.what());
  }
  return instance;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputFormatError(path.string() + ": " + e.what());
  }
  return instance_from_json(doc);
}

void write_instance(const std::filesystem::path& path,
                    const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << instance_to_json(instance).dump(2) << '\n';
}

std::string instance_digest(const Instance& instance) {
  const std::string text = instance_to_json(instance).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace offload
