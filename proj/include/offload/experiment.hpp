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

#ifndef OFFLOAD_EXPERIMENT_HPP_
#define OFFLOAD_EXPERIMENT_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "offload/generator.hpp"
#include "offload/model.hpp"
#include "offload/rma.hpp"

namespace offload {

enum class Algorithm {
  kTsdp,        // uniform only
  kUpperBound,  // uniform only
  kRma,         // empty initial packing
  kRmaTsdp,     // TSDP-seeded, uniform only
  kMcsa,
  kGa,
};

std::string_view algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);
bool requires_uniform(Algorithm algorithm);

enum class SweepVariable { kTasks, kHelpers, kMuDivisor, kGammaDivisor, kXiDivisor };

std::string_view sweep_name(SweepVariable variable);  // R, H, n_mu, n_gamma, n_xi
SweepVariable parse_sweep(std::string_view name);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kTasks;
  std::vector<double> values;
  int repetitions = 30;
};

struct ExperimentConfig {
  GeneratorConfig base;
  std::vector<Algorithm> algorithms;
  SweepSpec sweep;
  RmaConfig rma;
  int mcsa_iterations = 10000;
  std::uint64_t seed = 1;
  // When false wall_ms is written as 0 so repeated runs are byte-identical.
  bool record_timing = true;
  int jobs = 1;
};

struct ExperimentRecord {
  std::string sweep_var;
  double sweep_value = 0.0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kRma;
  double objective = 0.0;
  double wall_ms = 0.0;
  std::string instance_digest;
};

// Seed of repetition `rep`. Independent of the grid point, so every sweep
// value sees the same random streams.
std::uint64_t repetition_seed(std::uint64_t base, int rep);

// Generator settings for one grid point.
GeneratorConfig grid_config(const ExperimentConfig& config, double sweep_value,
                            std::uint64_t seed);

// Runs one algorithm on one instance and returns the average success
// probability of its assignment.
double run_algorithm(Algorithm algorithm, const Instance& instance,
                     const SuccessProbMatrix& probs, const RmaConfig& rma,
                     int mcsa_iterations, std::uint64_t seed);

// Records come out in (grid value, repetition, algorithm) order regardless of
// `jobs`. Throws ConfigError for uniform-only algorithms on non-uniform
// instances.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "sweep_var,sweep_value,seed,algorithm,objective,wall_ms,instance_digest";

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace offload

#endif  // OFFLOAD_EXPERIMENT_HPP_
