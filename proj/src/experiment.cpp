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

#include "offload/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <locale>
#include <mutex>
#include <sstream>
#include <thread>

#include "offload/baselines.hpp"
#include "offload/errors.hpp"
#include "offload/instance_io.hpp"
#include "offload/knapsack_dp.hpp"
#include "offload/packing.hpp"
#include "offload/success_prob.hpp"

namespace offload {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kTsdp:
      return "tsdp";
    case Algorithm::kUpperBound:
      return "upper_bound";
    case Algorithm::kRma:
      return "rma";
    case Algorithm::kRmaTsdp:
      return "rma_tsdp";
    case Algorithm::kMcsa:
      return "mcsa";
    case Algorithm::kGa:
      return "ga";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kTsdp, Algorithm::kUpperBound, Algorithm::kRma,
                      Algorithm::kRmaTsdp, Algorithm::kMcsa, Algorithm::kGa}) {
    if (algorithm_name(a) == name) return a;
  }
  if (name == "bound") return Algorithm::kUpperBound;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

bool requires_uniform(Algorithm algorithm) {
  return algorithm == Algorithm::kTsdp || algorithm == Algorithm::kUpperBound ||
         algorithm == Algorithm::kRmaTsdp;
}

std::string_view sweep_name(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::kTasks:
      return "R";
    case SweepVariable::kHelpers:
      return "H";
    case SweepVariable::kMuDivisor:
      return "n_mu";
    case SweepVariable::kGammaDivisor:
      return "n_gamma";
    case SweepVariable::kXiDivisor:
      return "n_xi";
  }
  return "?";
}

SweepVariable parse_sweep(std::string_view name) {
  for (SweepVariable v :
       {SweepVariable::kTasks, SweepVariable::kHelpers, SweepVariable::kMuDivisor,
        SweepVariable::kGammaDivisor, SweepVariable::kXiDivisor}) {
    if (sweep_name(v) == name) return v;
  }
  throw ConfigError("unknown sweep variable '" + std::string(name) + "'");
}

std::uint64_t repetition_seed(std::uint64_t base, int rep) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(rep + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GeneratorConfig grid_config(const ExperimentConfig& config, double sweep_value,
                            std::uint64_t seed) {
  GeneratorConfig g = config.base;
  g.seed = seed;
  auto as_count = [](double v) {
    if (!(v >= 0.0) || v != std::floor(v)) {
      throw ConfigError("R and H sweep values must be non-negative integers");
    }
    return static_cast<std::size_t>(v);
  };
  switch (config.sweep.variable) {
    case SweepVariable::kTasks:
      g.tasks = as_count(sweep_value);
      break;
    case SweepVariable::kHelpers:
      g.helpers = as_count(sweep_value);
      break;
    case SweepVariable::kMuDivisor:
      g.n_mu = sweep_value;
      break;
    case SweepVariable::kGammaDivisor:
      g.n_gamma = sweep_value;
      break;
    case SweepVariable::kXiDivisor:
      g.n_xi = sweep_value;
      break;
  }
  return g;
}

double run_algorithm(Algorithm algorithm, const Instance& instance,
                     const SuccessProbMatrix& probs, const RmaConfig& rma,
                     int mcsa_iterations, std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kTsdp:
      return objective(tsdp(uniform_view(instance, probs)), probs);
    case Algorithm::kUpperBound:
      return upper_bound(uniform_view(instance, probs));
    case Algorithm::kRma: {
      const Packing empty(instance.task_count(), instance.helper_count());
      return objective(rma_solve(instance, probs, empty, rma), probs);
    }
    case Algorithm::kRmaTsdp: {
      const Packing seeded =
          packing_from_assignment(tsdp(uniform_view(instance, probs)));
      return objective(rma_solve(instance, probs, seeded, rma), probs);
    }
    case Algorithm::kMcsa:
      return objective(
          mcsa(instance, probs, {mcsa_iterations, seed ^ 0x5bd1e995ULL}), probs);
    case Algorithm::kGa:
      return objective(ga(instance, probs), probs);
  }
  return 0.0;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  check_generator_config(config.base);
  check_rma_config(config.rma);
  if (config.sweep.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (config.mcsa_iterations < 1) throw ConfigError("mcsa iterations must be >= 1");
  for (Algorithm a : config.algorithms) {
    if (requires_uniform(a) && !config.base.uniform) {
      throw ConfigError(std::string(algorithm_name(a)) +
                        " needs uniform instances");
    }
  }

  const std::size_t grid = config.sweep.values.size();
  const auto reps = static_cast<std::size_t>(config.sweep.repetitions);
  const std::size_t jobs_total = grid * reps;
  std::vector<std::vector<ExperimentRecord>> slots(jobs_total);
  const std::string var(sweep_name(config.sweep.variable));

  auto run_job = [&](std::size_t job) {
    const std::size_t g = job / reps;
    const int rep = static_cast<int>(job % reps);
    const double value = config.sweep.values[g];
    const std::uint64_t seed = repetition_seed(config.seed, rep);
    const Instance instance = generate_instance(grid_config(config, value, seed));
    const SuccessProbMatrix probs = build_prob_matrix(instance);
    const std::string digest = instance_digest(instance);
    for (Algorithm a : config.algorithms) {
      const auto start = std::chrono::steady_clock::now();
      const double obj =
          run_algorithm(a, instance, probs, config.rma, config.mcsa_iterations, seed);
      const auto stop = std::chrono::steady_clock::now();
      const double ms =
          config.record_timing
              ? std::chrono::duration<double, std::milli>(stop - start).count()
              : 0.0;
      slots[job].push_back({var, value, seed, a, obj, ms, digest});
    }
  };

  const int workers = std::max(1, config.jobs);
  if (workers == 1 || jobs_total <= 1) {
    for (std::size_t job = 0; job < jobs_total; ++job) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t job = next++; job < jobs_total; job = next++) {
          try {
            run_job(job);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ExperimentRecord> records;
  for (auto& slot : slots) {
    for (auto& r : slot) records.push_back(std::move(r));
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << kCsvHeader << '\n';
  for (const auto& r : records) {
    buf << r.sweep_var << ',' << std::defaultfloat << std::setprecision(12)
        << r.sweep_value << ',' << r.seed << ',' << algorithm_name(r.algorithm)
        << ',' << std::fixed << std::setprecision(10) << r.objective << ','
        << std::setprecision(3) << r.wall_ms << ',' << r.instance_digest << '\n';
  }
  out << buf.str();
}

}  // namespace offload
