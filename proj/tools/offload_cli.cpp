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

// Command-line front end: probabilities, instance generation, solving,
// benchmark sweeps and the closed-form vs simulation check.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "offload/baselines.hpp"
#include "offload/errors.hpp"
#include "offload/experiment.hpp"
#include "offload/generator.hpp"
#include "offload/instance_io.hpp"
#include "offload/knapsack_dp.hpp"
#include "offload/packing.hpp"
#include "offload/rma.hpp"
#include "offload/success_prob.hpp"

namespace {

using namespace offload;

constexpr int kExitConfig = 1;
constexpr int kExitInput = 2;

struct GeneratorFlags {
  GeneratorConfig config;
  std::string convention = "scale";

  void attach(CLI::App* cmd) {
    cmd->add_option("--tasks,-R", config.tasks, "number of tasks");
    cmd->add_option("--helpers,-H", config.helpers, "number of helpers");
    cmd->add_option("--l-max", config.l_max, "task sizes are uniform on [1, l_max]");
    cmd->add_option("--e-max", config.e_max, "capacities are uniform on [1, e_max]");
    cmd->add_option("--n-h", config.n_h, "Erlang shape of processing times");
    cmd->add_option("--n-mu", config.n_mu, "Gamma divisor n for mu");
    cmd->add_option("--n-gamma", config.n_gamma, "Gamma divisor n for gamma");
    cmd->add_option("--n-xi", config.n_xi, "Gamma divisor n for xi");
    cmd->add_option("--gamma-shape", config.gamma_shape_base, "Gamma shape before division by n");
    cmd->add_option("--gamma-scale", config.gamma_scale, "Gamma scale (or rate, see --gamma-convention)");
    cmd->add_option("--gamma-convention", convention, "scale | rate")
        ->check(CLI::IsMember({"scale", "rate"}));
    cmd->add_flag("--uniform", config.uniform, "identical helpers");
  }

  GeneratorConfig resolve() {
    config.convention = parse_gamma_convention(convention);
    return config;
  }
};

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

int cmd_prob(double mu, double gamma, double xi, int n_h, std::int64_t trials,
             std::uint64_t seed) {
  const PairParams params{mu, gamma, xi, n_h};
  if (n_h == 1 || n_h == 2) {
    std::cout << "closed_form  " << fixed(success_probability(params), 6) << '\n';
  }
  std::cout << "phase_type   " << fixed(phase_type_success(params), 6) << '\n';
  const MonteCarloEstimate mc = monte_carlo_success(params, trials, seed);
  std::cout << "monte_carlo  " << fixed(mc.estimate, 6) << "  (std_error "
            << fixed(mc.std_error, 6) << ", trials " << mc.trials << ")\n";
  return 0;
}

int cmd_validate(double mu, double gamma, double xi, std::int64_t trials,
                 std::uint64_t seed) {
  std::cout << "n_h  closed_form  simulation  gap\n";
  for (int n_h : {1, 2}) {
    const PairParams params{mu, gamma, xi, n_h};
    const double exact = success_probability(params);
    const MonteCarloEstimate mc =
        monte_carlo_success(params, trials, seed + static_cast<std::uint64_t>(n_h));
    const double gap = std::abs(mc.estimate - exact) / exact * 100.0;
    std::cout << n_h << "    " << fixed(exact, 4) << "       "
              << fixed(mc.estimate, 4) << "      " << fixed(gap, 2) << "%\n";
  }
  return 0;
}

int cmd_solve(const std::string& path, const std::string& algorithm,
              const RmaConfig& rma, const std::string& init, int mcsa_iterations,
              std::uint64_t seed) {
  const Instance instance = read_instance(path);
  const SuccessProbMatrix probs = build_prob_matrix(instance);
  Assignment x;
  if (algorithm == "tsdp") {
    x = tsdp(uniform_view(instance, probs));
  } else if (algorithm == "bound" || algorithm == "upper_bound") {
    const double bound = upper_bound(uniform_view(instance, probs));
    nlohmann::json out = {{"algorithm", "upper_bound"}, {"objective", bound}};
    std::cout << out.dump() << '\n';
    return 0;
  } else if (algorithm == "rma") {
    Packing initial(instance.task_count(), instance.helper_count());
    if (init == "tsdp") {
      initial = packing_from_assignment(tsdp(uniform_view(instance, probs)));
    }
    x = rma_solve(instance, probs, initial, rma);
  } else if (algorithm == "mcsa") {
    x = mcsa(instance, probs, {mcsa_iterations, seed});
  } else if (algorithm == "ga") {
    x = ga(instance, probs);
  } else {
    throw ConfigError("unknown algorithm '" + algorithm + "'");
  }
  nlohmann::json helpers = nlohmann::json::array();
  for (std::size_t i = 0; i < x.task_count(); ++i) {
    const auto j = x.helper_of(i);
    helpers.push_back(j ? static_cast<long>(*j) : -1L);
  }
  nlohmann::json out = {{"algorithm", algorithm},
                        {"objective", objective(x, probs)},
                        {"feasible", validate(instance, x)},
                        {"assignment", helpers}};
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task offloading under intermittent contacts"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::int64_t trials = 50000;

  // prob
  double mu = 1.0, gamma = 1.0, xi = 1.0;
  int n_h = 1;
  auto* prob = app.add_subcommand("prob", "success probability of one pair");
  prob->add_option("--mu", mu, "contact rate")->required();
  prob->add_option("--gamma", gamma, "inter-contact rate")->required();
  prob->add_option("--xi", xi, "processing rate")->required();
  prob->add_option("--n-h", n_h, "Erlang shape");
  prob->add_option("--trials", trials, "Monte Carlo trials");
  prob->add_option("--seed", seed, "random seed");

  // validate
  double v_mu = 0.6803, v_gamma = 1.5182, v_xi = 1.0;
  auto* check = app.add_subcommand("validate", "closed form vs. Monte Carlo gap report");
  check->add_option("--mu", v_mu, "contact rate");
  check->add_option("--gamma", v_gamma, "inter-contact rate");
  check->add_option("--xi", v_xi, "processing rate");
  check->add_option("--trials", trials, "Monte Carlo trials");
  check->add_option("--seed", seed, "random seed");

  // gen
  GeneratorFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a random instance as JSON");
  gen_flags.attach(gen);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out,-o", gen_out, "output path (default stdout)");

  // solve
  std::string instance_path;
  std::string algorithm = "rma";
  std::string init = "empty";
  RmaConfig rma;
  int mcsa_iterations = 10000;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", instance_path, "instance JSON")->required();
  solve->add_option("--algorithm,-a", algorithm, "tsdp | bound | rma | mcsa | ga");
  solve->add_option("--delta", rma.delta, "unassigned-task penalty (< 0)");
  solve->add_option("--max-iter", rma.max_iterations, "RMA iteration cap");
  solve->add_option("--init", init, "RMA start: empty | tsdp")
      ->check(CLI::IsMember({"empty", "tsdp"}));
  solve->add_option("--mcsa-iter", mcsa_iterations, "MCSA rounds");
  solve->add_option("--seed", seed, "random seed");

  // bench
  GeneratorFlags bench_flags;
  std::string sweep_var = "R";
  std::vector<double> sweep_values;
  std::vector<std::string> algorithms = {"rma", "mcsa", "ga"};
  std::string bench_out;
  std::string bench_init = "empty";
  RmaConfig bench_rma;
  int reps = 30;
  int jobs = 1;
  int bench_mcsa = 10000;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "run a parameter sweep and write CSV");
  bench_flags.attach(bench);
  bench->add_option("--sweep", sweep_var, "R | H | n_mu | n_gamma | n_xi");
  bench->add_option("--values", sweep_values, "grid values")->delimiter(',');
  bench->add_option("--algorithms", algorithms,
                    "tsdp, upper_bound, rma, rma_tsdp, mcsa, ga")
      ->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per grid value");
  bench->add_option("--jobs,-j", jobs, "worker threads");
  bench->add_option("--delta", bench_rma.delta, "unassigned-task penalty (< 0)");
  bench->add_option("--max-iter", bench_rma.max_iterations, "RMA iteration cap");
  bench->add_option("--init", bench_init, "RMA start: empty | tsdp")
      ->check(CLI::IsMember({"empty", "tsdp"}));
  bench->add_option("--mcsa-iter", bench_mcsa, "MCSA rounds");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--out,-o", bench_out, "CSV path (default stdout)");
  bench->add_flag("--no-timing", no_timing, "write wall_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*prob) return cmd_prob(mu, gamma, xi, n_h, trials, seed);
    if (*check) return cmd_validate(v_mu, v_gamma, v_xi, trials, seed);
    if (*gen) {
      GeneratorConfig config = gen_flags.resolve();
      config.seed = seed;
      const Instance instance = generate_instance(config);
      if (gen_out.empty()) {
        std::cout << instance_to_json(instance).dump(2) << '\n';
      } else {
        write_instance(gen_out, instance);
      }
      return 0;
    }
    if (*solve) {
      return cmd_solve(instance_path, algorithm, rma, init, mcsa_iterations, seed);
    }
    if (*bench) {
      ExperimentConfig config;
      config.base = bench_flags.resolve();
      config.sweep = {parse_sweep(sweep_var), sweep_values, reps};
      for (const auto& name : algorithms) {
        Algorithm a = parse_algorithm(name);
        if (a == Algorithm::kRma && bench_init == "tsdp") a = Algorithm::kRmaTsdp;
        config.algorithms.push_back(a);
      }
      config.rma = bench_rma;
      config.mcsa_iterations = bench_mcsa;
      config.seed = seed;
      config.record_timing = !no_timing;
      config.jobs = jobs;
      const auto records = run_experiment(config);
      if (bench_out.empty()) {
        write_csv(std::cout, records);
      } else {
        std::ofstream out(bench_out, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + bench_out);
        write_csv(out, records);
      }
      return 0;
    }
  } catch (const InputFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
