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

#include "offload/success_prob.hpp"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "offload/errors.hpp"

namespace offload {

namespace {

void check_rates(const PairParams& p) {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(p.mu)) throw DomainError("mu must be a positive finite rate");
  if (!ok(p.gamma)) throw DomainError("gamma must be a positive finite rate");
  if (!ok(p.xi)) throw DomainError("xi must be a positive finite rate");
  if (p.n_h < 1) throw DomainError("n_h must be >= 1");
}

void require_shape(const PairParams& p, int n_h) {
  if (p.n_h != n_h) {
    throw DomainError("closed form needs n_h = " + std::to_string(n_h) +
                      ", got " + std::to_string(p.n_h));
  }
}

}  // namespace

double closed_form_nh1(const PairParams& params) {
  check_rates(params);
  require_shape(params, 1);
  const auto [mu, gamma, xi, n_h] = params;
  return (xi + gamma) / (mu + xi + gamma);
}

double closed_form_nh2(const PairParams& params) {
  check_rates(params);
  require_shape(params, 2);
  const auto [mu, gamma, xi, n_h] = params;
  const double a = xi / (mu + xi);
  const double q = mu * gamma / ((mu + xi) * (gamma + xi));
  const double one_minus_q = 1.0 - q;
  const double geometric = 1.0 / one_minus_q;
  const double weighted = q / (one_minus_q * one_minus_q);
  return a * a * geometric + a * a * weighted +
         xi * xi / ((mu + xi) * (gamma + xi)) * weighted;
}

double phase_type_success(const PairParams& params) {
  check_rates(params);
  const auto [mu, gamma, xi, n_h] = params;
  // Unknowns s(k, up) at 2k and s(k, down) at 2k+1: probability of ending in
  // SUCCESS from stage k with the link in the given state.
  const int n = 2 * n_h;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n_h; ++k) {
    const int up = 2 * k;
    const int down = up + 1;
    const bool last = k + 1 == n_h;
    a(up, up) = xi + mu;
    a(up, down) -= mu;
    if (last) {
      b(up) += xi;
    } else {
      a(up, up + 2) -= xi;
    }
    a(down, down) = xi + gamma;
    a(down, up) -= gamma;
    if (!last) a(down, down + 2) -= xi;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) {
    throw SolverError("phase-type absorption system is singular");
  }
  const Eigen::VectorXd s = lu.solve(b);
  if (!std::isfinite(s(0))) {
    throw SolverError("phase-type absorption solve produced a non-finite value");
  }
  return s(0);
}

MonteCarloEstimate monte_carlo_success(const PairParams& params,
                                       std::int64_t trials,
                                       std::uint64_t seed) {
  check_rates(params);
  if (trials < 1) throw DomainError("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> contact(params.mu);
  std::exponential_distribution<double> gap(params.gamma);
  std::exponential_distribution<double> stage(params.xi);

  std::int64_t successes = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    double processing = 0.0;
    for (int k = 0; k < params.n_h; ++k) processing += stage(rng);

    // Timeline starts at the offloading instant inside a contact; the
    // remaining contact is Exp(mu) by memorylessness.
    double edge = contact(rng);
    bool connected = true;
    while (processing >= edge) {
      edge += connected ? gap(rng) : contact(rng);
      connected = !connected;
    }
    if (connected) ++successes;
  }
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  return {p, trials, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

double success_probability(const PairParams& params) {
  switch (params.n_h) {
    case 1:
      return closed_form_nh1(params);
    case 2:
      return closed_form_nh2(params);
    default:
      return phase_type_success(params);
  }
}

PairParams pair_params(const Instance& instance, std::size_t task,
                       std::size_t helper) {
  const auto& m = instance.helpers[helper].mobility;
  return {m.mu, m.gamma, instance.xi(task, helper), instance.n_h};
}

SuccessProbMatrix build_prob_matrix(const Instance& instance) {
  const std::size_t r = instance.task_count();
  const std::size_t h = instance.helper_count();
  SuccessProbMatrix probs(r, h, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      try {
        probs(i, j) = success_probability(pair_params(instance, i, j));
      } catch (const DomainError& e) {
        throw DomainError("pair (" + std::to_string(i) + "," +
                          std::to_string(j) + "): " + e.what());
      }
    }
  }
  return probs;
}

}  // namespace offload
