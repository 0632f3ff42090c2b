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

#ifndef OFFLOAD_SUCCESS_PROB_HPP_
#define OFFLOAD_SUCCESS_PROB_HPP_

#include <cstdint>

#include "offload/model.hpp"

namespace offload {

// Rates for one (task, helper) pair: contact periods ~ Exp(mu), gaps between
// contacts ~ Exp(gamma), processing time ~ Erlang(n_h, xi).
struct PairParams {
  double mu = 1.0;
  double gamma = 1.0;
  double xi = 1.0;
  int n_h = 1;
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  std::int64_t trials = 0;
  double std_error = 0.0;
};

// (xi + gamma) / (mu + xi + gamma). Requires n_h == 1.
double closed_form_nh1(const PairParams& params);

// Erlang-2 closed form, summed geometrically in
// q = mu*gamma / ((mu+xi)(gamma+xi)) < 1. Requires n_h == 2.
double closed_form_nh2(const PairParams& params);

// Any n_h. Probability that the processing of the task completes while the
// link is up, computed as the absorption probability of a continuous-time
// Markov chain over (Erlang stage, link state). The chain starts connected
// in stage 1; the residual of an exponential contact is again exponential.
double phase_type_success(const PairParams& params);

// Simulates `trials` offloading episodes on an alternating renewal timeline.
// Deterministic for a given seed.
MonteCarloEstimate monte_carlo_success(const PairParams& params,
                                       std::int64_t trials,
                                       std::uint64_t seed);

// Closed forms for n_h in {1, 2}, phase-type otherwise.
double success_probability(const PairParams& params);

SuccessProbMatrix build_prob_matrix(const Instance& instance);

PairParams pair_params(const Instance& instance, std::size_t task,
                       std::size_t helper);

}  // namespace offload

#endif  // OFFLOAD_SUCCESS_PROB_HPP_
