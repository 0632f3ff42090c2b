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

#include "offload/rma.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "offload/errors.hpp"

namespace offload {

void check_rma_config(const RmaConfig& config) {
  if (!(config.delta < 0.0) || !std::isfinite(config.delta)) {
    throw ConfigError("delta must be a finite negative number");
  }
  if (config.max_iterations < 1) {
    throw ConfigError("max_iterations must be >= 1");
  }
}

namespace {

struct Side {
  std::size_t helper = 0;
  std::vector<std::size_t> tasks;
};

std::int64_t load_of(std::span<const std::size_t> tasks,
                     const RmaProblem& problem) {
  std::int64_t load = 0;
  for (std::size_t i : tasks) load += problem.sizes[i];
  return load;
}

void require_within_capacity(std::span<const std::size_t> tasks,
                             std::size_t helper, const RmaProblem& problem) {
  if (helper == kAuxiliaryHelper) return;
  if (load_of(tasks, problem) > problem.capacity(helper)) {
    throw StructuralError("helper " + std::to_string(helper) +
                          " starts over capacity");
  }
}

struct Candidate {
  double gain;
  std::size_t task;
  int side;  // 0: moves a -> b, 1: moves b -> a
};

}  // namespace

Reallocation reallocate_greedy(std::span<const std::size_t> tasks_a,
                               std::size_t helper_a,
                               std::span<const std::size_t> tasks_b,
                               std::size_t helper_b,
                               const RmaProblem& problem) {
  require_within_capacity(tasks_a, helper_a, problem);
  require_within_capacity(tasks_b, helper_b, problem);

  std::vector<Candidate> deltas;
  deltas.reserve(tasks_a.size() + tasks_b.size());
  for (std::size_t i : tasks_a) {
    deltas.push_back(
        {problem.score(i, helper_b) - problem.score(i, helper_a), i, 0});
  }
  for (std::size_t i : tasks_b) {
    deltas.push_back(
        {problem.score(i, helper_a) - problem.score(i, helper_b), i, 1});
  }
  std::sort(deltas.begin(), deltas.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.gain != y.gain) return x.gain > y.gain;
              if (x.side != y.side) return x.side < y.side;
              return x.task < y.task;
            });

  std::int64_t spare[2] = {
      problem.capacity(helper_a) - load_of(tasks_a, problem),
      problem.capacity(helper_b) - load_of(tasks_b, problem)};
  const std::size_t helpers[2] = {helper_a, helper_b};

  Reallocation out;
  for (const auto& c : deltas) {
    if (!(c.gain > 0.0)) break;
    const int from = c.side;
    const int to = 1 - c.side;
    const std::int64_t size = problem.sizes[c.task];
    if (spare[to] < size) continue;
    spare[to] -= size;
    spare[from] += size;
    out.moves.push_back({c.task, helpers[from], helpers[to]});
    out.gain += c.gain;
  }
  out.feasible = spare[0] >= 0 && spare[1] >= 0;
  return out;
}

Reallocation reallocate_exhaustive(std::span<const std::size_t> tasks_a,
                                   std::size_t helper_a,
                                   std::span<const std::size_t> tasks_b,
                                   std::size_t helper_b,
                                   const RmaProblem& problem) {
  require_within_capacity(tasks_a, helper_a, problem);
  require_within_capacity(tasks_b, helper_b, problem);
  const std::size_t n = tasks_a.size() + tasks_b.size();
  if (n > 20) throw DomainError("exhaustive reallocation is limited to 20 tasks");

  std::vector<std::size_t> all(tasks_a.begin(), tasks_a.end());
  all.insert(all.end(), tasks_b.begin(), tasks_b.end());
  const std::int64_t load_a = load_of(tasks_a, problem);
  const std::int64_t load_b = load_of(tasks_b, problem);
  const std::int64_t cap_a = problem.capacity(helper_a);
  const std::int64_t cap_b = problem.capacity(helper_b);

  Reallocation best;
  best.feasible = false;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t la = load_a;
    std::int64_t lb = load_b;
    double gain = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1u)) continue;
      const std::size_t i = all[k];
      if (k < tasks_a.size()) {
        la -= problem.sizes[i];
        lb += problem.sizes[i];
        gain += problem.score(i, helper_b) - problem.score(i, helper_a);
      } else {
        lb -= problem.sizes[i];
        la += problem.sizes[i];
        gain += problem.score(i, helper_a) - problem.score(i, helper_b);
      }
    }
    if (la > cap_a || lb > cap_b) continue;
    if (!best.feasible || gain > best.gain) {
      best.feasible = true;
      best.gain = gain;
      best_mask = mask;
    }
  }
  if (best.feasible) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!(best_mask >> k & 1u)) continue;
      if (k < tasks_a.size()) {
        best.moves.push_back({all[k], helper_a, helper_b});
      } else {
        best.moves.push_back({all[k], helper_b, helper_a});
      }
    }
  }
  return best;
}

std::vector<Element> packing_elements(const Packing& packing) {
  std::vector<Element> out;
  for (std::size_t j : packing.unused_helpers()) {
    out.push_back({Element::Kind::kHelper, j});
  }
  for (std::size_t i : packing.unassigned_tasks()) {
    out.push_back({Element::Kind::kTask, i});
  }
  for (std::size_t e = 0; e < packing.entries.size(); ++e) {
    out.push_back({Element::Kind::kEntry, e});
  }
  return out;
}

namespace {

Side side_of(const Element& el, const Packing& packing) {
  switch (el.kind) {
    case Element::Kind::kHelper:
      return {el.index, {}};
    case Element::Kind::kTask:
      return {kAuxiliaryHelper, {el.index}};
    case Element::Kind::kEntry:
      return {packing.entries[el.index].helper,
              packing.entries[el.index].tasks};
  }
  return {};
}

double score_on(const std::vector<std::size_t>& tasks, std::size_t helper,
                const RmaProblem& problem) {
  double s = 0.0;
  for (std::size_t i : tasks) s += problem.score(i, helper);
  return s;
}

void push_entry(std::vector<PackingEntry>& out, std::size_t helper,
                std::vector<std::size_t> tasks) {
  if (helper == kAuxiliaryHelper || tasks.empty()) return;
  std::sort(tasks.begin(), tasks.end());
  out.push_back({helper, std::move(tasks)});
}

}  // namespace

Merge merge_value(const Element& a, const Element& b, const Packing& packing,
                  const RmaProblem& problem, ReallocationMode mode) {
  using Kind = Element::Kind;
  if (a.kind == b.kind && a.kind != Kind::kEntry) return {};

  const Side sa = side_of(a, packing);
  const Side sb = side_of(b, packing);
  std::vector<std::size_t> all = sa.tasks;
  all.insert(all.end(), sb.tasks.begin(), sb.tasks.end());
  const std::int64_t total = load_of(all, problem);
  const double current =
      score_on(sa.tasks, sa.helper, problem) + score_on(sb.tasks, sb.helper, problem);

  Merge best;

  // Reallocation between the two helpers.
  const Reallocation re =
      mode == ReallocationMode::kExhaustive
          ? reallocate_exhaustive(sa.tasks, sa.helper, sb.tasks, sb.helper, problem)
          : reallocate_greedy(sa.tasks, sa.helper, sb.tasks, sb.helper, problem);
  if (re.feasible) {
    std::vector<std::size_t> on_a = sa.tasks;
    std::vector<std::size_t> on_b = sb.tasks;
    for (const auto& m : re.moves) {
      auto& from = m.from == sa.helper ? on_a : on_b;
      auto& to = m.from == sa.helper ? on_b : on_a;
      from.erase(std::find(from.begin(), from.end(), m.task));
      to.push_back(m.task);
    }
    best.value = MatchValue(re.gain);
    push_entry(best.entries, sa.helper, std::move(on_a));
    push_entry(best.entries, sb.helper, std::move(on_b));
  }

  // Everything on one helper.
  for (const Side* target : {&sa, &sb}) {
    if (target->helper == kAuxiliaryHelper ||
        total > problem.capacity(target->helper)) {
      continue;
    }
    const double gain = score_on(all, target->helper, problem) - current;
    if (best.value.is_forbidden() || gain > best.value.value()) {
      best.value = MatchValue(gain);
      best.entries.clear();
      push_entry(best.entries, target->helper, all);
    }
  }
  return best;
}

ValueMatrix build_value_matrix(const Packing& packing,
                               const RmaProblem& problem,
                               ReallocationMode mode) {
  const std::vector<Element> elements = packing_elements(packing);
  const std::size_t d = elements.size();
  ValueMatrix v(d, d, MatchValue(0.0));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      const MatchValue value =
          merge_value(elements[r], elements[c], packing, problem, mode).value;
      v(r, c) = value;
      v(c, r) = value;
    }
  }
  return v;
}

RmaResult rma_run(const Instance& instance, const SuccessProbMatrix& probs,
                  const Packing& initial, const RmaConfig& config) {
  check_rma_config(config);
  const std::vector<std::int64_t> sizes = instance.task_sizes();
  const std::vector<std::int64_t> capacities = instance.helper_capacities();
  if (probs.rows() != sizes.size() || probs.cols() != capacities.size()) {
    throw StructuralError("probability matrix does not match the instance");
  }
  if (initial.task_count != sizes.size() ||
      initial.helper_count != capacities.size()) {
    throw StructuralError("initial packing does not match the instance");
  }
  if (!packing_is_feasible(initial, sizes, capacities)) {
    throw StructuralError("initial packing exceeds a helper capacity");
  }
  const RmaProblem problem{probs, sizes, capacities, config.delta};

  RmaResult result;
  result.packing = initial;
  result.packing.normalize();
  double best = packing_value(result.packing, probs, config.delta);
  result.accepted_values.push_back(best);

  while (result.iterations < config.max_iterations) {
    ++result.iterations;
    const std::vector<Element> elements = packing_elements(result.packing);
    const ValueMatrix values =
        build_value_matrix(result.packing, problem, config.reallocation);
    const Pairing pairing = solve_matching(values);
    if (pairing.pairs.empty()) break;

    Packing next(result.packing.task_count, result.packing.helper_count);
    std::vector<bool> touched(elements.size(), false);
    for (const auto& [lo, hi] : pairing.pairs) {
      touched[lo] = touched[hi] = true;
      Merge merge = merge_value(elements[hi], elements[lo], result.packing,
                                problem, config.reallocation);
      for (auto& e : merge.entries) next.entries.push_back(std::move(e));
    }
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (!touched[k] && elements[k].kind == Element::Kind::kEntry) {
        next.entries.push_back(result.packing.entries[elements[k].index]);
      }
    }
    next.normalize();

    const double candidate = packing_value(next, probs, config.delta);
    if (!(candidate > best)) break;
    best = candidate;
    result.packing = std::move(next);
    result.accepted_values.push_back(best);
  }
  result.assignment = assignment_from_packing(result.packing);
  return result;
}

Assignment rma_solve(const Instance& instance, const SuccessProbMatrix& probs,
                     const Packing& initial, const RmaConfig& config) {
  return rma_run(instance, probs, initial, config).assignment;
}

}  // namespace offload
