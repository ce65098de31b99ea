#include "speedrobust/second_stage.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "speedrobust/error.hpp"

namespace speedrobust {

namespace {

std::size_t largest_index(std::span<const Rational> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

std::optional<std::size_t> first_positive(std::span<const Rational> speeds) {
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (speeds[i].sign() > 0) return i;
  }
  return std::nullopt;
}

// Shared driver: positive bags in input order, each to the machine with the
// largest remaining budget, paying `price(bag)`; zero-size bags go last to
// the first machine with positive speed.
template <typename Price>
AssignmentRun run_budget_greedy(std::span<const Rational> bags, std::span<const Rational> speeds,
                                std::vector<Rational> budget, Price price) {
  if (speeds.empty()) throw Error(ErrorCode::kInvalidInput, "no machines");
  AssignmentRun run;
  std::vector<std::size_t> machine_of(bags.size(), 0);
  std::vector<std::size_t> zero_bags;
  for (std::size_t k = 0; k < bags.size(); ++k) {
    if (bags[k].sign() < 0) throw Error(ErrorCode::kInvalidInput, "negative bag size");
    if (bags[k].is_zero()) {
      zero_bags.push_back(k);
      continue;
    }
    const std::size_t i = largest_index(budget);
    const Rational cost = price(bags[k]);
    Rational after = budget[i] - cost;
    if (after.sign() < 0) {
      run.failed_bag = k;
      run.remaining = std::move(budget);
      return run;
    }
    run.trace.push_back({k, i, budget[i], after});
    budget[i] = std::move(after);
    machine_of[k] = i;
  }
  if (!zero_bags.empty()) {
    const auto target = first_positive(speeds);
    if (!target) throw Error(ErrorCode::kInvalidInput, "at least one speed must be positive");
    for (std::size_t k : zero_bags) {
      run.trace.push_back({k, *target, budget[*target], budget[*target]});
      machine_of[k] = *target;
    }
  }
  run.success = true;
  run.assignment = Assignment(std::move(machine_of));
  run.remaining = std::move(budget);
  return run;
}

}  // namespace

AssignmentRun greedy_assignment(std::span<const Rational> bags, std::span<const Rational> speeds,
                                const Rational& rho) {
  std::vector<Rational> capacity;
  capacity.reserve(speeds.size());
  for (const auto& s : speeds) capacity.push_back(rho * s);
  return run_budget_greedy(bags, speeds, std::move(capacity),
                           [](const Rational& size) { return size; });
}

AssignmentRun greedy_assignment(const BagProfile& bags, const SpeedProfile& speeds,
                                const Rational& rho) {
  return greedy_assignment(bags.sizes(), speeds.speeds(), rho);
}

AssignmentRun integral_assignment(std::span<const std::int64_t> bags,
                                  std::span<const std::int64_t> speeds, const Rational& rho) {
  if (rho.sign() <= 0) throw Error(ErrorCode::kInvalidInput, "rho must be positive");
  const std::vector<Rational> bag_sizes = to_rationals(bags);
  const std::vector<Rational> coins = to_rationals(speeds);
  return run_budget_greedy(bag_sizes, coins, coins, [&rho](const Rational& size) {
    return Rational((size / rho).ceil());
  });
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(std::span<const Rational> items, std::span<const Rational> speeds)
      : speeds_(speeds.begin(), speeds.end()) {
    order_.resize(items.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return items[a] > items[b]; });
    for (std::size_t idx : order_) {
      if (items[idx].sign() > 0) sizes_.push_back(items[idx]);
    }
    for (std::size_t i = 0; i < speeds_.size(); ++i) {
      if (speeds_[i].sign() > 0) {
        machines_.push_back(i);
        speed_total_ += speeds_[i];
      }
    }
    for (const auto& s : sizes_) size_total_ += s;
    placed_on_.assign(sizes_.size(), 0);
    load_.assign(speeds_.size(), Rational(0));
  }

  OptimalSchedule solve(std::span<const Rational> items) {
    if (!sizes_.empty() && machines_.empty()) {
      throw Error(ErrorCode::kInfeasible, "positive items but every speed is zero");
    }
    std::vector<std::size_t> positive_on;
    if (!sizes_.empty()) {
      floor_ = size_total_ / speed_total_;
      seed_incumbent();
      search(0, Rational(0));
    }
    // Map sorted positive items back to input indices; zero items go to the
    // first machine with positive speed (or machine 0 if none).
    const std::size_t zero_target = machines_.empty() ? 0 : machines_.front();
    std::vector<std::size_t> machine_of(items.size(), zero_target);
    std::size_t next_positive = 0;
    for (std::size_t idx : order_) {
      if (items[idx].sign() > 0) machine_of[idx] = best_[next_positive++];
    }
    return {best_value_, Assignment(std::move(machine_of))};
  }

 private:
  // Largest-first onto the machine that finishes it earliest.
  void seed_incumbent() {
    std::vector<Rational> load(speeds_.size());
    best_.assign(sizes_.size(), 0);
    Rational worst;
    for (std::size_t k = 0; k < sizes_.size(); ++k) {
      std::size_t pick = machines_.front();
      Rational pick_time = (load[pick] + sizes_[k]) / speeds_[pick];
      for (std::size_t i : machines_) {
        Rational t = (load[i] + sizes_[k]) / speeds_[i];
        if (t < pick_time) {
          pick = i;
          pick_time = std::move(t);
        }
      }
      load[pick] += sizes_[k];
      best_[k] = pick;
      worst = max(worst, pick_time);
    }
    best_value_ = worst;
  }

  void search(std::size_t k, const Rational& current) {
    if (best_value_ == floor_) return;  // cannot beat the averaging bound
    if (k == sizes_.size()) {
      if (current < best_value_) {
        best_value_ = current;
        best_ = placed_on_;
      }
      return;
    }
    struct Candidate {
      std::size_t machine;
      Rational completion;
    };
    std::vector<Candidate> candidates;
    for (std::size_t pos = 0; pos < machines_.size(); ++pos) {
      const std::size_t i = machines_[pos];
      bool duplicate = false;
      for (std::size_t prev = 0; prev < pos && !duplicate; ++prev) {
        const std::size_t j = machines_[prev];
        duplicate = speeds_[j] == speeds_[i] && load_[j] == load_[i];
      }
      if (duplicate) continue;
      Rational completion = max(current, (load_[i] + sizes_[k]) / speeds_[i]);
      if (completion >= best_value_) continue;
      candidates.push_back({i, std::move(completion)});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.completion < b.completion; });
    for (const auto& candidate : candidates) {
      if (candidate.completion >= best_value_) continue;
      load_[candidate.machine] += sizes_[k];
      placed_on_[k] = candidate.machine;
      search(k + 1, candidate.completion);
      load_[candidate.machine] -= sizes_[k];
      if (best_value_ == floor_) return;
    }
  }

  std::vector<Rational> speeds_;
  std::vector<std::size_t> order_;
  std::vector<Rational> sizes_;
  std::vector<std::size_t> machines_;
  Rational speed_total_;
  Rational size_total_;
  Rational floor_;
  std::vector<Rational> load_;
  std::vector<std::size_t> placed_on_;
  std::vector<std::size_t> best_;
  Rational best_value_;
};

void check_limits(std::size_t items, std::size_t machines, const OracleLimits& limits) {
  if (items > limits.max_items || machines > limits.max_machines) {
    throw Error(ErrorCode::kSizeLimit,
                "exact oracle limited to " + std::to_string(limits.max_items) + " items and " +
                    std::to_string(limits.max_machines) + " machines (got " +
                    std::to_string(items) + " x " + std::to_string(machines) + ")");
  }
  if (machines == 0) throw Error(ErrorCode::kInvalidInput, "no machines");
}

}  // namespace

OptimalSchedule optimal_second_stage(std::span<const Rational> bags,
                                     std::span<const Rational> speeds, OracleLimits limits) {
  check_limits(bags.size(), speeds.size(), limits);
  return BranchAndBound(bags, speeds).solve(bags);
}

OptimalSchedule optimal_second_stage(const BagProfile& bags, const SpeedProfile& speeds,
                                     OracleLimits limits) {
  return optimal_second_stage(bags.sizes(), speeds.speeds(), limits);
}

OptimalSchedule optimal_direct_schedule(std::span<const Rational> jobs,
                                        std::span<const Rational> speeds, OracleLimits limits) {
  check_limits(jobs.size(), speeds.size(), limits);
  return BranchAndBound(jobs, speeds).solve(jobs);
}

Rational optimal_direct(std::span<const Rational> jobs, std::span<const Rational> speeds,
                        OracleLimits limits) {
  return optimal_direct_schedule(jobs, speeds, limits).makespan;
}

}  // namespace speedrobust
