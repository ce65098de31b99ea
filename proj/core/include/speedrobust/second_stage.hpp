#pragma once

// Second-stage assigners: the capacity-greedy LPT variant, the coin-paying
// integral variant used for bricks, and an exact branch-and-bound oracle for
// desk-scale ground truth.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "speedrobust/model.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {

// One assignment decision: `before`/`after` are the chosen machine's
// remaining capacity (greedy) or coins (integral).
struct AssignmentStep {
  std::size_t bag = 0;
  std::size_t machine = 0;
  Rational before;
  Rational after;
};

struct AssignmentRun {
  bool success = false;
  // Complete only when success is true.
  Assignment assignment;
  std::vector<AssignmentStep> trace;
  // Bag that could not be placed.
  std::optional<std::size_t> failed_bag;
  // Remaining capacity / coins per machine when the run stopped.
  std::vector<Rational> remaining;
};

// Bags largest-first, each onto the machine with the largest remaining
// capacity (initially rho * s_i; ties to the lowest index). Fails as soon as
// a positive bag would drive that capacity negative.
AssignmentRun greedy_assignment(std::span<const Rational> bags, std::span<const Rational> speeds,
                                const Rational& rho);
AssignmentRun greedy_assignment(const BagProfile& bags, const SpeedProfile& speeds,
                                const Rational& rho);

// Machine i starts with s_i coins; bag k costs ceil(a_k / rho) coins paid by
// the machine holding the most coins. Coins stay integral.
AssignmentRun integral_assignment(std::span<const std::int64_t> bags,
                                  std::span<const std::int64_t> speeds, const Rational& rho);

struct OptimalSchedule {
  Rational makespan;
  Assignment assignment;
};

struct OracleLimits {
  std::size_t max_items = 16;
  std::size_t max_machines = 8;
};

// Minimum makespan over all assignments of the items to machines, with a
// witness. Exact; enforces `limits` instead of degrading.
OptimalSchedule optimal_second_stage(std::span<const Rational> bags,
                                     std::span<const Rational> speeds,
                                     OracleLimits limits = {});
OptimalSchedule optimal_second_stage(const BagProfile& bags, const SpeedProfile& speeds,
                                     OracleLimits limits = {});

// Clairvoyant optimum C*_max that places jobs directly.
Rational optimal_direct(std::span<const Rational> jobs, std::span<const Rational> speeds,
                        OracleLimits limits = {});
OptimalSchedule optimal_direct_schedule(std::span<const Rational> jobs,
                                        std::span<const Rational> speeds,
                                        OracleLimits limits = {});

}  // namespace speedrobust
