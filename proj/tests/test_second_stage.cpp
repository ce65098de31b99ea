#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "speedrobust/bricks.hpp"
#include "speedrobust/partitions.hpp"
#include "speedrobust/second_stage.hpp"

namespace speedrobust {
namespace {

std::vector<Rational> ints(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

TEST(GreedyAssignment, SandBagsAgainstEightSeven) {
  const auto bags = ints({8, 4, 2, 1});
  const auto speeds = ints({8, 7});
  const AssignmentRun run = greedy_assignment(bags, speeds, Rational(16, 15));
  ASSERT_TRUE(run.success);
  EXPECT_EQ(run.assignment, Assignment({0, 1, 1, 1}));
  EXPECT_EQ(makespan(run.assignment, bags, speeds), Rational(1));
  ASSERT_EQ(run.trace.size(), 4u);
  EXPECT_EQ(run.trace[0].before, Rational(128, 15));
  EXPECT_EQ(run.trace[0].after, Rational(8, 15));
  EXPECT_EQ(run.trace[3].after, Rational(7, 15));
}

TEST(GreedyAssignment, FailsWhenCapacityTooSmall) {
  const AssignmentRun run = greedy_assignment(ints({2}), ints({1, 1}), Rational(3, 2));
  EXPECT_FALSE(run.success);
  ASSERT_TRUE(run.failed_bag.has_value());
  EXPECT_EQ(*run.failed_bag, 0u);
}

TEST(GreedyAssignment, SingleMachineSucceedsIffTotalFits) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> size(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> bags;
    Rational total;
    for (int k = 0; k < 4; ++k) {
      bags.emplace_back(size(rng));
      total += bags.back();
    }
    std::sort(bags.begin(), bags.end(), std::greater<>());
    const Rational capacity(size(rng) * 3 + 1);
    const AssignmentRun run = greedy_assignment(bags, std::vector<Rational>{capacity}, Rational(1));
    EXPECT_EQ(run.success, total <= capacity);
  }
}

TEST(GreedyAssignment, TiesGoToLowestIndexAndZeroBagsToFirstPositiveMachine) {
  const AssignmentRun run = greedy_assignment(ints({1, 1, 0}), ints({0, 1, 1}), Rational(1));
  ASSERT_TRUE(run.success);
  EXPECT_EQ(run.assignment, Assignment({1, 2, 1}));
}

// Bags obeying a_k <= (rho P - sum_{j<k} a_j) / m always fit when speeds sum
// to P.
TEST(GreedyAssignment, SufficientConditionProperty) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> machines_draw(1, 6);
  std::uniform_int_distribution<std::int64_t> bags_draw(1, 12);
  std::uniform_int_distribution<std::int64_t> unit(0, 100);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t m = machines_draw(rng);
    const std::int64_t b = bags_draw(rng);
    const Rational total(unit(rng) + 1);
    const Rational rho = Rational(1) + Rational(unit(rng), 100);
    std::vector<Rational> bags;
    Rational prefix;
    for (std::int64_t k = 0; k < b; ++k) {
      const Rational bound = (rho * total - prefix) / Rational(m);
      bags.push_back(bound * Rational(unit(rng), 100));
      prefix += bags.back();
    }
    std::sort(bags.begin(), bags.end(), std::greater<>());
    std::vector<std::int64_t> raw(static_cast<std::size_t>(m));
    std::int64_t raw_total = 0;
    while (raw_total == 0) {
      raw_total = 0;
      for (auto& r : raw) raw_total += (r = unit(rng));
    }
    std::vector<Rational> speeds;
    for (auto r : raw) speeds.push_back(Rational(r, raw_total) * total);
    std::sort(speeds.begin(), speeds.end(), std::greater<>());
    const AssignmentRun run = greedy_assignment(bags, speeds, rho);
    ASSERT_TRUE(run.success) << "trial " << trial;
    EXPECT_LE(makespan(run.assignment, bags, speeds), rho);
  }
}

TEST(IntegralAssignment, ThirteenBricksOnTenMachines) {
  const std::vector<std::int64_t> bags{3, 3, 1, 1, 1, 1, 1, 1, 1, 1};
  const std::vector<std::int64_t> speeds{4, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  const AssignmentRun run = integral_assignment(bags, speeds, Rational(8, 5));
  ASSERT_TRUE(run.success);
  EXPECT_EQ(run.assignment.machine_of(0), 0u);
  EXPECT_EQ(run.assignment.machine_of(1), 0u);
  EXPECT_EQ(run.trace[0].before, Rational(4));
  EXPECT_EQ(run.trace[0].after, Rational(2));
  EXPECT_EQ(run.trace[1].after, Rational(0));
  std::vector<std::size_t> unit_machines;
  for (std::size_t k = 2; k < bags.size(); ++k) unit_machines.push_back(run.assignment.machine_of(k));
  std::sort(unit_machines.begin(), unit_machines.end());
  EXPECT_EQ(std::adjacent_find(unit_machines.begin(), unit_machines.end()), unit_machines.end());
  EXPECT_EQ(std::count(unit_machines.begin(), unit_machines.end(), 0u), 0);
}

TEST(IntegralAssignment, SingleBrick) {
  const std::vector<std::int64_t> bags{1};
  const std::vector<std::int64_t> speeds{1};
  const AssignmentRun run = integral_assignment(bags, speeds, Rational(8, 5));
  ASSERT_TRUE(run.success);
  EXPECT_EQ(run.trace[0].before - run.trace[0].after, Rational(1));
}

TEST(IntegralAssignment, TrimmedFortyFiveOnUniformSpeeds) {
  const std::vector<std::int64_t> bags{8, 8, 6, 6, 4, 4, 4, 3, 2};
  const std::vector<std::int64_t> speeds(9, 5);
  const AssignmentRun run = integral_assignment(bags, speeds, Rational(8, 5));
  ASSERT_TRUE(run.success);
  EXPECT_LE(makespan(run.assignment, to_rationals(bags), to_rationals(speeds)), Rational(8, 5));
}

TEST(IntegralAssignment, ReportsShortfall) {
  const std::vector<std::int64_t> bags{4};
  const std::vector<std::int64_t> speeds{1, 1};
  const AssignmentRun run = integral_assignment(bags, speeds, Rational(8, 5));
  EXPECT_FALSE(run.success);
}

// Run the bricks generator and the coin-paying assigner side by side: the
// generator's remaining coins never exceed the coins left on the machines.
TEST(IntegralAssignment, CoinConservationCoSimulation) {
  const Rational rho(8, 5);
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 1; n <= 8 * m; ++n) {
      const BrickSolution sol = bricks_bags(n, m, m, rho);
      PartitionGenerator profiles(n, m);
      std::vector<std::int64_t> speeds;
      while (profiles.next(speeds)) {
        const AssignmentRun run = integral_assignment(sol.bag_sizes, speeds, rho);
        ASSERT_TRUE(run.success) << "n=" << n << " m=" << m;
        std::int64_t generator_coins = n;
        Rational machine_coins(n);
        for (const auto& step : run.trace) {
          EXPECT_LE(Rational(generator_coins), machine_coins);
          machine_coins -= step.before - step.after;
          generator_coins -= sol.bag_costs[step.bag];
        }
        for (const auto& left : run.remaining) EXPECT_GE(left, Rational(0));
      }
    }
  }
}

TEST(OptimalSecondStage, Examples) {
  EXPECT_EQ(optimal_second_stage(ints({2, 2}), ints({3, 1})).makespan, Rational(4, 3));
  EXPECT_EQ(optimal_second_stage(ints({1}), ints({1})).makespan, Rational(1));
  const auto bags = ints({8, 4, 2, 1});
  const std::vector<Rational> speeds{Rational(45, 4), Rational(15, 4)};
  const OptimalSchedule best = optimal_second_stage(bags, speeds);
  EXPECT_EQ(best.makespan, testing::naive_optimum(bags, speeds));
  EXPECT_LE(best.makespan, Rational(16, 15));
  EXPECT_EQ(makespan(best.assignment, bags, speeds), best.makespan);
}

TEST(OptimalSecondStage, Errors) {
  try {
    optimal_second_stage(std::vector<Rational>(17, Rational(1)), ints({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
  try {
    optimal_second_stage(ints({1}), ints({0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  EXPECT_THROW(optimal_second_stage(ints({1}), std::vector<Rational>(9, Rational(1))), Error);
}

TEST(OptimalSecondStage, ZeroItemsLandOnPositiveMachine) {
  const OptimalSchedule best = optimal_second_stage(ints({0, 3, 0}), ints({0, 3}));
  EXPECT_EQ(best.makespan, Rational(1));
  EXPECT_EQ(best.assignment, Assignment({1, 1, 1}));
}

TEST(OptimalDirect, Examples) {
  const std::vector<Rational> bricks(13, Rational(1));
  EXPECT_EQ(optimal_direct(bricks, ints({5, 3, 2, 2, 1})), Rational(1));
  EXPECT_EQ(optimal_direct(ints({3, 2}), ints({5})), Rational(1));
  EXPECT_EQ(optimal_direct(ints({2, 2, 1}), ints({3, 2})), Rational(1));
  EXPECT_EQ(testing::naive_optimum(ints({2, 2, 1}), ints({3, 2})), Rational(1));
}

TEST(OptimalSecondStage, NeverWorseThanHeuristics) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> size(0, 12);
  std::uniform_int_distribution<std::int64_t> count(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
    std::vector<std::int64_t> bags(static_cast<std::size_t>(count(rng)));
    for (auto& b : bags) b = size(rng);
    std::sort(bags.begin(), bags.end(), std::greater<>());
    std::vector<std::int64_t> speeds(m);
    for (auto& s : speeds) s = size(rng);
    speeds[0] += 1;
    std::sort(speeds.begin(), speeds.end(), std::greater<>());
    const auto bag_q = to_rationals(bags);
    const auto speed_q = to_rationals(speeds);
    const Rational best = optimal_second_stage(bag_q, speed_q).makespan;
    for (const Rational rho : {Rational(2), Rational(3), Rational(8, 5)}) {
      const AssignmentRun greedy = greedy_assignment(bag_q, speed_q, rho);
      if (greedy.success) EXPECT_LE(best, makespan(greedy.assignment, bag_q, speed_q));
      const AssignmentRun coins = integral_assignment(bags, speeds, rho);
      if (coins.success) EXPECT_LE(best, makespan(coins.assignment, bag_q, speed_q));
    }
  }
}

TEST(OptimalSecondStage, MatchesNaiveEnumerationOnSmallInstances) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const auto b = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 6)(rng));
    const auto m = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
    std::vector<Rational> bags, speeds;
    for (std::size_t k = 0; k < b; ++k) bags.push_back(testing::random_rational(rng, 10, 3));
    for (std::size_t i = 0; i < m; ++i) speeds.push_back(testing::random_rational(rng, 5, 2));
    speeds[0] += Rational(1);
    EXPECT_EQ(optimal_second_stage(bags, speeds).makespan, testing::naive_optimum(bags, speeds));
  }
}

}  // namespace
}  // namespace speedrobust
