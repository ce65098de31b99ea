#include "speedrobust/bricks.hpp"

#include <algorithm>

#include "speedrobust/error.hpp"
#include "speedrobust/pebbles.hpp"
#include "speedrobust/sand.hpp"

namespace speedrobust {

namespace {

constexpr std::int64_t kBricksLambdaLimit = 60;

void require_counts(std::int64_t n, std::int64_t machines, std::int64_t bags) {
  if (n < 1 || machines < 1 || bags < 1) {
    throw Error(ErrorCode::kInvalidInput, "n, m and b must all be >= 1");
  }
}

}  // namespace

Rational bricks_rho() { return Rational(8, 5); }

BrickSolution bricks_bags(std::int64_t n, std::int64_t machines, std::int64_t bags,
                          const Rational& rho) {
  require_counts(n, machines, bags);
  if (rho < Rational(1)) throw Error(ErrorCode::kInvalidInput, "rho must be >= 1");
  BrickSolution solution;
  solution.bag_sizes.reserve(static_cast<std::size_t>(bags));
  solution.bag_costs.reserve(static_cast<std::size_t>(bags));
  std::int64_t coins = n;
  for (std::int64_t j = 0; j < bags; ++j) {
    const std::int64_t cost = ceil_div(coins, machines);
    const std::int64_t size = floor_scale(cost, rho);
    solution.bag_costs.push_back(cost);
    solution.bag_sizes.push_back(size);
    solution.total_size += size;
    coins -= cost;
  }
  solution.successful = solution.total_size >= n;
  return solution;
}

BrickSolution trim_to_n(const BrickSolution& solution, std::int64_t n) {
  if (solution.total_size < n) {
    throw Error(ErrorCode::kInfeasible, "bags hold " + std::to_string(solution.total_size) +
                                            " bricks, fewer than n = " + std::to_string(n));
  }
  BrickSolution trimmed = solution;
  std::int64_t excess = solution.total_size - n;
  for (auto it = trimmed.bag_sizes.rbegin(); it != trimmed.bag_sizes.rend() && excess > 0; ++it) {
    const std::int64_t cut = std::min(*it, excess);
    *it -= cut;
    excess -= cut;
  }
  trimmed.total_size = n;
  trimmed.successful = true;
  return trimmed;
}

FractionalSolution bricks_alt(std::int64_t n, std::int64_t machines, std::int64_t bags) {
  require_counts(n, machines, bags);
  FractionalSolution solution;
  std::int64_t bags_left = bags;
  std::int64_t coins = n;
  while (bags_left > 0 && coins > 0) {
    const std::int64_t cost = ceil_div(coins, machines);
    const std::int64_t count =
        std::min(bags_left, ceil_div(coins - machines * (cost - 1), cost));
    bags_left -= count;
    coins -= count * cost;
    solution.add(cost, Rational(count));
  }
  return solution;
}

FractionalSolution bricks_fract(const Rational& n, const Rational& machines,
                                const Rational& bags) {
  if (n.sign() <= 0 || machines.sign() <= 0 || bags.sign() <= 0) {
    throw Error(ErrorCode::kInvalidInput, "n, m and b must all be > 0");
  }
  FractionalSolution solution;
  Rational bags_left = bags;
  Rational coins = n;
  while (bags_left.sign() > 0 && coins.sign() > 0) {
    const BigInt cost = (coins / machines).ceil();
    const Rational count =
        min(bags_left, (coins - machines * Rational(cost - 1)) / Rational(cost));
    bags_left -= count;
    coins -= count * Rational(cost);
    solution.add(to_int64(cost), count);
  }
  return solution;
}

Rational solution_size(const FractionalSolution& solution, const Rational& rho) {
  Rational size;
  for (const auto& [cost, count] : solution.counts()) {
    size += count * Rational(floor_scale(BigInt(cost), rho));
  }
  return size;
}

std::int64_t bricks_alt_size(std::int64_t n, std::int64_t machines, std::int64_t bags,
                             const Rational& rho) {
  require_counts(n, machines, bags);
  const std::int64_t num = to_int64(rho.numerator());
  const std::int64_t den = to_int64(rho.denominator());
  std::int64_t size = 0;
  std::int64_t bags_left = bags;
  std::int64_t coins = n;
  while (bags_left > 0 && coins > 0) {
    const std::int64_t cost = ceil_div(coins, machines);
    const std::int64_t count =
        std::min(bags_left, ceil_div(coins - machines * (cost - 1), cost));
    bags_left -= count;
    coins -= count * cost;
    size += count * ((cost * num) / den);
  }
  return size;
}

Rational transformation_factor(std::int64_t z, const Rational& rho) {
  if (z < 2) throw Error(ErrorCode::kInvalidInput, "transformation factor needs z >= 2");
  const Rational top(floor_scale(BigInt(z), rho));
  const Rational below(floor_scale(BigInt(z - 1), rho));
  const Rational unit(rho.floor());
  return top - Rational(z, z - 1) * below + unit / Rational(z - 1);
}

Rational negative_f_sum(std::int64_t z_max, const Rational& rho) {
  if (z_max < 2) throw Error(ErrorCode::kInvalidInput, "z_max must be >= 2");
  Rational total;
  for (std::int64_t z = 2; z <= z_max; ++z) total += min(Rational(0), transformation_factor(z, rho));
  return total;
}

Rational normalized_surplus(const Rational& lambda, const Rational& rho) {
  if (lambda.sign() <= 0) throw Error(ErrorCode::kInvalidInput, "lambda must be > 0");
  // b = m = 1 after scaling by 1/m.
  const FractionalSolution solution = bricks_fract(lambda, Rational(1), Rational(1));
  return solution_size(solution, rho) - lambda;
}

std::vector<SurplusPoint> cost_exit_points(const Rational& lambda_max, const Rational& rho) {
  if (lambda_max < Rational(1)) throw Error(ErrorCode::kInvalidInput, "lambda_max must be >= 1");
  std::vector<SurplusPoint> points;
  const std::int64_t last = to_int64(lambda_max.floor());
  for (std::int64_t k = 1; k <= last; ++k) {
    const FractionalSolution at_k = bricks_fract(Rational(k), Rational(1), Rational(1));
    const std::int64_t lowest = at_k.min_cost();
    // Just above k a new cost k + 1 appears and absorbs bags at rate
    // 1 / (k + 1) per unit of lambda, taken from the lowest cost.
    const Rational step = at_k.count(lowest) * Rational(k + 1);
    if (step > Rational(1)) continue;
    const Rational lambda = Rational(k) + step;
    points.push_back({lambda, normalized_surplus(lambda, rho), lowest});
  }
  return points;
}

std::vector<SurplusPoint> surplus_breakpoints(const Rational& lambda_max, const Rational& rho) {
  std::vector<SurplusPoint> points;
  for (auto& exit : cost_exit_points(lambda_max, rho)) {
    if (exit.lambda <= lambda_max) points.push_back(std::move(exit));
  }
  const std::int64_t last = to_int64(lambda_max.floor());
  for (std::int64_t k = 1; k <= last; ++k) {
    const Rational lambda(k);
    const bool present = std::any_of(points.begin(), points.end(),
                                     [&](const SurplusPoint& p) { return p.lambda == lambda; });
    if (!present) points.push_back({lambda, normalized_surplus(lambda, rho), std::nullopt});
  }
  std::sort(points.begin(), points.end(),
            [](const SurplusPoint& a, const SurplusPoint& b) { return a.lambda < b.lambda; });
  return points;
}

namespace {

std::optional<RobustBags> try_bricks(std::int64_t n, std::int64_t machines, std::int64_t bags) {
  const BrickSolution solution = bricks_bags(n, machines, bags, bricks_rho());
  if (!solution.successful) return std::nullopt;
  const BrickSolution trimmed = trim_to_n(solution, n);
  return RobustBags{BagProfile(to_rationals(trimmed.bag_sizes)), RobustBranch::kBricks,
                    bricks_rho()};
}

std::optional<RobustBags> try_pebbles(std::int64_t n, std::int64_t machines, std::int64_t bags) {
  const Rational rho = rho_bar(machines, bags) + Rational(machines, n);
  const PebblesResult packed = pebbles_bags(Instance::bricks(n, machines, bags), rho);
  if (!packed.packed_all) return std::nullopt;
  return RobustBags{packed.profile(), RobustBranch::kPebbles, rho};
}

}  // namespace

RobustBags robust_bags(std::int64_t n, std::int64_t machines, std::int64_t bags) {
  require_counts(n, machines, bags);
  const bool bricks_first = n <= kBricksLambdaLimit * machines;
  auto result = bricks_first ? try_bricks(n, machines, bags) : try_pebbles(n, machines, bags);
  if (!result) {
    result = bricks_first ? try_pebbles(n, machines, bags) : try_bricks(n, machines, bags);
  }
  if (!result) {
    throw Error(ErrorCode::kInternalFailure,
                "neither bricks nor pebbles packed n = " + std::to_string(n) +
                    ", m = " + std::to_string(machines) + ", b = " + std::to_string(bags));
  }
  return *std::move(result);
}

}  // namespace speedrobust
