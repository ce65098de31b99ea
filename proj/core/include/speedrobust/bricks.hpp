#pragma once

// Unit jobs ("bricks") with b = m: the coin-accounting bag generator, its
// cost-grouped and fractional reformulations, and the quantities used to
// show that it always packs n bricks at rho = 8/5 when n / m <= 60.
//
// Coins model integral reserved speed. With c coins left on m machines some
// machine holds at least z = ceil(c / m) of them, so a bag of cost z gets
// size floor(z * rho).

#include <cstdint>
#include <optional>
#include <vector>

#include "speedrobust/model.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {

// 8/5, kept exact.
Rational bricks_rho();

struct BrickSolution {
  std::vector<std::int64_t> bag_sizes;
  std::vector<std::int64_t> bag_costs;
  std::int64_t total_size = 0;
  bool successful = false;
};

// Emits exactly b bags; once coins run out the remaining bags have cost 0 and
// size 0. `successful` iff total_size >= n.
BrickSolution bricks_bags(std::int64_t n, std::int64_t machines, std::int64_t bags,
                          const Rational& rho);

// Drops the smallest bags, then shrinks the last non-empty one, until the
// sizes sum to n. Costs are left as reserved. Throws kInfeasible when the
// solution is too small.
BrickSolution trim_to_n(const BrickSolution& solution, std::int64_t n);

// Same cost multiset as bricks_bags, produced one cost level at a time.
FractionalSolution bricks_alt(std::int64_t n, std::int64_t machines, std::int64_t bags);

// bricks_alt without rounding the per-level bag count; defined for any
// positive rational inputs.
FractionalSolution bricks_fract(const Rational& n, const Rational& machines,
                                const Rational& bags);

// sum_z F(z) * floor(z * rho).
Rational solution_size(const FractionalSolution& solution, const Rational& rho);

// Integer-only size of bricks_alt(n, m, b) at rho, for large sweeps.
std::int64_t bricks_alt_size(std::int64_t n, std::int64_t machines, std::int64_t bags,
                             const Rational& rho);

// f(z) = floor(z rho) - z/(z-1) floor((z-1) rho) + 1/(z-1) floor(rho), z >= 2.
Rational transformation_factor(std::int64_t z, const Rational& rho);

// sum_{z=2}^{z_max} min(0, f(z)).
Rational negative_f_sum(std::int64_t z_max, const Rational& rho);

// (size(F, rho) - n) / m for the fractional solution with b = m; depends on
// lambda = n / m only.
Rational normalized_surplus(const Rational& lambda, const Rational& rho = bricks_rho());

struct SurplusPoint {
  Rational lambda;
  Rational surplus;
  // Bag cost that stops being used at this lambda; empty for integer
  // breakpoints where the top cost changes.
  std::optional<std::int64_t> dropped_cost;
};

// Points where the smallest used cost disappears, one search per integer
// interval (k, k+1] for k = 1..floor(lambda_max). The last point may lie
// beyond lambda_max.
std::vector<SurplusPoint> cost_exit_points(const Rational& lambda_max,
                                           const Rational& rho = bricks_rho());

// Every breakpoint of the piecewise-linear surplus on [1, lambda_max]:
// integers plus cost exits, sorted by lambda.
std::vector<SurplusPoint> surplus_breakpoints(const Rational& lambda_max,
                                              const Rational& rho = bricks_rho());

enum class RobustBranch { kBricks, kPebbles };

struct RobustBags {
  BagProfile bags;
  RobustBranch branch = RobustBranch::kBricks;
  // Robustness factor the emitted bags are packed for.
  Rational rho;
};

// n / m <= 60: bricks at 8/5 trimmed to n. Otherwise pebbles at
// rho_bar(m, b) + m / n. Falls back to the other branch if the first does not
// pack; kInternalFailure if neither does.
RobustBags robust_bags(std::int64_t n, std::int64_t machines, std::int64_t bags);

}  // namespace speedrobust
