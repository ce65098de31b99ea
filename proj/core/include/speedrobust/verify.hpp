#pragma once

// Adversary-side tooling and verification campaigns. Campaign results are
// data: a VerificationReport lists every failing grid cell instead of
// throwing.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "speedrobust/model.hpp"
#include "speedrobust/partitions.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {

struct VerificationFailure {
  // Instance parameters as (name, value) pairs, e.g. {"n", "45"}.
  std::vector<std::pair<std::string, std::string>> parameters;
  // Speed profile as rational strings; empty when not applicable.
  std::vector<std::string> speeds;
  std::string reason;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
  std::string campaign;
  std::vector<std::pair<std::string, std::string>> grid;
  std::uint64_t checked = 0;
  std::vector<VerificationFailure> failures;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }

  // {"campaign", "grid", "checked", "failures", "elapsed_ms"}. With
  // include_elapsed = false the output is a pure function of the inputs.
  std::string to_json(bool include_elapsed = true) const;
  // One row per failure: campaign, parameters, speeds, reason.
  std::string failures_csv() const;
};

// Called with (cells done, cells total) from worker threads.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

struct CampaignOptions {
  // 0 selects default_workers().
  unsigned workers = 0;
  ProgressFn progress;
};

// SPEEDROBUST_WORKERS if set and positive, else hardware concurrency (>= 1).
unsigned default_workers();

// Rescales speeds so that the clairvoyant optimum is 1 with every machine of
// positive speed finishing exactly at 1: s'_i = load_i of an optimal direct
// schedule. The result sums to the total job size.
SpeedProfile normalize_speeds(std::span<const Rational> jobs, const SpeedProfile& speeds);

// Partitions of n into at most m parts, as speed vectors of length m.
PartitionGenerator enumerate_integral_speed_profiles(std::int64_t n, std::int64_t machines);

// optimal_second_stage(bags) / optimal_direct(jobs), both exact.
Rational robustness_ratio(const BagProfile& bags, std::span<const Rational> jobs,
                          const SpeedProfile& speeds);

// For every m <= m_max and 1 <= n <= lambda_max * m, checks that the
// cost-grouped brick solution with b = m has size >= n at rho.
VerificationReport verify_bricks_success_range(std::int64_t m_max, std::int64_t lambda_max,
                                               const Rational& rho,
                                               const CampaignOptions& options = {});

struct RobustnessOptions {
  // Profiles are enumerated exhaustively when there are at most this many;
  // otherwise `samples` uniformly drawn partitions are checked.
  std::uint64_t exhaustive_limit = 2'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
};

// Builds robust_bags(n, m, m) and checks the coin-paying assignment at 8/5
// against integral speed profiles summing to n. Each passing profile also
// has its assignment's makespan checked against 8/5.
VerificationReport verify_bricks_robustness(std::int64_t n, std::int64_t machines,
                                            const RobustnessOptions& options = {});

// Greedy assignment at rho_bar(m, b) on the sand bags against every adversary
// configuration and `trials` random rational profiles with the same total.
VerificationReport verify_sand_upper(std::int64_t machines, std::int64_t bags,
                                     std::uint64_t trials, std::uint64_t seed);

// Random q-pebble instances packed at rho_bar(m, b) + q. Checks full packing,
// the per-bag capacity inequality, and prefix domination over the sand
// reference sequence.
VerificationReport verify_pebbles_random(std::uint64_t instances, std::uint64_t seed);

// Runs body(i) for i in [0, count) on `workers` threads.
void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& body,
                  const ProgressFn& progress = {});

}  // namespace speedrobust
