#include "speedrobust/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "speedrobust/bricks.hpp"
#include "speedrobust/error.hpp"
#include "speedrobust/pebbles.hpp"
#include "speedrobust/sand.hpp"
#include "speedrobust/second_stage.hpp"

namespace speedrobust {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> rational_strings(std::span<const Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::vector<std::string> integer_strings(std::span<const std::int64_t> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::string VerificationReport::to_json(bool include_elapsed) const {
  nlohmann::ordered_json doc;
  doc["campaign"] = campaign;
  nlohmann::ordered_json grid_doc = nlohmann::ordered_json::object();
  for (const auto& [key, value] : grid) grid_doc[key] = value;
  doc["grid"] = grid_doc;
  doc["checked"] = checked;
  nlohmann::ordered_json failure_docs = nlohmann::ordered_json::array();
  for (const auto& failure : failures) {
    nlohmann::ordered_json f;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : failure.parameters) params[key] = value;
    f["parameters"] = params;
    f["speeds"] = failure.speeds;
    f["reason"] = failure.reason;
    failure_docs.push_back(std::move(f));
  }
  doc["failures"] = failure_docs;
  if (include_elapsed) doc["elapsed_ms"] = elapsed.count();
  return doc.dump(2);
}

std::string VerificationReport::failures_csv() const {
  std::ostringstream out;
  out << "campaign,parameters,speeds,reason\n";
  for (const auto& failure : failures) {
    std::string params;
    for (const auto& [key, value] : failure.parameters) {
      if (!params.empty()) params += ' ';
      params += key + "=" + value;
    }
    std::string speeds;
    for (const auto& s : failure.speeds) {
      if (!speeds.empty()) speeds += ' ';
      speeds += s;
    }
    out << csv_field(campaign) << ',' << csv_field(params) << ',' << csv_field(speeds) << ','
        << csv_field(failure.reason) << '\n';
  }
  return out.str();
}

unsigned default_workers() {
  if (const char* env = std::getenv("SPEEDROBUST_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& body, const ProgressFn& progress) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
      const std::uint64_t finished = done.fetch_add(1) + 1;
      if (progress) progress(finished, count);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

SpeedProfile normalize_speeds(std::span<const Rational> jobs, const SpeedProfile& speeds) {
  const OptimalSchedule best = optimal_direct_schedule(jobs, speeds.speeds());
  if (best.makespan.is_zero()) {
    throw Error(ErrorCode::kDivisionUndefined, "all jobs have size zero");
  }
  // Scaling speeds by C* makes the optimum 1; lowering each machine to its
  // own load keeps that schedule feasible and fully utilizes every machine.
  return SpeedProfile(best.assignment.loads(jobs, speeds.size()));
}

PartitionGenerator enumerate_integral_speed_profiles(std::int64_t n, std::int64_t machines) {
  if (n < 1 || machines < 1) throw Error(ErrorCode::kInvalidInput, "n and m must be >= 1");
  return PartitionGenerator(n, machines);
}

Rational robustness_ratio(const BagProfile& bags, std::span<const Rational> jobs,
                          const SpeedProfile& speeds) {
  const Rational clairvoyant = optimal_direct(jobs, speeds.speeds());
  if (clairvoyant.is_zero()) {
    throw Error(ErrorCode::kDivisionUndefined, "optimal direct makespan is zero");
  }
  return optimal_second_stage(bags, speeds).makespan / clairvoyant;
}

VerificationReport verify_bricks_success_range(std::int64_t m_max, std::int64_t lambda_max,
                                               const Rational& rho,
                                               const CampaignOptions& options) {
  if (m_max < 1 || lambda_max < 1) {
    throw Error(ErrorCode::kInvalidInput, "m_max and lambda_max must be >= 1");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "bricks-success-range";
  report.grid = {{"m", "1.." + std::to_string(m_max)},
                 {"n", "1..lambda_max*m"},
                 {"lambda_max", std::to_string(lambda_max)},
                 {"b", "m"},
                 {"rho", rho.to_string()}};
  std::vector<std::vector<VerificationFailure>> per_machine(static_cast<std::size_t>(m_max));
  parallel_for(
      static_cast<std::uint64_t>(m_max), options.workers,
      [&](std::uint64_t cell) {
        const auto m = static_cast<std::int64_t>(cell) + 1;
        auto& failures = per_machine[cell];
        for (std::int64_t n = 1; n <= lambda_max * m; ++n) {
          const Rational size = solution_size(bricks_alt(n, m, m), rho);
          if (size < Rational(n)) {
            failures.push_back({{{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                                {},
                                "solution size " + size.to_string() + " < n"});
          }
        }
      },
      options.progress);
  for (std::int64_t m = 1; m <= m_max; ++m) {
    report.checked += static_cast<std::uint64_t>(lambda_max * m);
    auto& failures = per_machine[static_cast<std::size_t>(m - 1)];
    report.failures.insert(report.failures.end(), std::make_move_iterator(failures.begin()),
                           std::make_move_iterator(failures.end()));
  }
  report.elapsed = since(start);
  return report;
}

namespace {

// Checks one integral speed profile against the bags; returns a reason on
// failure.
std::optional<std::string> check_profile(const RobustBags& built,
                                         std::span<const std::int64_t> bag_sizes,
                                         std::span<const std::int64_t> profile) {
  const std::vector<Rational> speeds = to_rationals(profile);
  const AssignmentRun run = built.branch == RobustBranch::kBricks
                                ? integral_assignment(bag_sizes, profile, bricks_rho())
                                : greedy_assignment(built.bags.sizes(), speeds, built.rho);
  if (!run.success) {
    return "assignment failed at bag " + std::to_string(*run.failed_bag);
  }
  const Rational span = makespan(run.assignment, built.bags.sizes(), speeds);
  if (span > bricks_rho()) return "makespan " + span.to_string() + " exceeds 8/5";
  return std::nullopt;
}

}  // namespace

VerificationReport verify_bricks_robustness(std::int64_t n, std::int64_t machines,
                                            const RobustnessOptions& options) {
  if (n < 1 || machines < 1) throw Error(ErrorCode::kInvalidInput, "n and m must be >= 1");
  const auto start = Clock::now();
  const RobustBags built = robust_bags(n, machines, machines);
  std::vector<std::int64_t> bag_sizes;
  for (const auto& size : built.bags.sizes()) bag_sizes.push_back(to_int64(size.floor()));

  VerificationReport report;
  report.campaign = "bricks-robustness";
  report.grid = {{"n", std::to_string(n)},
                 {"m", std::to_string(machines)},
                 {"b", std::to_string(machines)},
                 {"branch", built.branch == RobustBranch::kBricks ? "bricks" : "pebbles"},
                 {"rho", "8/5"}};
  auto record = [&](std::span<const std::int64_t> profile, std::string reason) {
    report.failures.push_back(
        {{{"n", std::to_string(n)}, {"m", std::to_string(machines)}},
         integer_strings(profile),
         std::move(reason)});
  };

  const BigInt population = partition_count(n, machines);
  if (population <= options.exhaustive_limit) {
    report.grid.emplace_back("profiles", "exhaustive");
    PartitionGenerator profiles = enumerate_integral_speed_profiles(n, machines);
    std::vector<std::int64_t> profile;
    while (profiles.next(profile)) {
      ++report.checked;
      if (auto reason = check_profile(built, bag_sizes, profile)) record(profile, *reason);
    }
  } else {
    report.grid.emplace_back("profiles", "sampled " + std::to_string(options.samples) +
                                             " of " + population.str());
    report.grid.emplace_back("seed", std::to_string(options.seed));
    const UniformPartitionSampler sampler(n, machines);
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const auto profile = sampler.sample(rng);
      ++report.checked;
      if (auto reason = check_profile(built, bag_sizes, profile)) record(profile, *reason);
    }
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_sand_upper(std::int64_t machines, std::int64_t bags,
                                     std::uint64_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  // With b < m only the b fastest machines are planned for.
  const std::int64_t planned = effective_machines(machines, bags);
  const SandSequence seq = SandSequence::make(planned, bags);
  const Rational total(seq.lower);
  const Rational rho = rho_bar(planned, bags);
  const BagProfile sizes = sand_bags(machines, bags, total);

  VerificationReport report;
  report.campaign = "sand-upper";
  report.grid = {{"m", std::to_string(machines)},
                 {"b", std::to_string(bags)},
                 {"rho", rho.to_string()},
                 {"P", total.to_string()},
                 {"trials", std::to_string(trials)},
                 {"seed", std::to_string(seed)}};

  auto check = [&](const std::vector<Rational>& speeds, const std::string& label) {
    ++report.checked;
    const AssignmentRun run = greedy_assignment(sizes.sizes(), speeds, rho);
    std::optional<std::string> reason;
    if (!run.success) {
      reason = "greedy failed at bag " + std::to_string(*run.failed_bag);
    } else if (const Rational span = makespan(run.assignment, sizes.sizes(), speeds);
               span > rho) {
      reason = "makespan " + span.to_string() + " exceeds rho";
    }
    if (reason) {
      report.failures.push_back({{{"m", std::to_string(machines)},
                                  {"b", std::to_string(bags)},
                                  {"profile", label}},
                                 rational_strings(speeds),
                                 *reason});
    }
  };

  const Rational to_total = total / Rational(seq.upper);
  const auto configs = adversary_configs(planned, bags);
  for (std::size_t k = 0; k < configs.size(); ++k) {
    std::vector<Rational> speeds;
    for (const auto& s : configs[k].speeds()) speeds.push_back(s * to_total);
    check(speeds, "S_" + std::to_string(k + 1));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(0, 1000);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(planned));
    std::int64_t raw_total = 0;
    while (raw_total == 0) {
      raw_total = 0;
      for (auto& value : raw) {
        value = draw(rng);
        raw_total += value;
      }
    }
    std::vector<Rational> speeds;
    speeds.reserve(raw.size());
    for (auto value : raw) speeds.push_back(Rational(value, raw_total) * total);
    std::sort(speeds.begin(), speeds.end(), std::greater<>());
    check(speeds, "random " + std::to_string(trial));
  }
  report.elapsed = since(start);
  return report;
}

namespace {

struct PebbleCase {
  Instance instance;
  Rational q;
};

// Random jobs, then one extra job of size q P / (m - q) so that the largest
// job sits exactly at q times the average load.
PebbleCase random_pebble_case(std::mt19937_64& rng) {
  const std::int64_t machines = std::uniform_int_distribution<std::int64_t>(2, 8)(rng);
  const std::int64_t bags = std::bernoulli_distribution(0.5)(rng) ? machines : 2 * machines;
  const Rational q(std::uniform_int_distribution<std::int64_t>(5, 100)(rng), 100);
  const std::int64_t ceiling = std::bernoulli_distribution(0.5)(rng) ? 1000 : 10;
  std::uniform_int_distribution<std::int64_t> size(1, ceiling);

  std::vector<Rational> jobs;
  Rational total;
  Rational largest;
  const Rational m(machines);
  while (jobs.empty() || largest * m > q * total) {
    jobs.emplace_back(size(rng));
    total += jobs.back();
    largest = max(largest, jobs.back());
  }
  jobs.push_back(q * total / (m - q));
  return {Instance(std::move(jobs), machines, bags), q};
}

}  // namespace

VerificationReport verify_pebbles_random(std::uint64_t instances, std::uint64_t seed) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "pebbles-random";
  report.grid = {{"instances", std::to_string(instances)},
                 {"q", "[1/20, 1]"},
                 {"m", "2..8"},
                 {"b", "m or 2m"},
                 {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < instances; ++i) {
    const PebbleCase c = random_pebble_case(rng);
    const Instance& inst = c.instance;
    const std::int64_t machines = inst.machine_count();
    const std::int64_t bags = inst.bag_count();
    const Rational rho = rho_bar(machines, bags) + c.q;
    const PebblesResult packed = pebbles_bags(inst, rho);
    ++report.checked;

    std::vector<std::string> reasons;
    if (pebble_q(inst) != c.q) reasons.push_back("generated instance is not tight in q");
    if (!packed.packed_all) reasons.push_back("ran out of bags");
    // Inequality checks in normalized units (P = m).
    const Rational m(machines);
    const Rational to_normalized = m / inst.total();
    const std::vector<Rational> reference = sand_reference_sequence(machines, bags);
    Rational prefix_d;
    Rational prefix_a;
    for (std::size_t k = 0; k < packed.bag_sizes.size(); ++k) {
      const Rational d = packed.bag_sizes[k] * to_normalized;
      if (d > rho - prefix_d / m) {
        reasons.push_back("bag " + std::to_string(k) + " exceeds its capacity bound");
      }
      prefix_d += d;
      prefix_a += reference[k];
      if (prefix_d < prefix_a) {
        reasons.push_back("prefix domination fails at k = " + std::to_string(k + 1));
      }
    }
    for (auto& reason : reasons) {
      report.failures.push_back({{{"instance", std::to_string(i)},
                                  {"m", std::to_string(machines)},
                                  {"b", std::to_string(bags)},
                                  {"q", c.q.to_string()},
                                  {"jobs", std::to_string(inst.job_count())}},
                                 {},
                                 std::move(reason)});
    }
  }
  report.elapsed = since(start);
  return report;
}

}  // namespace speedrobust
