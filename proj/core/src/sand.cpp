#include "speedrobust/sand.hpp"

#include <algorithm>

#include "speedrobust/error.hpp"
#include "speedrobust/partitions.hpp"
#include "speedrobust/second_stage.hpp"

namespace speedrobust {

namespace {

void require_positive(std::int64_t machines, std::int64_t bags) {
  if (machines < 1) throw Error(ErrorCode::kInvalidInput, "machine count must be >= 1");
  if (bags < 1) throw Error(ErrorCode::kInvalidInput, "bag count must be >= 1");
}

}  // namespace

SandSequence SandSequence::make(std::int64_t machines, std::int64_t bags) {
  require_positive(machines, bags);
  SandSequence seq;
  seq.machines = machines;
  seq.bags = bags;
  const auto b = static_cast<unsigned>(bags);
  seq.upper = ipow(machines, b);
  seq.lower = seq.upper - ipow(machines - 1, b);
  seq.t.reserve(static_cast<std::size_t>(bags));
  for (unsigned j = 1; j <= b; ++j) {
    seq.t.push_back(ipow(machines, b - j) * ipow(machines - 1, j - 1));
  }
  return seq;
}

Rational rho_bar(std::int64_t machines, std::int64_t bags) {
  const SandSequence seq = SandSequence::make(machines, bags);
  return Rational(seq.upper, seq.lower);
}

std::int64_t effective_machines(std::int64_t machines, std::int64_t bags) {
  return std::min(machines, bags);
}

BagProfile sand_bags(std::int64_t machines, std::int64_t bags, const Rational& total) {
  require_positive(machines, bags);
  if (total.sign() <= 0) throw Error(ErrorCode::kInvalidInput, "total size P must be > 0");
  const SandSequence seq = SandSequence::make(effective_machines(machines, bags), bags);
  const Rational scale = total / Rational(seq.lower);
  std::vector<Rational> sizes;
  sizes.reserve(seq.t.size());
  for (const auto& t : seq.t) sizes.push_back(Rational(t) * scale);
  return BagProfile(std::move(sizes));
}

std::vector<SpeedProfile> adversary_configs(std::int64_t machines, std::int64_t bags) {
  const SandSequence seq = SandSequence::make(machines, bags);
  if (machines == 1) return {SpeedProfile({Rational(seq.upper)})};
  std::vector<SpeedProfile> configs;
  configs.reserve(seq.t.size());
  for (const auto& t : seq.t) {
    std::vector<Rational> speeds(static_cast<std::size_t>(machines), Rational(t));
    speeds.front() = Rational(seq.upper - BigInt(machines - 1) * t);
    configs.emplace_back(std::move(speeds));
  }
  return configs;
}

Rational lower_bound_probe(std::int64_t machines, std::int64_t bags, const BagProfile& bag_sizes) {
  const SandSequence seq = SandSequence::make(machines, bags);
  if (bag_sizes.size() != static_cast<std::size_t>(bags)) {
    throw Error(ErrorCode::kInvalidInput, "probe needs exactly b bag sizes");
  }
  if (bag_sizes.total() != Rational(seq.upper)) {
    throw Error(ErrorCode::kScaleMismatch, "bag sizes sum to " + bag_sizes.total().to_string() +
                                               ", expected U = " + seq.upper.str());
  }
  Rational worst;
  for (const auto& config : adversary_configs(machines, bags)) {
    worst = max(worst, optimal_second_stage(bag_sizes, config).makespan);
  }
  return worst;
}

LowerBoundCertificate lower_bound_certificate(std::int64_t machines, std::int64_t bags) {
  const SandSequence seq = SandSequence::make(machines, bags);
  const std::int64_t upper = to_int64(seq.upper);
  LowerBoundCertificate cert;
  PartitionGenerator profiles(upper, bags);
  std::vector<std::int64_t> parts;
  bool first = true;
  while (profiles.next(parts)) {
    BagProfile candidate(to_rationals(parts));
    Rational value = lower_bound_probe(machines, bags, candidate);
    ++cert.profiles;
    if (first || value < cert.minimum) {
      cert.minimum = std::move(value);
      cert.best_profile = std::move(candidate);
      first = false;
    }
  }
  return cert;
}

}  // namespace speedrobust
