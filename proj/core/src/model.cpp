#include "speedrobust/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace speedrobust {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kInvalidAssignment: return "invalid-assignment";
    case ErrorCode::kScaleMismatch: return "scale-mismatch";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kDivisionUndefined: return "division-undefined";
    case ErrorCode::kInternalFailure: return "internal-failure";
  }
  return "unknown";
}

namespace {

void sort_descending(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

Rational sum(std::span<const Rational> values) {
  return std::accumulate(values.begin(), values.end(), Rational(0));
}

void require_non_negative(std::span<const Rational> values, const char* what) {
  for (const auto& v : values) {
    if (v.sign() < 0) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be >= 0");
  }
}

}  // namespace

Instance::Instance(std::vector<Rational> job_sizes, std::int64_t machine_count,
                   std::int64_t bag_count)
    : job_sizes_(std::move(job_sizes)), machine_count_(machine_count), bag_count_(bag_count) {
  if (machine_count_ < 1) throw Error(ErrorCode::kInvalidInput, "machine count must be >= 1");
  if (bag_count_ < 1) throw Error(ErrorCode::kInvalidInput, "bag count must be >= 1");
  require_non_negative(job_sizes_, "job sizes");
  sort_descending(job_sizes_);
  total_ = sum(job_sizes_);
  if (total_.sign() <= 0) throw Error(ErrorCode::kInvalidInput, "total processing time must be > 0");
}

Instance Instance::bricks(std::int64_t n, std::int64_t machine_count, std::int64_t bag_count) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "brick count must be >= 1");
  return Instance(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), machine_count,
                  bag_count);
}

BagProfile::BagProfile(std::vector<Rational> sizes) : sizes_(std::move(sizes)) {
  require_non_negative(sizes_, "bag sizes");
  sort_descending(sizes_);
}

Rational BagProfile::total() const { return sum(sizes_); }

SpeedProfile::SpeedProfile(std::vector<Rational> speeds) : speeds_(std::move(speeds)) {
  require_non_negative(speeds_, "speeds");
  sort_descending(speeds_);
  if (speeds_.empty() || speeds_.front().is_zero()) {
    throw Error(ErrorCode::kInvalidInput, "at least one speed must be positive");
  }
}

Rational SpeedProfile::total() const { return sum(speeds_); }

std::vector<std::vector<std::size_t>> Assignment::machine_sets(std::size_t machine_count) const {
  std::vector<std::vector<std::size_t>> sets(machine_count);
  for (std::size_t bag = 0; bag < machine_of_bag_.size(); ++bag) {
    if (machine_of_bag_[bag] >= machine_count) {
      throw Error(ErrorCode::kInvalidAssignment, "machine index out of range");
    }
    sets[machine_of_bag_[bag]].push_back(bag);
  }
  return sets;
}

std::vector<Rational> Assignment::loads(std::span<const Rational> bags,
                                        std::size_t machine_count) const {
  if (bags.size() != machine_of_bag_.size()) {
    throw Error(ErrorCode::kInvalidAssignment, "assignment does not cover every bag");
  }
  std::vector<Rational> load(machine_count);
  for (std::size_t bag = 0; bag < bags.size(); ++bag) {
    const std::size_t machine = machine_of_bag_[bag];
    if (machine >= machine_count) {
      throw Error(ErrorCode::kInvalidAssignment, "machine index out of range");
    }
    load[machine] += bags[bag];
  }
  return load;
}

void FractionalSolution::add(std::int64_t z, const Rational& count) {
  if (count.is_zero()) return;
  auto [it, inserted] = counts_.try_emplace(z, count);
  if (!inserted) {
    it->second += count;
    if (it->second.is_zero()) counts_.erase(it);
  }
}

Rational FractionalSolution::count(std::int64_t z) const {
  const auto it = counts_.find(z);
  return it == counts_.end() ? Rational(0) : it->second;
}

Rational FractionalSolution::bag_total() const {
  Rational total;
  for (const auto& [z, count] : counts_) total += count;
  return total;
}

Rational FractionalSolution::cost_total() const {
  Rational total;
  for (const auto& [z, count] : counts_) total += count * Rational(z);
  return total;
}

std::int64_t FractionalSolution::min_cost() const {
  for (const auto& [z, count] : counts_) {
    if (count.sign() > 0) return z;
  }
  throw Error(ErrorCode::kInvalidInput, "empty fractional solution");
}

std::int64_t FractionalSolution::max_cost() const {
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
    if (it->second.sign() > 0) return it->first;
  }
  throw Error(ErrorCode::kInvalidInput, "empty fractional solution");
}

Rational makespan(const Assignment& assignment, std::span<const Rational> bags,
                  std::span<const Rational> speeds) {
  const auto load = assignment.loads(bags, speeds.size());
  Rational worst;
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (load[i].is_zero()) continue;
    if (speeds[i].is_zero()) {
      throw Error(ErrorCode::kInvalidAssignment, "positive bag on a zero-speed machine");
    }
    worst = max(worst, load[i] / speeds[i]);
  }
  return worst;
}

Rational makespan(const Assignment& assignment, const BagProfile& bags,
                  const SpeedProfile& speeds) {
  return makespan(assignment, bags.sizes(), speeds.speeds());
}

std::vector<Rational> to_rationals(std::span<const std::int64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace speedrobust
