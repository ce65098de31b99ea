#pragma once

// Domain value types shared by every first- and second-stage algorithm.
//
// All profiles keep their entries sorted non-increasing; constructors sort.
// Indices (bags, machines, jobs) are 0-based throughout the library.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "speedrobust/error.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {

// Jobs p_1 >= ... >= p_n (all >= 0, total > 0) to be packed into
// `bag_count` bags for `machine_count` machines.
class Instance {
 public:
  Instance(std::vector<Rational> job_sizes, std::int64_t machine_count, std::int64_t bag_count);

  // n unit jobs.
  static Instance bricks(std::int64_t n, std::int64_t machine_count, std::int64_t bag_count);

  std::span<const Rational> job_sizes() const { return job_sizes_; }
  std::size_t job_count() const { return job_sizes_.size(); }
  std::int64_t machine_count() const { return machine_count_; }
  std::int64_t bag_count() const { return bag_count_; }
  const Rational& total() const { return total_; }

 private:
  std::vector<Rational> job_sizes_;
  std::int64_t machine_count_;
  std::int64_t bag_count_;
  Rational total_;
};

class BagProfile {
 public:
  BagProfile() = default;
  explicit BagProfile(std::vector<Rational> sizes);

  std::span<const Rational> sizes() const { return sizes_; }
  std::size_t size() const { return sizes_.size(); }
  const Rational& operator[](std::size_t i) const { return sizes_[i]; }
  Rational total() const;

  friend bool operator==(const BagProfile&, const BagProfile&) = default;

 private:
  std::vector<Rational> sizes_;
};

class SpeedProfile {
 public:
  explicit SpeedProfile(std::vector<Rational> speeds);

  std::span<const Rational> speeds() const { return speeds_; }
  std::size_t size() const { return speeds_.size(); }
  const Rational& operator[](std::size_t i) const { return speeds_[i]; }
  Rational total() const;

  friend bool operator==(const SpeedProfile&, const SpeedProfile&) = default;

 private:
  std::vector<Rational> speeds_;
};

// Partition of bag indices over machines, stored as machine_of_bag[bag].
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::size_t> machine_of_bag)
      : machine_of_bag_(std::move(machine_of_bag)) {}

  std::span<const std::size_t> machine_of_bag() const { return machine_of_bag_; }
  std::size_t machine_of(std::size_t bag) const { return machine_of_bag_[bag]; }
  std::size_t bag_count() const { return machine_of_bag_.size(); }

  // Bags on each machine (the sets M_1..M_m).
  std::vector<std::vector<std::size_t>> machine_sets(std::size_t machine_count) const;

  // Total bag size per machine. Throws kInvalidAssignment on shape mismatch.
  std::vector<Rational> loads(std::span<const Rational> bags, std::size_t machine_count) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::size_t> machine_of_bag_;
};

// Bag cost z -> (possibly fractional) number of bags F(z).
class FractionalSolution {
 public:
  FractionalSolution() = default;

  // Adds `count` bags of cost `z`; zero counts are not stored.
  void add(std::int64_t z, const Rational& count);
  Rational count(std::int64_t z) const;

  const std::map<std::int64_t, Rational>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }
  Rational bag_total() const;
  Rational cost_total() const;

  // Smallest / largest cost with a positive count. Requires !empty().
  std::int64_t min_cost() const;
  std::int64_t max_cost() const;

  friend bool operator==(const FractionalSolution&, const FractionalSolution&) = default;

 private:
  std::map<std::int64_t, Rational> counts_;
};

// Completion time of the most loaded machine. Zero-speed machines must carry
// only zero-size bags.
Rational makespan(const Assignment& assignment, const BagProfile& bags,
                  const SpeedProfile& speeds);
Rational makespan(const Assignment& assignment, std::span<const Rational> bags,
                  std::span<const Rational> speeds);

// Convenience conversion of integer lists.
std::vector<Rational> to_rationals(std::span<const std::int64_t> values);

}  // namespace speedrobust
