#pragma once

// First-fit packing for q-pebbles: each bag is filled while its size stays
// within rho - (1/m) * (sum of earlier bags), measured with jobs rescaled so
// that P = m. Reaches rho_bar(m, b) + q without running out of bags.

#include <cstdint>
#include <optional>
#include <vector>

#include "speedrobust/model.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {

struct PebblesResult {
  // bag_of_job[j] is the bag of job j (in the instance's sorted job order);
  // empty when the job was not placed.
  std::vector<std::optional<std::size_t>> bag_of_job;
  // d_1..d_b in bag order, in the caller's units.
  std::vector<Rational> bag_sizes;
  bool packed_all = false;

  BagProfile profile() const { return BagProfile(bag_sizes); }
};

// Smallest q with p_j <= q * P / m for every job: max_j p_j * m / P.
Rational pebble_q(const Instance& instance);

PebblesResult pebbles_bags(const Instance& instance, const Rational& rho);

// Reference sand sizes under P = m: a_k = rho_bar - (1/m) sum_{j<k} a_j.
std::vector<Rational> sand_reference_sequence(std::int64_t machines, std::int64_t bags);

}  // namespace speedrobust
