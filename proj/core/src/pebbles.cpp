#include "speedrobust/pebbles.hpp"

#include "speedrobust/error.hpp"
#include "speedrobust/sand.hpp"

namespace speedrobust {

Rational pebble_q(const Instance& instance) {
  return instance.job_sizes().front() * Rational(instance.machine_count()) / instance.total();
}

PebblesResult pebbles_bags(const Instance& instance, const Rational& rho) {
  if (rho < Rational(1)) throw Error(ErrorCode::kInvalidInput, "rho must be >= 1");
  const Rational machines(instance.machine_count());
  const auto bag_count = static_cast<std::size_t>(instance.bag_count());
  // Work in units where P = m.
  const Rational to_normalized = machines / instance.total();

  PebblesResult result;
  result.bag_of_job.assign(instance.job_count(), std::nullopt);
  std::vector<Rational> filled(bag_count);
  Rational before_current;  // sum of d_l for l < k (normalized)
  std::size_t k = 0;
  Rational bound = rho;  // capacity of bag k: rho - before_current / m
  bool ran_out = false;
  const auto jobs = instance.job_sizes();
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Rational p = jobs[j] * to_normalized;
    while (k < bag_count && filled[k] + p > bound) {
      before_current += filled[k];
      bound = rho - before_current / machines;
      ++k;
    }
    if (k >= bag_count) {
      ran_out = true;
      break;
    }
    result.bag_of_job[j] = k;
    filled[k] += p;
  }
  result.packed_all = !ran_out;
  result.bag_sizes.reserve(bag_count);
  for (const auto& d : filled) result.bag_sizes.push_back(d / to_normalized);
  return result;
}

std::vector<Rational> sand_reference_sequence(std::int64_t machines, std::int64_t bags) {
  const Rational rho = rho_bar(machines, bags);
  const Rational m(machines);
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(bags));
  Rational prefix;
  for (std::int64_t k = 0; k < bags; ++k) {
    a.push_back(rho - prefix / m);
    prefix += a.back();
  }
  return a;
}

}  // namespace speedrobust
