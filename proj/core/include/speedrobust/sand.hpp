#pragma once

// Infinitesimal jobs ("sand"): geometric bag sizes, the tight robustness
// factor U / L, and the adversary's speed configurations from the matching
// lower bound.

#include <cstdint>
#include <vector>

#include "speedrobust/model.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {

// t_j = m^(b-j) (m-1)^(j-1), U = m^b, L = m^b - (m-1)^b.
struct SandSequence {
  std::int64_t machines = 0;
  std::int64_t bags = 0;
  std::vector<BigInt> t;
  BigInt upper;  // U
  BigInt lower;  // L

  static SandSequence make(std::int64_t machines, std::int64_t bags);
};

// m^b / (m^b - (m-1)^b).
Rational rho_bar(std::int64_t machines, std::int64_t bags);

// Machine count the sand algorithm actually plans for: min(m, b). With fewer
// bags than machines only the b fastest machines are ever used.
std::int64_t effective_machines(std::int64_t machines, std::int64_t bags);

// a_j = t_j * P / L over m' = min(m, b) machines; sums exactly to P.
BagProfile sand_bags(std::int64_t machines, std::int64_t bags, const Rational& total);

// The b configurations S_k: one fast machine U - (m-1) t_k, the rest t_k.
// For m == 1 the single profile (U).
std::vector<SpeedProfile> adversary_configs(std::int64_t machines, std::int64_t bags);

// Worst optimal second-stage makespan of `bag_sizes` over all S_k. The bags
// must sum to U = m^b exactly (kScaleMismatch otherwise).
Rational lower_bound_probe(std::int64_t machines, std::int64_t bags, const BagProfile& bag_sizes);

struct LowerBoundCertificate {
  Rational minimum;           // min over profiles of the probe value
  BagProfile best_profile;    // a profile attaining the minimum
  std::uint64_t profiles = 0; // number of profiles examined
};

// Runs the probe on every non-increasing integer profile of b parts summing
// to U. A finite check at integer granularity, not a proof for real sizes.
LowerBoundCertificate lower_bound_certificate(std::int64_t machines, std::int64_t bags);

}  // namespace speedrobust
