#pragma once

// Enumeration of integer partitions of `total` into at most `parts` parts,
// each emitted as a non-increasing vector of exactly `parts` entries padded
// with zeros. Order is reverse lexicographic, starting from (total, 0, ..).

#include <cstdint>
#include <random>
#include <vector>

#include "speedrobust/rational.hpp"

namespace speedrobust {

class PartitionGenerator {
 public:
  PartitionGenerator(std::int64_t total, std::int64_t parts);

  // Returns false once every partition has been produced.
  bool next(std::vector<std::int64_t>& out);

 private:
  bool advance();

  std::int64_t total_;
  std::vector<std::int64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

// Number of partitions of `total` into at most `parts` parts.
BigInt partition_count(std::int64_t total, std::int64_t parts);

// Draws a partition uniformly among all partitions of `total` into at most
// `parts` parts, by unranking a uniform index against a count table.
class UniformPartitionSampler {
 public:
  UniformPartitionSampler(std::int64_t total, std::int64_t parts);

  const BigInt& population() const;
  std::vector<std::int64_t> unrank(BigInt rank) const;
  std::vector<std::int64_t> sample(std::mt19937_64& rng) const;

 private:
  std::int64_t total_;
  std::int64_t parts_;
  // bounded_[k][n]: partitions of n whose parts are all <= k (conjugate of
  // "at most k parts").
  std::vector<std::vector<BigInt>> bounded_;
};

}  // namespace speedrobust
