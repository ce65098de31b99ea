#include "speedrobust/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "speedrobust/error.hpp"

namespace speedrobust {

PartitionGenerator::PartitionGenerator(std::int64_t total, std::int64_t parts) : total_(total) {
  if (total < 0 || parts < 1) {
    throw Error(ErrorCode::kInvalidInput, "partitions need total >= 0 and parts >= 1");
  }
  current_.assign(static_cast<std::size_t>(parts), 0);
  current_[0] = total;
}

bool PartitionGenerator::next(std::vector<std::int64_t>& out) {
  if (done_) return false;
  if (started_ && !advance()) {
    done_ = true;
    return false;
  }
  started_ = true;
  out = current_;
  return true;
}

bool PartitionGenerator::advance() {
  const auto parts = static_cast<std::int64_t>(current_.size());
  std::int64_t tail = current_.back();  // sum of entries right of j
  for (std::int64_t j = parts - 2; j >= 0; --j) {
    const std::int64_t value = current_[static_cast<std::size_t>(j)];
    const std::int64_t slots = parts - 1 - j;
    const std::int64_t rest = tail + 1;
    const std::int64_t lowered = value - 1;
    if (lowered >= 1 && lowered * slots >= rest) {
      current_[static_cast<std::size_t>(j)] = lowered;
      std::int64_t remaining = rest;
      for (std::int64_t i = j + 1; i < parts; ++i) {
        const std::int64_t take = std::min(lowered, remaining);
        current_[static_cast<std::size_t>(i)] = take;
        remaining -= take;
      }
      return true;
    }
    tail += value;
  }
  return false;
}

BigInt partition_count(std::int64_t total, std::int64_t parts) {
  if (total < 0 || parts < 1) return 0;
  // p(n, <=k) equals the number of partitions of n into parts of size <= k.
  std::vector<BigInt> ways(static_cast<std::size_t>(total) + 1, BigInt(0));
  ways[0] = 1;
  for (std::int64_t size = 1; size <= std::min(parts, total); ++size) {
    for (std::int64_t n = size; n <= total; ++n) {
      ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - size)];
    }
  }
  return ways[static_cast<std::size_t>(total)];
}

UniformPartitionSampler::UniformPartitionSampler(std::int64_t total, std::int64_t parts)
    : total_(total), parts_(parts) {
  if (total < 1 || parts < 1) {
    throw Error(ErrorCode::kInvalidInput, "sampler needs total >= 1 and parts >= 1");
  }
  const auto width = static_cast<std::size_t>(total) + 1;
  bounded_.assign(static_cast<std::size_t>(parts) + 1, std::vector<BigInt>(width, BigInt(0)));
  bounded_[0][0] = 1;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(parts); ++k) {
    for (std::size_t n = 0; n < width; ++n) {
      bounded_[k][n] = bounded_[k - 1][n];
      if (n >= k) bounded_[k][n] += bounded_[k][n - k];
    }
  }
}

const BigInt& UniformPartitionSampler::population() const {
  return bounded_[static_cast<std::size_t>(parts_)][static_cast<std::size_t>(total_)];
}

std::vector<std::int64_t> UniformPartitionSampler::unrank(BigInt rank) const {
  if (rank < 0 || rank >= population()) {
    throw Error(ErrorCode::kInvalidInput, "partition rank out of range");
  }
  // Walk the recurrence q(n, k) = q(n - k, k) + q(n, k - 1) to collect the
  // parts of a partition with parts <= parts_, then conjugate.
  std::vector<std::int64_t> conjugate_parts;
  auto n = static_cast<std::size_t>(total_);
  auto k = static_cast<std::size_t>(parts_);
  while (n > 0) {
    const BigInt with_k = n >= k ? bounded_[k][n - k] : BigInt(0);
    if (rank < with_k) {
      conjugate_parts.push_back(static_cast<std::int64_t>(k));
      n -= k;
    } else {
      rank -= with_k;
      --k;
    }
  }
  std::vector<std::int64_t> result(static_cast<std::size_t>(parts_), 0);
  for (std::int64_t part : conjugate_parts) {
    for (std::int64_t i = 0; i < part; ++i) ++result[static_cast<std::size_t>(i)];
  }
  return result;
}

std::vector<std::int64_t> UniformPartitionSampler::sample(std::mt19937_64& rng) const {
  const BigInt& bound = population();
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt draw = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
      draw = (draw << 64) | BigInt(rng());
    }
    draw &= mask;
    if (draw < bound) return unrank(std::move(draw));
  }
}

}  // namespace speedrobust
