#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "speedrobust/sand.hpp"
#include "speedrobust/second_stage.hpp"

namespace speedrobust {
namespace {

std::vector<Rational> ints(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

TEST(RhoBar, Examples) {
  EXPECT_EQ(rho_bar(1, 1), Rational(1));
  EXPECT_EQ(rho_bar(1, 7), Rational(1));
  EXPECT_EQ(rho_bar(2, 4), Rational(16, 15));
  EXPECT_EQ(rho_bar(2, 2), Rational(4, 3));
}

TEST(RhoBar, IncreasesTowardLimitFromBelow) {
  // e / (e - 1) > 1.58197; a rational just below it is a safe exact ceiling.
  const Rational limit(158197, 100000);
  Rational previous(1);
  for (std::int64_t m : {10, 100, 1000}) {
    const Rational value = rho_bar(m, m);
    EXPECT_GT(value, previous) << m;
    EXPECT_LT(value, limit) << m;
    previous = value;
  }
}

TEST(RhoBar, BetweenOneAndMachineCount) {
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t b = 1; b <= 8; ++b) {
      const Rational value = rho_bar(m, b);
      EXPECT_GE(value, Rational(1));
      EXPECT_LE(value, Rational(m));
    }
  }
}

TEST(SandSequence, PrefixSumLemma) {
  for (std::int64_t m = 2; m <= 20; ++m) {
    for (std::int64_t b = 1; b <= 20; ++b) {
      const SandSequence seq = SandSequence::make(m, b);
      BigInt prefix = 0;
      for (std::size_t k = 0; k < seq.t.size(); ++k) {
        prefix += seq.t[k];
        ASSERT_EQ(prefix, seq.upper - BigInt(m - 1) * seq.t[k]) << "m=" << m << " b=" << b;
      }
      EXPECT_EQ(prefix, seq.lower);
    }
  }
}

TEST(SandBags, Examples) {
  EXPECT_EQ(sand_bags(2, 4, Rational(15)), BagProfile(ints({8, 4, 2, 1})));
  EXPECT_EQ(sand_bags(2, 4, Rational(30)), BagProfile(ints({16, 8, 4, 2})));
  const Rational total(7, 3);
  EXPECT_EQ(sand_bags(1, 3, total), BagProfile({total, Rational(0), Rational(0)}));
}

TEST(SandBags, SumToTotalAndMeetGreedyConditionWithEquality) {
  for (std::int64_t m = 1; m <= 7; ++m) {
    for (std::int64_t b = m; b <= 2 * m + 1; ++b) {
      const Rational total(37, 5);
      const BagProfile bags = sand_bags(m, b, total);
      EXPECT_EQ(bags.total(), total);
      const Rational rho = rho_bar(m, b);
      Rational prefix;
      for (std::size_t k = 0; k < bags.size(); ++k) {
        EXPECT_EQ(bags[k], (rho * total - prefix) / Rational(m)) << "m=" << m << " b=" << b;
        prefix += bags[k];
      }
    }
  }
}

TEST(AdversaryConfigs, Examples) {
  const auto two_four = adversary_configs(2, 4);
  ASSERT_EQ(two_four.size(), 4u);
  EXPECT_EQ(two_four[0], SpeedProfile(ints({8, 8})));
  EXPECT_EQ(two_four[1], SpeedProfile(ints({12, 4})));
  EXPECT_EQ(two_four[2], SpeedProfile(ints({14, 2})));
  EXPECT_EQ(two_four[3], SpeedProfile(ints({15, 1})));
  const auto three_two = adversary_configs(3, 2);
  ASSERT_EQ(three_two.size(), 2u);
  EXPECT_EQ(three_two[0], SpeedProfile(ints({3, 3, 3})));
  EXPECT_EQ(three_two[1], SpeedProfile(ints({5, 2, 2})));
  const auto single = adversary_configs(1, 3);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], SpeedProfile(ints({1})));
}

TEST(AdversaryConfigs, SumToUpperWithDominantFastMachine) {
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (std::int64_t b = 1; b <= 8; ++b) {
      const SandSequence seq = SandSequence::make(m, b);
      const auto configs = adversary_configs(m, b);
      ASSERT_EQ(configs.size(), static_cast<std::size_t>(b));
      for (std::size_t k = 0; k < configs.size(); ++k) {
        EXPECT_EQ(configs[k].total(), Rational(seq.upper));
        EXPECT_GE(configs[k][0], Rational(seq.t[k]));
      }
    }
  }
}

TEST(LowerBoundProbe, Examples) {
  EXPECT_EQ(lower_bound_probe(2, 2, BagProfile(ints({2, 2}))), Rational(4, 3));
  const BagProfile scaled({Rational(128, 15), Rational(64, 15), Rational(32, 15), Rational(16, 15)});
  EXPECT_EQ(lower_bound_probe(2, 4, scaled), Rational(16, 15));
  EXPECT_EQ(lower_bound_probe(2, 2, BagProfile(ints({4, 0}))), Rational(2));
}

TEST(LowerBoundProbe, ProbeOfSandBagsIsNaiveWorstCase) {
  for (auto [m, b] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 3}, {3, 4}}) {
    const SandSequence seq = SandSequence::make(m, b);
    const BagProfile bags = sand_bags(m, b, Rational(seq.upper));
    Rational naive;
    for (const auto& config : adversary_configs(m, b)) {
      naive = max(naive, testing::naive_optimum(bags.sizes(), config.speeds()));
    }
    EXPECT_EQ(lower_bound_probe(m, b, bags), naive);
    EXPECT_GE(naive, rho_bar(m, b));
  }
}

TEST(LowerBoundProbe, RejectsWrongScale) {
  try {
    lower_bound_probe(2, 2, BagProfile(ints({2, 1})));
    FAIL() << "expected scale-mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleMismatch);
  }
}

TEST(LowerBoundCertificate, SmallestCase) {
  const LowerBoundCertificate cert = lower_bound_certificate(2, 2);
  // Profiles of 4 into <= 2 parts: (4,0), (3,1), (2,2).
  EXPECT_EQ(cert.profiles, 3u);
  EXPECT_EQ(cert.minimum, Rational(4, 3));
  EXPECT_EQ(cert.best_profile, BagProfile(ints({2, 2})));
}

TEST(SandUpper, GreedySucceedsOnConfigsAndRandomProfiles) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> draw(0, 50);
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t b = m; b <= 2 * m; ++b) {
      const SandSequence seq = SandSequence::make(m, b);
      const Rational total(seq.upper);
      const BagProfile bags = sand_bags(m, b, total);
      const Rational rho = rho_bar(m, b);
      for (const auto& config : adversary_configs(m, b)) {
        EXPECT_TRUE(greedy_assignment(bags, config, rho).success);
      }
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> speeds;
        Rational raw_total;
        while (raw_total.is_zero()) {
          speeds.clear();
          for (std::int64_t i = 0; i < m; ++i) speeds.emplace_back(draw(rng));
          raw_total = Rational();
          for (const auto& s : speeds) raw_total += s;
        }
        for (auto& s : speeds) s = s * total / raw_total;
        EXPECT_TRUE(greedy_assignment(bags, SpeedProfile(speeds), rho).success);
      }
    }
  }
}

// With fewer bags than machines the bound rho_bar(b, b) is only guaranteed
// against the b fastest machines; check it there.
TEST(SandBags, FewerBagsThanMachinesReduceToBFastest) {
  EXPECT_EQ(effective_machines(5, 3), 3);
  EXPECT_EQ(effective_machines(3, 5), 3);
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> draw(1, 40);
  for (std::int64_t b = 1; b <= 4; ++b) {
    for (std::int64_t m = b + 1; m <= b + 3; ++m) {
      const BagProfile bags = sand_bags(m, b, Rational(60));
      EXPECT_EQ(bags, sand_bags(b, b, Rational(60)));
      const Rational rho = rho_bar(b, b);
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> fastest;
        Rational raw_total;
        for (std::int64_t i = 0; i < b; ++i) {
          fastest.emplace_back(draw(rng));
          raw_total += fastest.back();
        }
        for (auto& s : fastest) s = s * Rational(60) / raw_total;
        EXPECT_TRUE(greedy_assignment(bags, SpeedProfile(fastest), rho).success);
      }
    }
  }
}

}  // namespace
}  // namespace speedrobust
