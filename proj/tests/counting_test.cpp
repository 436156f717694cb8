#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <type_traits>
#include <utility>

#include "christoffel/balance.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/counting.hpp"
#include "christoffel/errors.hpp"
#include "support/oracles.hpp"

using namespace christoffel;
using namespace christoffel::literals;

static_assert(std::is_same_v<decltype(count_balanced(1, 1)), std::int64_t>);
static_assert(std::is_same_v<decltype(count_period_factors(1, 1, 1)), std::int64_t>);
static_assert(std::is_same_v<decltype(count_heavy_factors(1, 1, 1)), std::int64_t>);
static_assert(std::is_same_v<decltype(PeriodClassParams::sigma_num), std::int64_t>);
static_assert(std::is_same_v<decltype(PeriodClassParams::sigma_den), std::int64_t>);

namespace {

// Periodic word w_{alpha,beta}^omega cut to `len` letters, built from the
// geometric oracle.
std::string periodic_prefix(std::int64_t alpha, std::int64_t beta, std::size_t len) {
  const std::string block = oracle::geometric_lower_christoffel(alpha, beta);
  std::string out;
  while (out.size() < len) out += block;
  return out.substr(0, len);
}

// Distinct length-n factors of w^omega with smallest period alpha + beta.
std::set<std::string> naive_period_factors(std::int64_t alpha, std::int64_t beta, std::size_t n) {
  const std::size_t p = static_cast<std::size_t>(alpha + beta);
  const std::string u = periodic_prefix(alpha, beta, n + p);
  std::set<std::string> out;
  for (std::size_t i = 0; i < p; ++i) {
    const std::string f = u.substr(i, n);
    if (n > 0 && oracle::smallest_period(f) == p) out.insert(f);
  }
  return out;
}

std::set<std::string> strs(const std::set<BinaryWord>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.str());
  return out;
}

}  // namespace

TEST(PeriodFactors, Examples) {
  EXPECT_EQ(count_period_factors(3, 2, 8), 5);
  EXPECT_EQ(count_period_factors(4, 3, 8), 4);
  EXPECT_EQ(count_period_factors(4, 2, 8), 0);
  EXPECT_EQ(count_period_factors(5, 3, 8), 2);
  // 00100100, 01001001, 10010010: all three have period 3.
  EXPECT_EQ(brute_period_factors(2, 1, 8).size(), 3U);
  EXPECT_EQ(count_period_factors(2, 1, 8), 3);
  EXPECT_EQ(brute_period_factors(3, 2, 8).size(), 5U);
  // (01)^omega: every length-3 factor has period 2, so both survive.
  EXPECT_EQ(strs(brute_period_factors(1, 1, 3)), (std::set<std::string>{"010", "101"}));
  EXPECT_EQ(count_period_factors(1, 1, 3), 2);
  EXPECT_TRUE(brute_period_factors(2, 1, 0).empty());
}

TEST(PrefixHeights, Examples) {
  EXPECT_EQ(prefix_height_lower(7, 4, 11), 4);
  EXPECT_EQ(prefix_height_upper(7, 4, 11), 4);
  EXPECT_EQ(prefix_height_lower(7, 4, 3), 1);
  EXPECT_EQ(prefix_height_upper(7, 4, 3), 2);
  EXPECT_EQ(prefix_height_lower(2, 1, 0), 0);
  EXPECT_EQ(prefix_height_upper(2, 1, 0), 0);
}

TEST(PrefixHeights, MatchPeriodicWords) {
  for (std::int64_t alpha = 1; alpha <= 11; ++alpha) {
    for (std::int64_t beta = 1; alpha + beta <= 12; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const std::string lower = periodic_prefix(alpha, beta, 40);
      std::string block = oracle::reversed(oracle::geometric_lower_christoffel(alpha, beta));
      std::string upper;
      while (upper.size() < 40) upper += block;
      for (std::size_t k = 0; k <= 40; ++k) {
        ASSERT_EQ(prefix_height_lower(alpha, beta, static_cast<std::int64_t>(k)),
                  oracle::ones(lower.substr(0, k)));
        ASSERT_EQ(prefix_height_upper(alpha, beta, static_cast<std::int64_t>(k)),
                  oracle::ones(upper.substr(0, k)));
      }
    }
  }
}

TEST(HeavyOccurrences, Examples) {
  EXPECT_EQ(count_heavy_occurrences(2, 1, 8), 2);
  EXPECT_EQ(count_heavy_occurrences(3, 2, 0), 0);
  EXPECT_EQ(count_heavy_occurrences(5, 3, 8), 0);
  EXPECT_THROW(count_heavy_occurrences(4, 2, 3), PreconditionError);
}

TEST(HeavyFactors, Examples) {
  EXPECT_EQ(count_heavy_factors(2, 1, 8), 2);
  EXPECT_EQ(count_heavy_factors(3, 2, 8), 1);
  EXPECT_EQ(count_heavy_factors(4, 3, 8), 2);
  EXPECT_EQ(count_heavy_factors(5, 2, 8), 2);
  EXPECT_EQ(count_heavy_factors(5, 3, 8), 0);
  EXPECT_EQ(count_heavy_factors(4, 2, 8), 0);
  EXPECT_EQ(strs(brute_heavy_factors(2, 1, 8)), (std::set<std::string>{"01001001", "10010010"}));
  EXPECT_TRUE(brute_heavy_factors(5, 3, 8).empty());
  EXPECT_EQ(brute_heavy_factors(3, 2, 8).size(), 1U);
  EXPECT_THROW(brute_heavy_factors(2, 2, 8), PreconditionError);
}

TEST(OracleGrid, PeriodAndHeavyCounts) {
  for (std::int64_t alpha = 1; alpha <= 11; ++alpha) {
    for (std::int64_t beta = 1; alpha + beta <= 12; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const std::int64_t p = alpha + beta;
      for (std::int64_t n = 0; n <= 36; ++n) {
        const auto naive = naive_period_factors(alpha, beta, static_cast<std::size_t>(n));
        const auto brute = strs(brute_period_factors(alpha, beta, n));
        ASSERT_EQ(brute, naive) << alpha << "," << beta << "," << n;
        const std::int64_t big_n = count_period_factors(alpha, beta, n);
        ASSERT_EQ(big_n, static_cast<std::int64_t>(naive.size())) << alpha << "," << beta << "," << n;

        const std::int64_t lo = (beta * n) / p;
        const std::int64_t hi = (beta * n + p - 1) / p;
        std::size_t heavy = 0;
        for (const auto& f : naive) heavy += (hi != lo && oracle::ones(f) == hi) ? 1 : 0;
        const std::int64_t big_h = count_heavy_factors(alpha, beta, n);
        ASSERT_EQ(big_h, static_cast<std::int64_t>(heavy)) << alpha << "," << beta << "," << n;
        ASSERT_EQ(static_cast<std::int64_t>(brute_heavy_factors(alpha, beta, n).size()), big_h);
        ASSERT_LE(big_h, big_n);
      }
    }
  }
}

TEST(OracleGrid, NonCoprimeCountsAreZero) {
  for (std::int64_t alpha = 1; alpha <= 11; ++alpha) {
    for (std::int64_t beta = 1; alpha + beta <= 12; ++beta) {
      if (std::gcd(alpha, beta) == 1) continue;
      for (std::int64_t n = 0; n <= 36; ++n) {
        ASSERT_EQ(count_period_factors(alpha, beta, n), 0);
        ASSERT_EQ(count_heavy_factors(alpha, beta, n), 0);
        ASSERT_TRUE(brute_period_factors(alpha, beta, n).empty());
      }
    }
  }
}

TEST(OracleGrid, OccurrenceCountInEveryWindow) {
  for (std::int64_t alpha = 1; alpha <= 11; ++alpha) {
    for (std::int64_t beta = 1; alpha + beta <= 12; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const std::size_t p = static_cast<std::size_t>(alpha + beta);
      for (std::size_t n = 0; n <= 36; ++n) {
        const std::int64_t lo = (beta * static_cast<std::int64_t>(n)) / static_cast<std::int64_t>(p);
        const std::int64_t hi = (beta * static_cast<std::int64_t>(n) + static_cast<std::int64_t>(p) - 1) /
                                static_cast<std::int64_t>(p);
        const std::string stream = periodic_prefix(alpha, beta, 2 * p + n);
        for (std::size_t start = 0; start < p; ++start) {
          const std::string u = stream.substr(start, p + n - 1 + (n == 0 ? 1 : 0));
          std::int64_t occurrences = 0;
          for (std::size_t i = 0; i < p; ++i) {
            const int h = oracle::ones(u.substr(i, n));
            if (hi != lo && h == hi) ++occurrences;
          }
          ASSERT_EQ(occurrences, count_heavy_occurrences(alpha, beta, static_cast<std::int64_t>(n)))
              << alpha << "," << beta << "," << n << " start " << start;
        }
      }
    }
  }
}

TEST(Balanced, Examples) {
  EXPECT_EQ(count_balanced(5, 3), 12);
  EXPECT_EQ(count_balanced(6, 0), 1);
  EXPECT_EQ(count_balanced(0, 0), 1);
  EXPECT_EQ(count_balanced(1, 1), 2);
  EXPECT_EQ(brute_count_balanced(5, 3), 12);
  EXPECT_EQ(brute_count_balanced(4, 2), 8);
  EXPECT_EQ(brute_count_balanced(0, 3), 1);
  EXPECT_EQ(brute_count_balanced(0, 0), 1);
  EXPECT_THROW(brute_count_balanced(15, 6), PreconditionError);
  EXPECT_EQ(brute_count_balanced(15, 6, 21), count_balanced(15, 6));
}

TEST(Balanced, AuditTermsForFiveThree) {
  const auto report = count_balanced_report(5, 3);
  EXPECT_EQ(report.total, 12);
  std::map<std::pair<std::int64_t, std::int64_t>, CountTerm> heavy;
  std::map<std::pair<std::int64_t, std::int64_t>, CountTerm> light;
  std::int64_t sum = 0;
  for (const auto& t : report.terms) {
    (t.kind == TermKind::kHeavy ? heavy : light)[{t.alpha, t.beta}] = t;
    sum += t.contribution;
  }
  EXPECT_EQ(sum, 12);
  EXPECT_EQ(heavy.at({2, 1}).h_value, 2);
  EXPECT_EQ(heavy.at({4, 2}).h_value, 0);
  EXPECT_EQ(heavy.at({5, 2}).h_value, 2);
  EXPECT_EQ(heavy.at({5, 3}).h_value, 0);
  EXPECT_EQ(light.at({3, 2}).n_value, 5);
  EXPECT_EQ(light.at({3, 2}).contribution, 4);
  EXPECT_EQ(light.at({4, 3}).n_value, 4);
  EXPECT_EQ(light.at({4, 3}).contribution, 2);
  EXPECT_EQ(light.at({5, 3}).n_value, 2);
  EXPECT_EQ(light.at({5, 3}).contribution, 2);
}

TEST(Balanced, FormulaMatchesBruteForce) {
  for (std::int64_t a = 0; a <= 14; ++a) {
    for (std::int64_t b = 0; a + b <= 14; ++b) {
      ASSERT_EQ(count_balanced(a, b), brute_count_balanced(a, b)) << a << "," << b;
    }
  }
}

TEST(Balanced, EveryWordLandsInOneTerm) {
  // A balanced word with smallest period p is a factor of the periodic word
  // whose block is its own length-p prefix; the block's Parikh vector names
  // the term it is counted in.
  for (std::int64_t a = 1; a <= 13; ++a) {
    for (std::int64_t b = 1; a + b <= 14; ++b) {
      std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> buckets;
      for (const auto& w : enumerate_balanced(a, b)) {
        const std::size_t p = smallest_period(w);
        const auto pv = parikh(w.substr(0, p));
        ASSERT_EQ(std::gcd(pv.zeros, pv.ones), 1) << w;
        ASSERT_TRUE(is_circularly_balanced(w.substr(0, p))) << w;
        ++buckets[{pv.zeros, pv.ones}];
      }
      std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> terms;
      for (const auto& t : count_balanced_report(a, b).terms) {
        if (t.contribution != 0) terms[{t.alpha, t.beta}] += t.contribution;
      }
      ASSERT_EQ(buckets, terms) << a << "," << b;
    }
  }
}
