#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <string>

#include "christoffel/arith.hpp"
#include "christoffel/balance.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"
#include "support/oracles.hpp"

using namespace christoffel;
using namespace christoffel::literals;

TEST(Arith, ModInverseAndPhi) {
  EXPECT_EQ(mod_inverse(4, 11), 3);
  EXPECT_EQ(mod_inverse(7, 11), 8);
  EXPECT_EQ(mod_inverse(5, 1), 0);
  EXPECT_THROW(mod_inverse(2, 4), PreconditionError);
  for (std::int64_t n = 1; n <= 200; ++n) EXPECT_EQ(euler_phi(n), oracle::totient(n)) << n;
  EXPECT_THROW(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), PreconditionError);
  EXPECT_EQ(floor_div(7, 3), 2);
  EXPECT_EQ(ceil_div(7, 3), 3);
  EXPECT_EQ(ceil_div(6, 3), 2);
}

TEST(LowerChristoffel, Examples) {
  EXPECT_EQ(lower_christoffel(7, 4), "00100100101"_w);
  EXPECT_EQ(lower_christoffel(1, 0), "0"_w);
  EXPECT_EQ(lower_christoffel(4, 2), "001001"_w);
  EXPECT_EQ(lower_christoffel(0, 3), "111"_w);
  EXPECT_EQ(lower_christoffel(3, 0), "000"_w);
  EXPECT_THROW(lower_christoffel(0, 0), PreconditionError);
  EXPECT_THROW(lower_christoffel(-1, 2), PreconditionError);
}

TEST(LowerChristoffel, MatchesGeometricPath) {
  for (std::int64_t a = 0; a <= 30; ++a) {
    for (std::int64_t b = 0; b <= 30; ++b) {
      if (a == 0 && b == 0) continue;
      ASSERT_EQ(lower_christoffel(a, b).str(), oracle::geometric_lower_christoffel(a, b))
          << a << "," << b;
    }
  }
}

TEST(LowerChristoffel, PowerOfCoprimeWord) {
  for (std::int64_t a = 1; a <= 20; ++a) {
    for (std::int64_t b = 1; b <= 20; ++b) {
      const std::int64_t g = std::gcd(a, b);
      ASSERT_EQ(lower_christoffel(a, b), lower_christoffel(a / g, b / g) * static_cast<std::size_t>(g));
    }
  }
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(lower_christoffel_arithmetic(7, 4), "00100100101"_w);
  EXPECT_EQ(lower_christoffel_arithmetic(1, 1), "01"_w);
  EXPECT_EQ(lower_christoffel_arithmetic(5, 3), "00100101"_w);
  EXPECT_THROW(lower_christoffel_arithmetic(4, 2), PreconditionError);
  EXPECT_THROW(lower_christoffel_arithmetic(0, 1), PreconditionError);
}

TEST(Arithmetic, AgreesWithGeometric) {
  for (std::int64_t a = 1; a < 60; ++a) {
    for (std::int64_t b = 1; a + b <= 60; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ASSERT_EQ(lower_christoffel_arithmetic(a, b), lower_christoffel(a, b)) << a << "," << b;
    }
  }
}

TEST(UpperChristoffel, Examples) {
  EXPECT_EQ(upper_christoffel(7, 4), "10100100100"_w);
  EXPECT_EQ(upper_christoffel(0, 1), "1"_w);
  EXPECT_EQ(upper_christoffel(5, 3), "10100100"_w);
  EXPECT_TRUE(is_upper_christoffel("10100100"_w));
  EXPECT_TRUE(is_lower_christoffel("00100101"_w));
  EXPECT_FALSE(is_lower_christoffel("01000101"_w));
  EXPECT_FALSE(is_lower_christoffel(""_w));
}

TEST(LowerChristoffel, BalancedUnborderedLyndon) {
  for (std::int64_t a = 1; a < 40; ++a) {
    for (std::int64_t b = 1; a + b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const BinaryWord w = lower_christoffel(a, b);
      ASSERT_TRUE(is_balanced(w));
      ASSERT_TRUE(is_unbordered(w));
      ASSERT_TRUE(is_lyndon(w));
    }
  }
}

TEST(Slope, Reduced) {
  EXPECT_EQ(slope_of({4, 2}).str(), "1/2");
  EXPECT_EQ(slope_of({7, 4}).str(), "4/7");
  EXPECT_TRUE(slope_of({0, 3}).infinite());
  EXPECT_THROW(slope_of({0, 0}), PreconditionError);
}

TEST(CentralWord, Examples) {
  EXPECT_EQ(central_word(7, 4), "010010010"_w);
  EXPECT_EQ(central_word(1, 1), ""_w);
  EXPECT_EQ(central_word(2, 1), "0"_w);
  EXPECT_THROW(central_word(4, 2), PreconditionError);
  EXPECT_THROW(central_word(1, 0), PreconditionError);
}

TEST(IsCentral, Examples) {
  EXPECT_TRUE(is_central("010010"_w));
  EXPECT_TRUE(is_central("010010010"_w));
  EXPECT_FALSE(is_central("001"_w));
  EXPECT_TRUE(is_central(""_w));
  EXPECT_TRUE(is_central("000"_w));
}

TEST(IsCentral, ExactlyTheInteriorsOfPrimitiveChristoffelWords) {
  std::set<std::string> interiors;
  for (std::size_t n = 2; n <= 14; ++n) {
    for (const auto& w : primitive_lower_christoffel_words(n)) {
      interiors.insert(w.substr(1, n - 2).str());
    }
  }
  oracle::for_each_word_up_to(12, [&](const std::string& s) {
    ASSERT_EQ(is_central(BinaryWord::parse(s)), interiors.count(s) == 1) << s;
  });
}

TEST(CentralDecompose, Examples) {
  EXPECT_EQ(std::get<PalindromePair>(central_decompose("010010"_w)),
            (PalindromePair{"010"_w, "0"_w}));
  EXPECT_EQ(std::get<PowerOfLetter>(central_decompose("000"_w)), (PowerOfLetter{0, 3}));
  EXPECT_EQ(std::get<PalindromePair>(central_decompose("010010010"_w)),
            (PalindromePair{"010010"_w, "0"_w}));
  EXPECT_EQ(std::get<PowerOfLetter>(central_decompose(""_w)), (PowerOfLetter{0, 0}));
  EXPECT_THROW(central_decompose("001"_w), PreconditionError);
}

TEST(CentralDecompose, RoundTripsUpToLength14) {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 16; ++n) {
    for (const auto& w : primitive_lower_christoffel_words(n)) {
      const BinaryWord c = w.substr(1, n - 2);
      const auto d = central_decompose(c);
      ++seen;
      if (const auto* pl = std::get_if<PowerOfLetter>(&d)) {
        ASSERT_EQ(BinaryWord::power_of_letter(pl->letter, pl->count), c);
        continue;
      }
      const auto& pq = std::get<PalindromePair>(d);
      ASSERT_EQ(pq.p + "01"_w + pq.q, c);
      ASSERT_EQ(pq.q + "10"_w + pq.p, c);
      ASSERT_TRUE(is_palindrome(pq.p) && is_palindrome(pq.q));
      ASSERT_TRUE(is_central(pq.p) && is_central(pq.q));
      ASSERT_TRUE(has_period(c, pq.p.size() + 2) && has_period(c, pq.q.size() + 2));
      ASSERT_EQ(std::gcd(pq.p.size() + 2, pq.q.size() + 2), 1U);
    }
  }
  EXPECT_GT(seen, 0U);
}

TEST(PalindromicFactorization, Examples) {
  auto f = palindromic_factorization(7, 4);
  EXPECT_EQ(f.left, "00100100"_w);
  EXPECT_EQ(f.right, "101"_w);
  f = palindromic_factorization(1, 1);
  EXPECT_EQ(f.left, "0"_w);
  EXPECT_EQ(f.right, "1"_w);
  f = palindromic_factorization(2, 1);
  EXPECT_EQ(f.left, "00"_w);
  EXPECT_EQ(f.right, "1"_w);
  EXPECT_THROW(palindromic_factorization(4, 2), PreconditionError);
}

TEST(StandardFactorization, Examples) {
  auto f = standard_factorization(7, 4);
  EXPECT_EQ(f.left, "001"_w);
  EXPECT_EQ(f.right, "00100101"_w);
  f = standard_factorization(1, 1);
  EXPECT_EQ(f.left, "0"_w);
  EXPECT_EQ(f.right, "1"_w);
  f = standard_factorization(2, 1);
  EXPECT_EQ(f.left, "0"_w);
  EXPECT_EQ(f.right, "01"_w);
  EXPECT_THROW(standard_factorization(1, 0), PreconditionError);
  EXPECT_THROW(standard_factorization(2, 2), PreconditionError);
}

TEST(PeriodInverses, Examples) {
  auto p = period_inverses(7, 4);
  EXPECT_EQ(p.a_inv, 8);
  EXPECT_EQ(p.b_inv, 3);
  p = period_inverses(1, 1);
  EXPECT_EQ(p.a_inv, 1);
  EXPECT_EQ(p.b_inv, 1);
  p = period_inverses(5, 3);
  EXPECT_EQ(p.a_inv, 5);
  EXPECT_EQ(p.b_inv, 3);
  EXPECT_THROW(period_inverses(2, 4), PreconditionError);
}

TEST(Factorizations, PropertiesForAllCoprimePairs) {
  for (std::int64_t a = 1; a < 40; ++a) {
    for (std::int64_t b = 1; a + b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const BinaryWord w = lower_christoffel(a, b);
      const auto inv = period_inverses(a, b);
      ASSERT_EQ((a * inv.a_inv) % (a + b), 1 % (a + b));
      ASSERT_EQ((b * inv.b_inv) % (a + b), 1 % (a + b));
      ASSERT_EQ(inv.a_inv + inv.b_inv, a + b);

      const auto pal = palindromic_factorization(a, b);
      ASSERT_EQ(pal.joined(), w);
      ASSERT_TRUE(is_palindrome(pal.left) && is_palindrome(pal.right));
      ASSERT_EQ(pal.right + pal.left, upper_christoffel(a, b));
      ASSERT_EQ(static_cast<std::int64_t>(pal.left.size()), inv.a_inv);
      ASSERT_EQ(static_cast<std::int64_t>(pal.right.size()), inv.b_inv);

      const auto st = standard_factorization(a, b);
      ASSERT_EQ(st.joined(), w);
      ASSERT_TRUE(is_lower_christoffel(st.left) && is_primitive(st.left));
      ASSERT_TRUE(is_lower_christoffel(st.right) && is_primitive(st.right));
      ASSERT_EQ(st.right.str(), oracle::least_proper_suffix(w.str()));

      // The central word's periods are the two inverses.
      if (a + b > 2) {
        const BinaryWord c = central_word(a, b);
        ASSERT_TRUE(has_period(c, static_cast<std::size_t>(inv.a_inv)));
        ASSERT_TRUE(has_period(c, static_cast<std::size_t>(inv.b_inv)));
      }
    }
  }
}

TEST(PrimitiveWords, CountIsTotient) {
  EXPECT_EQ(primitive_lower_christoffel_words(1), (std::vector<BinaryWord>{"0"_w, "1"_w}));
  for (std::size_t n = 2; n <= 30; ++n) {
    const auto words = primitive_lower_christoffel_words(n);
    ASSERT_EQ(static_cast<std::int64_t>(words.size()), oracle::totient(static_cast<std::int64_t>(n)));
    ASSERT_TRUE(std::is_sorted(words.begin(), words.end()));
    for (const auto& w : words) ASSERT_TRUE(is_lower_christoffel(w) && is_primitive(w));
  }
}

TEST(Matrix, Table) {
  const auto m = christoffel_matrix(7, 4);
  const std::vector<std::string> expected = {
      "00100100101", "00100101001", "00101001001", "01001001001",
      "01001001010", "01001010010", "01010010010", "10010010010",
      "10010010100", "10010100100", "10100100100"};
  ASSERT_EQ(m.order(), 11U);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(m.row(i).str(), expected[i]);
  std::string text;
  for (const auto& row : expected) text += row + "\n";
  EXPECT_EQ(m.str(), text);
}

TEST(Matrix, SmallCases) {
  const auto m = christoffel_matrix(1, 1);
  EXPECT_EQ(m.rows(), (std::vector<BinaryWord>{"01"_w, "10"_w}));
  const auto n = christoffel_matrix(4, 2);
  EXPECT_EQ(n.order(), 6U);
  EXPECT_EQ(std::set<BinaryWord>(n.rows().begin(), n.rows().end()).size(), 3U);
  EXPECT_THROW(christoffel_matrix(0, 3), PreconditionError);
}

TEST(Matrix, RowsAreSortedConjugatesDifferingByOneSwap) {
  for (std::int64_t a = 1; a <= 14; ++a) {
    for (std::int64_t b = 1; b <= 14; ++b) {
      const auto m = christoffel_matrix(a, b);
      const BinaryWord w = lower_christoffel(a, b);
      ASSERT_EQ(m.row(0), w);
      ASSERT_EQ(m.row(m.order() - 1), upper_christoffel(a, b));
      const auto conj = conjugates(w);
      ASSERT_EQ(std::set<BinaryWord>(m.rows().begin(), m.rows().end()),
                std::set<BinaryWord>(conj.begin(), conj.end()));
      const std::set<BinaryWord> distinct(m.rows().begin(), m.rows().end());
      ASSERT_EQ(distinct.size() == m.order(), std::gcd(a, b) == 1);
      // For a power the rows repeat in blocks, so the one-swap step is a
      // coprime-only statement.
      if (std::gcd(a, b) != 1) continue;
      for (std::size_t r = 0; r + 1 < m.order(); ++r) {
        const std::string x = m.row(r).str();
        const std::string y = m.row(r + 1).str();
        std::size_t diffs = 0;
        std::size_t first = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (x[j] != y[j]) {
            if (diffs == 0) first = j;
            ++diffs;
          }
        }
        ASSERT_EQ(diffs, 2U) << a << "," << b << " row " << r;
        ASSERT_EQ(x.substr(first, 2), "01");
        ASSERT_EQ(y.substr(first, 2), "10");
      }
    }
  }
}
