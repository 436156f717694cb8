#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "christoffel/word.hpp"

namespace christoffel {

/// Slope of the lattice endpoint (a, b): b/a in lowest terms, or infinite
/// when a = 0.
struct Slope {
  ParikhVector endpoint;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  bool infinite() const { return denominator == 0; }
  std::string str() const;
};

Slope slope_of(const ParikhVector& endpoint);

/// Lower Christoffel word w_{a,b}: the lattice path from (0,0) to (a,b)
/// closest to the segment from below. For g = gcd(a,b) > 1 it is the g-th
/// power of w_{a/g,b/g}; 0^a and 1^b are the degenerate slopes.
BinaryWord lower_christoffel(std::int64_t a, std::int64_t b);

/// Same word for coprime a, b >= 1, built by merging the positive multiples
/// of a (written 1) and of b (written 0) below ab, then bracketing with a
/// leading 0 and a trailing 1.
BinaryWord lower_christoffel_arithmetic(std::int64_t a, std::int64_t b);

/// W_{a,b}, the reversal of w_{a,b}.
BinaryWord upper_christoffel(std::int64_t a, std::int64_t b);

/// True iff w = lower_christoffel(parikh(w)); false for the empty word.
bool is_lower_christoffel(const BinaryWord& w);
bool is_upper_christoffel(const BinaryWord& w);

/// The phi(n) primitive lower Christoffel words of length n (both letters
/// when n = 1), in lexicographic order.
std::vector<BinaryWord> primitive_lower_christoffel_words(std::size_t length);

/// C such that w_{a,b} = 0 C 1, for coprime a, b with a + b >= 2.
BinaryWord central_word(std::int64_t a, std::int64_t b);

/// True iff w has coprime periods p, q with p + q = |w| + 2. Periods longer
/// than the word hold vacuously, so the empty word is central via p = q = 1.
bool is_central(const BinaryWord& w);

struct PowerOfLetter {
  Letter letter = 0;
  std::size_t count = 0;

  friend bool operator==(const PowerOfLetter&, const PowerOfLetter&) = default;
};

// C = P 01 Q = Q 10 P with P, Q palindromes.
struct PalindromePair {
  BinaryWord p;
  BinaryWord q;

  friend bool operator==(const PalindromePair&, const PalindromePair&) = default;
};

using CentralDecomposition = std::variant<PowerOfLetter, PalindromePair>;

/// Splits a central word either as a power of one letter (the empty word
/// reports as 0^0) or as the unique palindrome pair. Non-central input is a
/// PreconditionError.
CentralDecomposition central_decompose(const BinaryWord& central);

enum class FactorizationKind { kPalindromic, kStandard };

struct Factorization {
  BinaryWord left;
  BinaryWord right;
  FactorizationKind kind = FactorizationKind::kPalindromic;

  BinaryWord joined() const { return left + right; }
};

/// w_{a,b} = U V with both parts palindromes, |U| = a', |V| = b'.
Factorization palindromic_factorization(std::int64_t a, std::int64_t b);

/// w_{a,b} = u v with v the lexicographically least proper suffix; both
/// parts are primitive lower Christoffel words.
Factorization standard_factorization(std::int64_t a, std::int64_t b);

struct PeriodInverses {
  std::int64_t a_inv = 0;
  std::int64_t b_inv = 0;
};

/// Inverses of a and b modulo a + b, taken in [1, a + b - 1].
PeriodInverses period_inverses(std::int64_t a, std::int64_t b);

class ChristoffelMatrix {
 public:
  ChristoffelMatrix(std::int64_t a, std::int64_t b, std::vector<BinaryWord> rows)
      : a_(a), b_(b), rows_(std::move(rows)) {}

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::size_t order() const { return rows_.size(); }
  const std::vector<BinaryWord>& rows() const { return rows_; }
  const BinaryWord& row(std::size_t i) const { return rows_.at(i); }

  // n lines of n characters, each terminated by '\n'.
  std::string str() const;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::vector<BinaryWord> rows_;
};

/// Builds A_{a,b} column by column (first column 0^a 1^b, each next column
/// the previous one with the block of ones shifted up by b, modulo a + b),
/// then checks the rows against the sorted rotations of w_{a,b}. A mismatch
/// throws InternalError.
ChristoffelMatrix christoffel_matrix(std::int64_t a, std::int64_t b);

}  // namespace christoffel
