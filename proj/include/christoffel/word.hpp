#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace christoffel {

using Letter = std::uint8_t;

/// A finite word over {0, 1}, stored as packed bits.
///
/// Equality, ordering and hashing depend on content only. Ordering is the
/// lexicographic order with 0 < 1, where a proper prefix sorts before its
/// extensions. Element access through operator[] and at() is 0-based; the
/// free function factor() takes the 1-based w[i..j] form.
class BinaryWord {
 public:
  BinaryWord() = default;
  BinaryWord(std::initializer_list<int> letters);

  /// Parses the canonical text form: a string of '0' and '1', with the empty
  /// string denoting the empty word. Any other character is a
  /// PreconditionError.
  static BinaryWord parse(std::string_view text);

  static BinaryWord power_of_letter(Letter letter, std::size_t count);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((blocks_[i / kBits] >> (kBits - 1 - i % kBits)) & 1U);
  }
  Letter at(std::size_t i) const;
  Letter front() const { return at(0); }
  Letter back() const { return at(size_ - 1); }

  void push_back(Letter letter);
  void pop_back();

  /// 0-based substring [pos, pos + len).
  BinaryWord substr(std::size_t pos, std::size_t len) const;

  BinaryWord& operator+=(const BinaryWord& other);
  friend BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) {
    lhs += rhs;
    return lhs;
  }

  std::size_t count_ones() const;
  std::size_t count_zeros() const { return size_ - count_ones(); }

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const BinaryWord& lhs, const BinaryWord& rhs) {
    return lhs.size_ == rhs.size_ && lhs.blocks_ == rhs.blocks_;
  }
  friend std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs);

 private:
  static constexpr std::size_t kBits = 64;

  // Letter i lives at bit (63 - i % 64) of blocks_[i / 64], so numeric block
  // comparison agrees with lexicographic order. Bits past size_ are zero.
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

BinaryWord operator*(const BinaryWord& w, std::size_t times);

struct ParikhVector {
  std::int64_t zeros = 0;
  std::int64_t ones = 0;

  std::int64_t length() const { return zeros + ones; }
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const ParikhVector& p);

ParikhVector parikh(const BinaryWord& w);

// w[i..j] with 1 <= i <= j <= |w|; anything else is a BoundsError.
BinaryWord factor(const BinaryWord& w, std::size_t i, std::size_t j);

// Distinct factors of length k. k = 0 yields {ε}; k > |w| is rejected.
std::set<BinaryWord> factors_of_length(const BinaryWord& w, std::size_t k);

// Longest proper border via the prefix function; |w| - border is the period.
std::size_t smallest_period(const BinaryWord& w);
bool is_unbordered(const BinaryWord& w);
bool has_period(const BinaryWord& w, std::size_t p);

// Rotation by k: w[k+1..|w|] w[1..k].
BinaryWord rotate(const BinaryWord& w, std::size_t k);
std::vector<BinaryWord> conjugates(const BinaryWord& w);
bool is_primitive(const BinaryWord& w);

BinaryWord reversal(const BinaryWord& w);
BinaryWord complement(const BinaryWord& w);
bool is_palindrome(const BinaryWord& w);

// Every p in [0, |w|] with w[1..p] and w[p+1..|w|] both palindromes.
std::vector<std::size_t> two_palindrome_splits(const BinaryWord& w);

bool is_lyndon(const BinaryWord& w);

std::strong_ordering lex_compare(const BinaryWord& u, const BinaryWord& v);

bool is_prefix(const BinaryWord& prefix, const BinaryWord& w);

namespace literals {
inline BinaryWord operator""_w(const char* text, std::size_t len) {
  return BinaryWord::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace christoffel

template <>
struct std::hash<christoffel::BinaryWord> {
  std::size_t operator()(const christoffel::BinaryWord& w) const noexcept { return w.hash(); }
};
