#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "christoffel/word.hpp"

namespace christoffel {

// Balance: for every k, the ones-counts of length-k factors differ by <= 1.

/// Decided by the palindrome characterization: w is unbalanced iff some
/// palindrome v has both 0v0 and 1v1 as factors.
bool is_balanced(const BinaryWord& w);

/// Decided straight from the definition by comparing factor heights.
bool is_balanced_by_heights(const BinaryWord& w);

struct ImbalanceWitness {
  BinaryWord v;       // a palindrome
  std::size_t pos0 = 0;  // 1-based start of 0v0
  std::size_t pos1 = 0;  // 1-based start of 1v1
};

/// Shortest witness v, ties broken by leftmost 0v0 then leftmost 1v1.
/// Absent iff w is balanced.
std::optional<ImbalanceWitness> unbalance_witness(const BinaryWord& w);

/// Every rotation is balanced. Nonempty input only.
bool is_circularly_balanced(const BinaryWord& w);

struct FactorClass {
  std::size_t length = 0;
  ParikhVector light;
  std::optional<ParikhVector> heavy;
};

/// One entry per k in 0..|w|. When all length-k factors share a Parikh
/// vector it is reported as light. Unbalanced input is a PreconditionError.
std::vector<FactorClass> factor_classes(const BinaryWord& w);

// Special factors of the balanced language. All require is_balanced(v).
bool is_right_special(const BinaryWord& v);
bool is_left_special(const BinaryWord& v);
bool is_bispecial(const BinaryWord& v);
bool is_strictly_bispecial(const BinaryWord& v);

/// No factor has more 0s than the prefix of the same length.
bool is_prefix_normal(const BinaryWord& w);

/// Every proper prefix w[1..k] has the Parikh vector of w_{a,b}[1..k] or of
/// W_{a,b}[1..k], where (a,b) = parikh(w). Requires a, b >= 1.
bool in_digital_bar(const BinaryWord& w);

/// All balanced words with Parikh vector (a,b), in lexicographic order.
std::vector<BinaryWord> enumerate_balanced(std::int64_t a, std::int64_t b);

/// Greatest Lyndon word with Parikh vector (a,b), by exhaustive search over
/// all words with that Parikh vector. Coprime a, b >= 1.
BinaryWord max_balanced_lyndon(std::int64_t a, std::int64_t b);

/// Incremental balance check for a word grown and shrunk at the right end.
/// push() returns whether the extended word is still balanced; only the
/// suffixes created by the new letter are examined.
class BalanceTracker {
 public:
  bool push(Letter letter);
  void pop();
  bool balanced() const { return bad_depth_ == kNone; }
  const BinaryWord& word() const { return word_; }

 private:
  struct Range {
    std::int64_t min = 0;
    std::int64_t max = 0;
  };
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  BinaryWord word_;
  std::vector<std::int64_t> prefix_ones_{0};
  // levels_[d][k-1] holds the height range of length-k factors of the prefix
  // of length d + 1.
  std::vector<std::vector<Range>> levels_;
  std::size_t bad_depth_ = kNone;
};

/// Incremental prefix-normality check, same contract as BalanceTracker.
class PrefixNormalTracker {
 public:
  bool push(Letter letter);
  void pop();
  bool prefix_normal() const { return bad_depth_ == kNone; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  BinaryWord word_;
  std::vector<std::int64_t> prefix_zeros_{0};
  std::size_t bad_depth_ = kNone;
};

}  // namespace christoffel
