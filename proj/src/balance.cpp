#include "christoffel/balance.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "christoffel/arith.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

void require_balanced(const BinaryWord& w, const char* op) {
  if (!is_balanced(w)) {
    throw PreconditionError(std::string(op) + " requires a balanced word, got '" + w.str() +
                            "'");
  }
}

// Polynomial hash over 2^61 - 1, used to key palindromes by content in the
// witness scan. Matches are confirmed letter by letter.
class FactorHasher {
 public:
  explicit FactorHasher(const BinaryWord& w) : prefix_(w.size() + 1, 0), power_(w.size() + 1, 1) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      prefix_[i + 1] = add(mul(prefix_[i], kBase), w[i] + 1U);
      power_[i + 1] = mul(power_[i], kBase);
    }
  }

  std::uint64_t operator()(std::size_t pos, std::size_t len) const {
    return add(prefix_[pos + len], kMod - mul(prefix_[pos], power_[len]));
  }

 private:
  __extension__ using Wide = unsigned __int128;
  static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  static constexpr std::uint64_t kBase = 1000003;

  static std::uint64_t add(std::uint64_t x, std::uint64_t y) {
    const std::uint64_t s = x + y;
    return s >= kMod ? s - kMod : s;
  }
  static std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
    const Wide p = static_cast<Wide>(x) * y;
    const std::uint64_t folded = static_cast<std::uint64_t>(p & kMod) +
                                 static_cast<std::uint64_t>(p >> 61);
    return folded >= kMod ? folded - kMod : folded;
  }

  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> power_;
};

// Palindromic radii around every center, so that "is w[pos, pos+len) a
// palindrome" is an O(1) lookup.
class PalindromeTable {
 public:
  explicit PalindromeTable(const BinaryWord& w) : odd_(w.size(), 0), even_(w.size() + 1, 0) {
    const std::size_t n = w.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r = 0;
      while (c >= r + 1 && c + r + 1 < n && w[c - r - 1] == w[c + r + 1]) ++r;
      odd_[c] = r;
    }
    for (std::size_t c = 1; c < n; ++c) {
      std::size_t r = 0;
      while (c >= r + 1 && c + r < n && w[c - r - 1] == w[c + r]) ++r;
      even_[c] = r;
    }
  }

  bool is_palindrome(std::size_t pos, std::size_t len) const {
    if (len < 2) return true;
    if (len % 2 == 1) return odd_[pos + len / 2] >= len / 2;
    return even_[pos + len / 2] >= len / 2;
  }

 private:
  std::vector<std::size_t> odd_;
  std::vector<std::size_t> even_;
};

bool same_content(const BinaryWord& w, std::size_t p, std::size_t q, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (w[p + i] != w[q + i]) return false;
  }
  return true;
}

}  // namespace

std::optional<ImbalanceWitness> unbalance_witness(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return std::nullopt;
  const PalindromeTable palindromes(w);
  const FactorHasher hash(w);

  for (std::size_t len = 0; len + 2 <= n; ++len) {
    // Leftmost start of 0v0 / 1v1 for each palindrome v of this length,
    // bucketed by hash of v.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> first_zero;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> first_one;
    for (std::size_t i = 0; i + len + 2 <= n; ++i) {
      const Letter x = w[i];
      if (x != w[i + len + 1] || !palindromes.is_palindrome(i + 1, len)) continue;
      auto& bucket = (x == 0 ? first_zero : first_one)[hash(i + 1, len)];
      const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t start) {
        return same_content(w, start + 1, i + 1, len);
      });
      if (!seen) bucket.push_back(i);
    }

    std::optional<ImbalanceWitness> best;
    for (const auto& [key, zeros] : first_zero) {
      const auto it = first_one.find(key);
      if (it == first_one.end()) continue;
      for (std::size_t z : zeros) {
        for (std::size_t o : it->second) {
          if (!same_content(w, z + 1, o + 1, len)) continue;
          if (!best || z + 1 < best->pos0) best = ImbalanceWitness{w.substr(z + 1, len), z + 1, o + 1};
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

bool is_balanced(const BinaryWord& w) { return !unbalance_witness(w).has_value(); }

bool is_balanced_by_heights(const BinaryWord& w) {
  const std::size_t n = w.size();
  std::vector<std::int64_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + w[i];
  for (std::size_t k = 1; k <= n; ++k) {
    std::int64_t lo = ones[k];
    std::int64_t hi = ones[k];
    for (std::size_t i = 1; i + k <= n; ++i) {
      const std::int64_t h = ones[i + k] - ones[i];
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

bool is_circularly_balanced(const BinaryWord& w) {
  if (w.empty()) throw PreconditionError("is_circularly_balanced requires a nonempty word");
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!is_balanced(rotate(w, k))) return false;
  }
  return true;
}

std::vector<FactorClass> factor_classes(const BinaryWord& w) {
  require_balanced(w, "factor_classes");
  const std::size_t n = w.size();
  std::vector<std::int64_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + w[i];

  std::vector<FactorClass> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    std::int64_t lo = ones[k];
    std::int64_t hi = ones[k];
    for (std::size_t i = 1; i + k <= n; ++i) {
      lo = std::min(lo, ones[i + k] - ones[i]);
      hi = std::max(hi, ones[i + k] - ones[i]);
    }
    const auto len = static_cast<std::int64_t>(k);
    FactorClass fc{k, {len - lo, lo}, std::nullopt};
    if (hi != lo) fc.heavy = ParikhVector{len - hi, hi};
    out.push_back(fc);
  }
  return out;
}

bool is_right_special(const BinaryWord& v) {
  require_balanced(v, "is_right_special");
  return is_balanced(v + BinaryWord{0}) && is_balanced(v + BinaryWord{1});
}

bool is_left_special(const BinaryWord& v) {
  require_balanced(v, "is_left_special");
  return is_balanced(BinaryWord{0} + v) && is_balanced(BinaryWord{1} + v);
}

bool is_bispecial(const BinaryWord& v) { return is_left_special(v) && is_right_special(v); }

bool is_strictly_bispecial(const BinaryWord& v) {
  require_balanced(v, "is_strictly_bispecial");
  for (Letter x : {0, 1}) {
    for (Letter y : {0, 1}) {
      BinaryWord ext{x};
      ext += v;
      ext.push_back(y);
      if (!is_balanced(ext)) return false;
    }
  }
  return true;
}

bool is_prefix_normal(const BinaryWord& w) {
  const std::size_t n = w.size();
  std::vector<std::int64_t> zeros(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) zeros[i + 1] = zeros[i] + (w[i] == 0 ? 1 : 0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 1; i + k <= n; ++i) {
      if (zeros[i + k] - zeros[i] > zeros[k]) return false;
    }
  }
  return true;
}

bool in_digital_bar(const BinaryWord& w) {
  const ParikhVector p = parikh(w);
  if (p.zeros < 1 || p.ones < 1) {
    throw PreconditionError("digital bar needs both letters to occur, got Parikh vector (" +
                            std::to_string(p.zeros) + "," + std::to_string(p.ones) + ")");
  }
  const BinaryWord lower = lower_christoffel(p.zeros, p.ones);
  const BinaryWord upper = reversal(lower);
  std::int64_t h = 0;
  std::int64_t h_lower = 0;
  std::int64_t h_upper = 0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    h += w[k];
    h_lower += lower[k];
    h_upper += upper[k];
    if (h != h_lower && h != h_upper) return false;
  }
  return true;
}

std::vector<BinaryWord> enumerate_balanced(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw PreconditionError("a and b must be nonnegative");
  if (a == 0 && b == 0) throw PreconditionError("(a,b) must not be (0,0)");
  const std::int64_t n = checked_add(a, b);

  std::vector<BinaryWord> out;
  BalanceTracker tracker;
  std::int64_t zeros_left = a;
  std::int64_t ones_left = b;
  // Balance is factorial, so an unbalanced prefix prunes its whole subtree.
  std::function<void()> extend = [&] {
    if (static_cast<std::int64_t>(tracker.word().size()) == n) {
      out.push_back(tracker.word());
      return;
    }
    if (zeros_left > 0) {
      --zeros_left;
      if (tracker.push(0)) extend();
      tracker.pop();
      ++zeros_left;
    }
    if (ones_left > 0) {
      --ones_left;
      if (tracker.push(1)) extend();
      tracker.pop();
      ++ones_left;
    }
  };
  extend();
  return out;
}

BinaryWord max_balanced_lyndon(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1 || !coprime(a, b)) {
    throw PreconditionError("max_balanced_lyndon requires coprime a, b >= 1");
  }
  const std::int64_t n = checked_add(a, b);
  // Walk all words of Parikh vector (a,b) from the greatest down; the first
  // Lyndon word met is the maximum.
  BinaryWord current;
  std::optional<BinaryWord> found;
  std::function<void(std::int64_t, std::int64_t)> walk = [&](std::int64_t zeros,
                                                             std::int64_t ones) {
    if (found) return;
    if (static_cast<std::int64_t>(current.size()) == n) {
      if (is_lyndon(current)) found = current;
      return;
    }
    for (Letter letter : {Letter{1}, Letter{0}}) {
      std::int64_t& left = letter == 1 ? ones : zeros;
      if (left == 0) continue;
      --left;
      current.push_back(letter);
      walk(zeros, ones);
      current.pop_back();
      ++left;
    }
  };
  walk(a, b);
  if (!found) throw InternalError("no Lyndon word with the requested Parikh vector");
  return *found;
}

bool BalanceTracker::push(Letter letter) {
  word_.push_back(letter);
  prefix_ones_.push_back(prefix_ones_.back() + letter);
  const std::size_t m = word_.size();

  std::vector<Range> level(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const std::int64_t h = prefix_ones_[m] - prefix_ones_[m - k];
    Range r{h, h};
    if (k < m) {
      r = levels_.back()[k - 1];
      r.min = std::min(r.min, h);
      r.max = std::max(r.max, h);
    }
    level[k - 1] = r;
    if (r.max - r.min > 1 && bad_depth_ == kNone) bad_depth_ = m;
  }
  levels_.push_back(std::move(level));
  return balanced();
}

void BalanceTracker::pop() {
  if (word_.empty()) throw PreconditionError("pop on empty tracker");
  if (bad_depth_ == word_.size()) bad_depth_ = kNone;
  word_.pop_back();
  prefix_ones_.pop_back();
  levels_.pop_back();
}

bool PrefixNormalTracker::push(Letter letter) {
  word_.push_back(letter);
  prefix_zeros_.push_back(prefix_zeros_.back() + (letter == 0 ? 1 : 0));
  const std::size_t m = word_.size();
  // Only the suffixes are new factors; each must not beat the prefix.
  for (std::size_t k = 1; k < m && bad_depth_ == kNone; ++k) {
    if (prefix_zeros_[m] - prefix_zeros_[m - k] > prefix_zeros_[k]) bad_depth_ = m;
  }
  return prefix_normal();
}

void PrefixNormalTracker::pop() {
  if (word_.empty()) throw PreconditionError("pop on empty tracker");
  if (bad_depth_ == word_.size()) bad_depth_ = kNone;
  word_.pop_back();
  prefix_zeros_.pop_back();
}

}  // namespace christoffel
