#include "christoffel/word.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

void require_nonempty(const BinaryWord& w, const char* op) {
  if (w.empty()) throw PreconditionError(std::string(op) + " requires a nonempty word");
}

}  // namespace

BinaryWord::BinaryWord(std::initializer_list<int> letters) {
  for (int letter : letters) {
    if (letter != 0 && letter != 1) throw PreconditionError("letters must be 0 or 1");
    push_back(static_cast<Letter>(letter));
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  BinaryWord w;
  w.blocks_.reserve((text.size() + kBits - 1) / kBits);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw PreconditionError("word may contain only '0' and '1', got '" + std::string(text) +
                              "'");
    }
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

BinaryWord BinaryWord::power_of_letter(Letter letter, std::size_t count) {
  BinaryWord w;
  for (std::size_t i = 0; i < count; ++i) w.push_back(letter);
  return w;
}

Letter BinaryWord::at(std::size_t i) const {
  if (i >= size_) {
    throw BoundsError("index " + std::to_string(i) + " out of range for word of length " +
                      std::to_string(size_));
  }
  return (*this)[i];
}

void BinaryWord::push_back(Letter letter) {
  if (size_ % kBits == 0) blocks_.push_back(0);
  if (letter != 0) blocks_.back() |= std::uint64_t{1} << (kBits - 1 - size_ % kBits);
  ++size_;
}

void BinaryWord::pop_back() {
  if (size_ == 0) throw PreconditionError("pop_back on empty word");
  --size_;
  if (size_ % kBits == 0) {
    blocks_.pop_back();
  } else {
    blocks_.back() &= ~(std::uint64_t{1} << (kBits - 1 - size_ % kBits));
  }
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) {
    throw BoundsError("substr [" + std::to_string(pos) + ", +" + std::to_string(len) +
                      ") out of range for word of length " + std::to_string(size_));
  }
  BinaryWord out;
  out.blocks_.reserve((len + kBits - 1) / kBits);
  for (std::size_t i = pos; i < pos + len; ++i) out.push_back((*this)[i]);
  return out;
}

BinaryWord& BinaryWord::operator+=(const BinaryWord& other) {
  const std::size_t n = other.size_;
  for (std::size_t i = 0; i < n; ++i) push_back(other[i]);
  return *this;
}

std::size_t BinaryWord::count_ones() const {
  std::size_t total = 0;
  for (std::uint64_t block : blocks_) total += static_cast<std::size_t>(std::popcount(block));
  return total;
}

std::string BinaryWord::str() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i] != 0) out[i] = '1';
  }
  return out;
}

std::size_t BinaryWord::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (std::uint64_t block : blocks_) {
    h ^= std::hash<std::uint64_t>{}(block) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs) {
  const std::size_t common = std::min(lhs.size_, rhs.size_);
  const std::size_t full_blocks = common / BinaryWord::kBits;
  for (std::size_t k = 0; k < full_blocks; ++k) {
    if (lhs.blocks_[k] != rhs.blocks_[k]) return lhs.blocks_[k] <=> rhs.blocks_[k];
  }
  const std::size_t tail = common % BinaryWord::kBits;
  if (tail != 0) {
    const std::uint64_t mask = ~std::uint64_t{0} << (BinaryWord::kBits - tail);
    const std::uint64_t l = lhs.blocks_[full_blocks] & mask;
    const std::uint64_t r = rhs.blocks_[full_blocks] & mask;
    if (l != r) return l <=> r;
  }
  return lhs.size_ <=> rhs.size_;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.str(); }

BinaryWord operator*(const BinaryWord& w, std::size_t times) {
  BinaryWord out;
  for (std::size_t t = 0; t < times; ++t) out += w;
  return out;
}

std::ostream& operator<<(std::ostream& os, const ParikhVector& p) {
  return os << '(' << p.zeros << ',' << p.ones << ')';
}

ParikhVector parikh(const BinaryWord& w) {
  const auto ones = static_cast<std::int64_t>(w.count_ones());
  return {static_cast<std::int64_t>(w.size()) - ones, ones};
}

BinaryWord factor(const BinaryWord& w, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > w.size()) {
    throw BoundsError("factor w[" + std::to_string(i) + ".." + std::to_string(j) +
                      "] requires 1 <= i <= j <= " + std::to_string(w.size()));
  }
  return w.substr(i - 1, j - i + 1);
}

std::set<BinaryWord> factors_of_length(const BinaryWord& w, std::size_t k) {
  if (k > w.size()) {
    throw PreconditionError("factor length " + std::to_string(k) + " exceeds word length " +
                            std::to_string(w.size()));
  }
  std::set<BinaryWord> out;
  for (std::size_t i = 0; i + k <= w.size(); ++i) out.insert(w.substr(i, k));
  return out;
}

std::size_t smallest_period(const BinaryWord& w) {
  require_nonempty(w, "smallest_period");
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

bool is_unbordered(const BinaryWord& w) { return smallest_period(w) == w.size(); }

bool has_period(const BinaryWord& w, std::size_t p) {
  if (p == 0) throw PreconditionError("period must be positive");
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

BinaryWord rotate(const BinaryWord& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return w.substr(k, w.size() - k) + w.substr(0, k);
}

std::vector<BinaryWord> conjugates(const BinaryWord& w) {
  require_nonempty(w, "conjugates");
  std::vector<BinaryWord> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  return out;
}

bool is_primitive(const BinaryWord& w) {
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

BinaryWord reversal(const BinaryWord& w) {
  BinaryWord out;
  for (std::size_t i = w.size(); i > 0; --i) out.push_back(w[i - 1]);
  return out;
}

BinaryWord complement(const BinaryWord& w) {
  BinaryWord out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(static_cast<Letter>(1 - w[i]));
  return out;
}

bool is_palindrome(const BinaryWord& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (w[i] != w[n - 1 - i]) return false;
  }
  return true;
}

std::vector<std::size_t> two_palindrome_splits(const BinaryWord& w) {
  require_nonempty(w, "two_palindrome_splits");
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p <= w.size(); ++p) {
    if (is_palindrome(w.substr(0, p)) && is_palindrome(w.substr(p, w.size() - p))) {
      out.push_back(p);
    }
  }
  return out;
}

bool is_lyndon(const BinaryWord& w) {
  require_nonempty(w, "is_lyndon");
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (rotate(w, k) <= w) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const BinaryWord& u, const BinaryWord& v) { return u <=> v; }

bool is_prefix(const BinaryWord& prefix, const BinaryWord& w) {
  if (prefix.size() > w.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] != w[i]) return false;
  }
  return true;
}

}  // namespace christoffel
