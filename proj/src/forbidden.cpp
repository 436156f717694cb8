#include "christoffel/forbidden.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "christoffel/balance.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

BinaryWord swap_ends(const BinaryWord& w) {
  BinaryWord out = BinaryWord{w.back()} + w.substr(1, w.size() - 2);
  out.push_back(w.front());
  return out;
}

void sort_unique(std::vector<BinaryWord>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

std::vector<MFWord> enumerate_mf(std::size_t n) {
  if (n < 2) throw PreconditionError("minimal forbidden words need length n >= 2");
  const auto len = static_cast<std::int64_t>(n);
  std::map<BinaryWord, MFWord> by_word;
  for (std::int64_t a = 1; a < len; ++a) {
    const std::int64_t b = len - a;
    if (std::gcd(a, b) == 1) continue;
    const BinaryWord lower = lower_christoffel(a, b);
    for (const BinaryWord& source : {lower, reversal(lower)}) {
      MFWord mf{swap_ends(source), source, source.front(), source.back()};
      by_word.emplace(mf.word, std::move(mf));
    }
  }
  std::vector<MFWord> out;
  out.reserve(by_word.size());
  for (auto& [word, mf] : by_word) out.push_back(std::move(mf));
  return out;
}

bool is_minimal_forbidden(const BinaryWord& w) {
  if (w.empty()) throw PreconditionError("is_minimal_forbidden requires a nonempty word");
  if (is_balanced(w)) return false;
  return is_balanced(w.substr(0, w.size() - 1)) && is_balanced(w.substr(1, w.size() - 1));
}

std::vector<BinaryWord> enumerate_mab(std::size_t max_len) {
  std::vector<BinaryWord> out;
  for (std::size_t m = 2; 2 * m <= max_len; ++m) {
    const auto len = static_cast<std::int64_t>(m);
    for (std::int64_t b = 1; b < len; ++b) {
      if (std::gcd(len - b, b) != 1) continue;
      const Factorization uv = standard_factorization(len - b, b);
      BinaryWord w = uv.left * 2 + uv.right * 2;
      out.push_back(reversal(w));
      out.push_back(std::move(w));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BinaryWord> mab_from_christoffel_squares(std::size_t max_len) {
  std::vector<BinaryWord> out;
  for (std::size_t m = 1; 2 * m <= max_len; ++m) {
    for (const BinaryWord& lower : primitive_lower_christoffel_words(m)) {
      for (const BinaryWord& c : {lower, reversal(lower)}) {
        const BinaryWord square = c * 2;
        if (square.front() != square.back()) out.push_back(swap_ends(square));
      }
    }
  }
  sort_unique(out);
  return out;
}

bool mab_subset_check(std::size_t max_len) {
  std::map<std::size_t, std::set<BinaryWord>> mf_by_length;
  for (const BinaryWord& w : enumerate_mab(max_len)) {
    auto it = mf_by_length.find(w.size());
    if (it == mf_by_length.end()) {
      std::set<BinaryWord> words;
      for (const MFWord& mf : enumerate_mf(w.size())) words.insert(mf.word);
      it = mf_by_length.emplace(w.size(), std::move(words)).first;
    }
    if (!it->second.contains(w)) return false;
  }
  return true;
}

std::vector<std::pair<BinaryWord, BinaryWord>> imbalance_pairs(const BinaryWord& w) {
  std::vector<std::pair<BinaryWord, BinaryWord>> out;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    const std::set<BinaryWord> factors = factors_of_length(w, k);
    for (const BinaryWord& u : factors) {
      for (const BinaryWord& v : factors) {
        if (v.count_ones() >= u.count_ones() + 2) out.emplace_back(u, v);
      }
    }
  }
  return out;
}

}  // namespace christoffel
