#include "christoffel/farey.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "christoffel/arith.hpp"
#include "christoffel/balance.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

bool is_prefix_of_power(const BinaryWord& v, const BinaryWord& root) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != root[i % root.size()]) return false;
  }
  return true;
}

}  // namespace

std::string Fraction::str() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
  return checked_mul(lhs.numerator, rhs.denominator) <=>
         checked_mul(rhs.numerator, lhs.denominator);
}

Fraction make_fraction(std::int64_t numerator, std::int64_t denominator) {
  if (numerator < 0 || denominator < 1) {
    throw PreconditionError("fraction needs numerator >= 0 and denominator >= 1");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  return {numerator / g, denominator / g};
}

bool is_plc(const BinaryWord& w) {
  if (w.empty()) throw PreconditionError("is_plc requires a nonempty word");
  return is_balanced(w) && is_prefix_normal(w);
}

BinaryWord plc_root(const BinaryWord& v) {
  if (!is_plc(v)) throw PreconditionError("'" + v.str() + "' is not a prefix of a lower Christoffel word");
  for (std::size_t m = 1; m <= v.size(); ++m) {
    std::vector<BinaryWord> matches;
    for (const BinaryWord& r : primitive_lower_christoffel_words(m)) {
      if (is_prefix_of_power(v, r)) matches.push_back(r);
    }
    if (matches.size() > 1) {
      throw InternalError("'" + v.str() + "' has several primitive roots of length " +
                          std::to_string(m));
    }
    if (!matches.empty()) return matches.front();
  }
  throw InternalError("no primitive root found for PLC word '" + v.str() + "'");
}

std::vector<PlcEntry> enumerate_plc(std::size_t n) {
  if (n < 1) throw PreconditionError("enumerate_plc requires n >= 1");
  std::vector<PlcEntry> out;
  BalanceTracker balance;
  PrefixNormalTracker normal;
  BinaryWord current;
  // Both properties are prefix-closed, so a failing prefix prunes its subtree.
  std::function<void()> extend = [&] {
    if (current.size() == n) {
      BinaryWord root = plc_root(current);
      const auto ones = static_cast<std::int64_t>(root.count_ones());
      const auto len = static_cast<std::int64_t>(root.size());
      out.push_back({current, std::move(root), make_fraction(ones, len)});
      return;
    }
    for (Letter letter : {Letter{0}, Letter{1}}) {
      const bool ok_balance = balance.push(letter);
      const bool ok_normal = normal.push(letter);
      current.push_back(letter);
      if (ok_balance && ok_normal) extend();
      current.pop_back();
      normal.pop();
      balance.pop();
    }
  };
  extend();
  return out;
}

std::vector<Fraction> farey_sequence(std::size_t n) {
  if (n < 1) throw PreconditionError("farey_sequence requires n >= 1");
  const auto order = static_cast<std::int64_t>(n);
  std::vector<Fraction> out;
  for (std::int64_t den = 1; den <= order; ++den) {
    for (std::int64_t num = 0; num <= den; ++num) {
      if (std::gcd(num, den) == 1) out.push_back({num, den});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<PlcEntry, Fraction>> plc_farey_bijection(std::size_t n) {
  std::vector<PlcEntry> words = enumerate_plc(n);
  const std::vector<Fraction> fractions = farey_sequence(n);
  if (words.size() != fractions.size()) {
    throw InternalError("PLC(" + std::to_string(n) + ") has " + std::to_string(words.size()) +
                        " words but F(" + std::to_string(n) + ") has " +
                        std::to_string(fractions.size()) + " fractions");
  }
  std::vector<std::pair<PlcEntry, Fraction>> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].fraction != fractions[i]) {
      throw InternalError("position " + std::to_string(i + 1) + ": root of '" +
                          words[i].word.str() + "' gives " + words[i].fraction.str() +
                          " but the Farey sequence has " + fractions[i].str());
    }
    out.emplace_back(std::move(words[i]), fractions[i]);
  }
  return out;
}

}  // namespace christoffel
