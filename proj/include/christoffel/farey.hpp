#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "christoffel/word.hpp"

namespace christoffel {

/// Reduced nonnegative fraction, compared by value.
struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);
};

Fraction make_fraction(std::int64_t numerator, std::int64_t denominator);

/// A prefix of a lower Christoffel word with its primitive root.
struct PlcEntry {
  BinaryWord word;
  BinaryWord root;
  Fraction fraction;  // |root|_1 / |root|
};

/// Prefix of some lower Christoffel word, decided as balanced and prefix
/// normal. Nonempty input only.
bool is_plc(const BinaryWord& w);

/// The primitive lower Christoffel word r such that v is a prefix of r^omega.
/// Candidates are tried by increasing length.
BinaryWord plc_root(const BinaryWord& v);

/// PLC words of length n in lexicographic order; there are
/// 1 + phi(1) + ... + phi(n) of them.
std::vector<PlcEntry> enumerate_plc(std::size_t n);

/// Reduced a/b with 0 <= a <= b <= n in increasing order, 0/1 and 1/1
/// included.
std::vector<Fraction> farey_sequence(std::size_t n);

/// i-th PLC word paired with the i-th Farey fraction. Throws InternalError
/// if a pairing differs from the word's root fraction.
std::vector<std::pair<PlcEntry, Fraction>> plc_farey_bijection(std::size_t n);

}  // namespace christoffel
