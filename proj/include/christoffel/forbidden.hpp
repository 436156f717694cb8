#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "christoffel/word.hpp"

namespace christoffel {

/// A minimal forbidden word of the balanced language, y v x, together with
/// the non-primitive Christoffel word x v y it comes from.
struct MFWord {
  BinaryWord word;
  BinaryWord source;
  Letter x = 0;
  Letter y = 1;
};

/// Minimal forbidden words of length n >= 2, sorted by word. Built by
/// swapping the end letters of every non-primitive lower and upper
/// Christoffel word of length n with a, b >= 1.
std::vector<MFWord> enumerate_mf(std::size_t n);

/// w is unbalanced while w minus its last letter and w minus its first
/// letter are both balanced.
bool is_minimal_forbidden(const BinaryWord& w);

/// Minimal almost balanced words of length <= max_len: u^2 v^2 and its
/// reversal, for every standard factorization u v of a primitive lower
/// Christoffel word. Sorted, deduplicated.
std::vector<BinaryWord> enumerate_mab(std::size_t max_len);

/// The same set described through squares: y w x for every square x w y of
/// a primitive (lower or upper) Christoffel word with x != y.
std::vector<BinaryWord> mab_from_christoffel_squares(std::size_t max_len);

/// Every MAB word of length <= max_len is among enumerate_mf of its length.
bool mab_subset_check(std::size_t max_len);

/// Exploration helper, not a MAB predicate: pairs (u, v) of distinct factors
/// of equal length with |v|_1 - |u|_1 >= 2, sorted by length then content.
std::vector<std::pair<BinaryWord, BinaryWord>> imbalance_pairs(const BinaryWord& w);

}  // namespace christoffel
