#include "christoffel/christoffel.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "christoffel/arith.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

void require_endpoint(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw PreconditionError("a and b must be nonnegative");
  if (a == 0 && b == 0) throw PreconditionError("(a,b) must not be (0,0)");
  checked_add(a, b);
}

void require_coprime_positive(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
  if (!coprime(a, b)) {
    throw PreconditionError("gcd(" + std::to_string(a) + "," + std::to_string(b) +
                            ") must be 1");
  }
  checked_add(a, b);
}

// Primitive case: letter k (1-based) is 1 iff floor(k b / n) > floor((k-1) b / n).
BinaryWord lower_coprime(std::int64_t a, std::int64_t b) {
  const std::int64_t n = a + b;
  BinaryWord w;
  std::int64_t previous = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t height = checked_mul(k, b) / n;
    w.push_back(height > previous ? 1 : 0);
    previous = height;
  }
  return w;
}

}  // namespace

std::string Slope::str() const {
  if (infinite()) return "inf";
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Slope slope_of(const ParikhVector& endpoint) {
  require_endpoint(endpoint.zeros, endpoint.ones);
  Slope s{endpoint, 1, 0};
  if (endpoint.zeros != 0) {
    const std::int64_t g = std::gcd(endpoint.zeros, endpoint.ones);
    s.numerator = endpoint.ones / g;
    s.denominator = endpoint.zeros / g;
  }
  return s;
}

BinaryWord lower_christoffel(std::int64_t a, std::int64_t b) {
  require_endpoint(a, b);
  const std::int64_t g = std::gcd(a, b);
  return lower_coprime(a / g, b / g) * static_cast<std::size_t>(g);
}

BinaryWord lower_christoffel_arithmetic(std::int64_t a, std::int64_t b) {
  require_coprime_positive(a, b);
  const std::int64_t limit = checked_mul(a, b);
  BinaryWord w{0};
  std::int64_t next_of_a = a;  // multiples of a contribute 1
  std::int64_t next_of_b = b;  // multiples of b contribute 0
  while (next_of_a < limit || next_of_b < limit) {
    if (next_of_b < next_of_a) {
      w.push_back(0);
      next_of_b += b;
    } else {
      w.push_back(1);
      next_of_a += a;
    }
  }
  w.push_back(1);
  return w;
}

BinaryWord upper_christoffel(std::int64_t a, std::int64_t b) {
  return reversal(lower_christoffel(a, b));
}

bool is_lower_christoffel(const BinaryWord& w) {
  if (w.empty()) return false;
  const ParikhVector p = parikh(w);
  return w == lower_christoffel(p.zeros, p.ones);
}

bool is_upper_christoffel(const BinaryWord& w) {
  if (w.empty()) return false;
  const ParikhVector p = parikh(w);
  return w == upper_christoffel(p.zeros, p.ones);
}

std::vector<BinaryWord> primitive_lower_christoffel_words(std::size_t length) {
  if (length == 0) throw PreconditionError("length must be positive");
  if (length == 1) return {BinaryWord{0}, BinaryWord{1}};
  const auto n = static_cast<std::int64_t>(length);
  std::vector<BinaryWord> out;
  for (std::int64_t b = 1; b < n; ++b) {
    if (coprime(n - b, b)) out.push_back(lower_coprime(n - b, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BinaryWord central_word(std::int64_t a, std::int64_t b) {
  require_coprime_positive(a, b);
  const BinaryWord w = lower_coprime(a, b);
  return w.substr(1, w.size() - 2);
}

bool is_central(const BinaryWord& w) {
  const std::size_t total = w.size() + 2;
  for (std::size_t p = 1; p < total; ++p) {
    const std::size_t q = total - p;
    if (q < p) break;
    if (std::gcd(p, q) != 1) continue;
    if (has_period(w, p) && has_period(w, q)) return true;
  }
  return false;
}

CentralDecomposition central_decompose(const BinaryWord& central) {
  if (!is_central(central)) {
    throw PreconditionError("'" + central.str() + "' is not a central word");
  }
  const std::size_t n = central.size();
  const std::size_t ones = central.count_ones();
  if (ones == 0) return PowerOfLetter{0, n};
  if (ones == n) return PowerOfLetter{1, n};

  std::optional<PalindromePair> found;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (central[i] != 0 || central[i + 1] != 1) continue;
    BinaryWord p = central.substr(0, i);
    BinaryWord q = central.substr(i + 2, n - i - 2);
    if (!is_palindrome(p) || !is_palindrome(q)) continue;
    if (q + BinaryWord{1, 0} + p != central) continue;
    if (found) {
      throw InternalError("central word '" + central.str() + "' has two P01Q=Q10P splits");
    }
    found = PalindromePair{std::move(p), std::move(q)};
  }
  if (!found) {
    throw InternalError("central word '" + central.str() + "' has no P01Q=Q10P split");
  }
  return *found;
}

Factorization palindromic_factorization(std::int64_t a, std::int64_t b) {
  const BinaryWord c = central_word(a, b);
  const auto parts = central_decompose(c);
  if (const auto* power = std::get_if<PowerOfLetter>(&parts)) {
    // 0 0^n 1 = 0^{n+1} . 1 and 0 1^n 1 = 0 . 1^{n+1}
    if (power->letter == 0) {
      return {BinaryWord::power_of_letter(0, power->count + 1), BinaryWord{1},
              FactorizationKind::kPalindromic};
    }
    return {BinaryWord{0}, BinaryWord::power_of_letter(1, power->count + 1),
            FactorizationKind::kPalindromic};
  }
  const auto& pair = std::get<PalindromePair>(parts);
  return {BinaryWord{0} + pair.p + BinaryWord{0}, BinaryWord{1} + pair.q + BinaryWord{1},
          FactorizationKind::kPalindromic};
}

Factorization standard_factorization(std::int64_t a, std::int64_t b) {
  const BinaryWord c = central_word(a, b);
  const auto parts = central_decompose(c);
  if (const auto* power = std::get_if<PowerOfLetter>(&parts)) {
    // 0 0^n 1 = 0 . 0^n 1 and 0 1^n 1 = 0 1^n . 1
    if (power->letter == 0) {
      return {BinaryWord{0}, BinaryWord::power_of_letter(0, power->count) + BinaryWord{1},
              FactorizationKind::kStandard};
    }
    return {BinaryWord{0} + BinaryWord::power_of_letter(1, power->count), BinaryWord{1},
            FactorizationKind::kStandard};
  }
  const auto& pair = std::get<PalindromePair>(parts);
  return {BinaryWord{0} + pair.q + BinaryWord{1}, BinaryWord{0} + pair.p + BinaryWord{1},
          FactorizationKind::kStandard};
}

PeriodInverses period_inverses(std::int64_t a, std::int64_t b) {
  require_coprime_positive(a, b);
  const std::int64_t n = a + b;
  if (n == 2) return {1, 1};
  return {mod_inverse(a, n), mod_inverse(b, n)};
}

std::string ChristoffelMatrix::str() const {
  std::string out;
  for (const BinaryWord& r : rows_) {
    out += r.str();
    out += '\n';
  }
  return out;
}

ChristoffelMatrix christoffel_matrix(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
  const std::int64_t n = checked_add(a, b);
  checked_mul(n, n);

  // Column j is column 0 rotated up by j*b: entry (r, j) = col0[(r + j b) mod n],
  // and col0[i] = 1 iff i >= a.
  std::vector<BinaryWord> rows(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    BinaryWord& row = rows[static_cast<std::size_t>(r)];
    std::int64_t index = r;
    for (std::int64_t j = 0; j < n; ++j) {
      row.push_back(index >= a ? 1 : 0);
      index = (index + b) % n;
    }
  }

  std::vector<BinaryWord> expected = conjugates(lower_christoffel(a, b));
  std::sort(expected.begin(), expected.end());
  if (rows != expected) {
    throw InternalError("column-shift Christoffel matrix disagrees with sorted conjugates for (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return ChristoffelMatrix(a, b, std::move(rows));
}

}  // namespace christoffel
