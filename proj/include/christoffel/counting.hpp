#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "christoffel/word.hpp"

namespace christoffel {

// Closed-form counts of balanced words by minimal period, and brute-force
// oracles for each of them. No floating point anywhere: sigma = beta/(alpha+beta)
// is handled as an exact fraction and floors/ceilings are integer divisions.

/// Parameters of the periodic word w_{alpha,beta}^omega.
struct PeriodClassParams {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t alpha_inv = 0;  // inverse of alpha modulo alpha + beta
  std::int64_t beta_inv = 0;   // inverse of beta modulo alpha + beta
  // sigma = sigma_num / sigma_den, kept unreduced.
  std::int64_t sigma_num = 0;
  std::int64_t sigma_den = 1;

  std::int64_t period() const { return alpha + beta; }
  std::int64_t floor_sigma_times(std::int64_t k) const;
  std::int64_t ceil_sigma_times(std::int64_t k) const;
};

/// Requires coprime alpha, beta >= 1.
PeriodClassParams period_class_params(std::int64_t alpha, std::int64_t beta);

/// N_{alpha,beta}(n): factors of w_{alpha,beta}^omega of length n with
/// minimal period alpha + beta.
std::int64_t count_period_factors(std::int64_t alpha, std::int64_t beta, std::int64_t n);

/// Oracle for count_period_factors: slides a window over n + 2(alpha+beta)
/// letters of w_{alpha,beta}^omega and keeps factors whose smallest period is
/// alpha + beta.
std::set<BinaryWord> brute_period_factors(std::int64_t alpha, std::int64_t beta, std::int64_t n);

/// Height of the length-k prefix of w_{alpha,beta}^omega (floor) and of
/// W_{alpha,beta}^omega (ceiling).
std::int64_t prefix_height_lower(std::int64_t alpha, std::int64_t beta, std::int64_t k);
std::int64_t prefix_height_upper(std::int64_t alpha, std::int64_t beta, std::int64_t k);

/// n beta mod (alpha + beta): occurrences of heavy length-n factors in any
/// factor of w_{alpha,beta}^omega of length alpha + beta + n - 1.
std::int64_t count_heavy_occurrences(std::int64_t alpha, std::int64_t beta, std::int64_t n);

/// H_{alpha,beta}(n): the heavy members of N_{alpha,beta}(n).
std::int64_t count_heavy_factors(std::int64_t alpha, std::int64_t beta, std::int64_t n);

/// Oracle for count_heavy_factors. Coprime alpha, beta >= 1.
std::set<BinaryWord> brute_heavy_factors(std::int64_t alpha, std::int64_t beta, std::int64_t n);

enum class TermKind { kHeavy, kLight };

struct CountTerm {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  TermKind kind = TermKind::kHeavy;
  std::int64_t n_value = 0;
  std::int64_t h_value = 0;
  // h_value for heavy terms, n_value - h_value for light terms.
  std::int64_t contribution = 0;
};

struct CountReport {
  ParikhVector target;
  std::vector<CountTerm> terms;  // heavy terms by alpha, then light terms by beta
  std::int64_t total = 0;
};

/// Bal(a,b), the number of balanced words with Parikh vector (a,b).
std::int64_t count_balanced(std::int64_t a, std::int64_t b);

/// The same sum with every (alpha, beta) term spelled out, including terms
/// that contribute zero (non-coprime pairs).
CountReport count_balanced_report(std::int64_t a, std::int64_t b);

inline constexpr std::int64_t kDefaultBruteCap = 20;

/// |enumerate_balanced(a,b)|; Bal(0,0) = 1 for the empty word. Rejects
/// a + b > cap.
std::int64_t brute_count_balanced(std::int64_t a, std::int64_t b,
                                  std::int64_t cap = kDefaultBruteCap);

}  // namespace christoffel
