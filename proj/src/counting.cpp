#include "christoffel/counting.hpp"

#include <algorithm>
#include <numeric>

#include "christoffel/arith.hpp"
#include "christoffel/balance.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

void require_positive_pair(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1 || beta < 1) throw PreconditionError("alpha and beta must be positive");
  checked_add(alpha, beta);
}

void require_length(std::int64_t n) {
  if (n < 0) throw PreconditionError("length must be nonnegative");
}

}  // namespace

std::int64_t PeriodClassParams::floor_sigma_times(std::int64_t k) const {
  return floor_div(checked_mul(sigma_num, k), sigma_den);
}

std::int64_t PeriodClassParams::ceil_sigma_times(std::int64_t k) const {
  return ceil_div(checked_mul(sigma_num, k), sigma_den);
}

PeriodClassParams period_class_params(std::int64_t alpha, std::int64_t beta) {
  require_positive_pair(alpha, beta);
  if (!coprime(alpha, beta)) {
    throw PreconditionError("period class parameters need gcd(alpha,beta) = 1");
  }
  const PeriodInverses inv = period_inverses(alpha, beta);
  const std::int64_t s = alpha + beta;
  // Equal inverses force a + a = s with a * a = 1 mod s, i.e. s = 2.
  if (inv.a_inv == inv.b_inv && s != 2) {
    throw InternalError("alpha' = beta' with alpha + beta = " + std::to_string(s));
  }
  return {alpha, beta, inv.a_inv, inv.b_inv, beta, s};
}

std::int64_t count_period_factors(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  require_positive_pair(alpha, beta);
  require_length(n);
  const std::int64_t s = alpha + beta;
  if (!coprime(alpha, beta) || n < s) return 0;
  const PeriodClassParams p = period_class_params(alpha, beta);
  const std::int64_t lo = std::min(p.alpha_inv, p.beta_inv);
  const std::int64_t hi = std::max(p.alpha_inv, p.beta_inv);
  if (n < s + lo) return 2 * (n - s + 1);
  if (n < s + hi) return n - hi + 1;
  return s;
}

std::set<BinaryWord> brute_period_factors(std::int64_t alpha, std::int64_t beta,
                                          std::int64_t n) {
  require_positive_pair(alpha, beta);
  require_length(n);
  const std::int64_t s = alpha + beta;
  std::set<BinaryWord> out;
  if (n == 0) return out;

  const BinaryWord root = lower_christoffel(alpha, beta);
  const std::int64_t window_len = checked_add(n, 2 * s);
  const BinaryWord window =
      (root * static_cast<std::size_t>(window_len / s + 1)).substr(0, static_cast<std::size_t>(window_len));
  const auto len = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + len <= window.size(); ++i) {
    BinaryWord f = window.substr(i, len);
    if (static_cast<std::int64_t>(smallest_period(f)) == s) out.insert(std::move(f));
  }
  return out;
}

std::int64_t prefix_height_lower(std::int64_t alpha, std::int64_t beta, std::int64_t k) {
  require_positive_pair(alpha, beta);
  require_length(k);
  return floor_div(checked_mul(beta, k), alpha + beta);
}

std::int64_t prefix_height_upper(std::int64_t alpha, std::int64_t beta, std::int64_t k) {
  require_positive_pair(alpha, beta);
  require_length(k);
  return ceil_div(checked_mul(beta, k), alpha + beta);
}

std::int64_t count_heavy_occurrences(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  require_positive_pair(alpha, beta);
  require_length(n);
  if (!coprime(alpha, beta)) throw PreconditionError("gcd(alpha,beta) must be 1");
  return checked_mul(n, beta) % (alpha + beta);
}

std::int64_t count_heavy_factors(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  const std::int64_t total = count_period_factors(alpha, beta, n);
  if (total == 0) return 0;

  const PeriodClassParams p = period_class_params(alpha, beta);
  const std::int64_t s = p.period();
  const std::int64_t light_heights = checked_mul(p.floor_sigma_times(n), total);

  if (n < s + std::min(p.alpha_inv, p.beta_inv)) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i <= n - s; ++i) {
      sum += p.ceil_sigma_times(n - i) + p.floor_sigma_times(i);
    }
    return 2 * sum - light_heights;
  }
  if (s + p.beta_inv <= n && n < s + p.alpha_inv) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i <= n - p.alpha_inv; ++i) {
      sum += p.floor_sigma_times(n - i) + p.ceil_sigma_times(i);
    }
    return sum - light_heights;
  }
  if (s + p.alpha_inv <= n && n < s + p.beta_inv) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i <= n - p.beta_inv; ++i) {
      sum += p.ceil_sigma_times(n - i) + p.floor_sigma_times(i);
    }
    return sum - light_heights;
  }
  return checked_mul(n, beta) % s;
}

std::set<BinaryWord> brute_heavy_factors(std::int64_t alpha, std::int64_t beta,
                                         std::int64_t n) {
  const PeriodClassParams p = period_class_params(alpha, beta);
  require_length(n);
  const std::int64_t hi = p.ceil_sigma_times(n);
  std::set<BinaryWord> out;
  if (hi == p.floor_sigma_times(n)) return out;
  for (const BinaryWord& f : brute_period_factors(alpha, beta, n)) {
    if (static_cast<std::int64_t>(f.count_ones()) == hi) out.insert(f);
  }
  return out;
}

CountReport count_balanced_report(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw PreconditionError("a and b must be nonnegative");
  CountReport report{{a, b}, {}, 0};
  if (a == 0 || b == 0) {
    report.total = 1;
    return report;
  }
  const std::int64_t n = checked_add(a, b);

  // Heavy words: (b-1) alpha / (a+1) < beta <= b alpha / a.
  for (std::int64_t alpha = 1; alpha <= a; ++alpha) {
    for (std::int64_t beta = 1; checked_mul(beta, a) <= checked_mul(b, alpha); ++beta) {
      if (checked_mul(b - 1, alpha) >= checked_mul(beta, a + 1)) continue;
      CountTerm t{alpha, beta, TermKind::kHeavy, count_period_factors(alpha, beta, n),
                  count_heavy_factors(alpha, beta, n), 0};
      t.contribution = t.h_value;
      report.total += t.contribution;
      report.terms.push_back(t);
    }
  }
  // Light words: (a-1) beta / (b+1) < alpha <= a beta / b.
  for (std::int64_t beta = 1; beta <= b; ++beta) {
    for (std::int64_t alpha = 1; checked_mul(alpha, b) <= checked_mul(a, beta); ++alpha) {
      if (checked_mul(a - 1, beta) >= checked_mul(alpha, b + 1)) continue;
      CountTerm t{alpha, beta, TermKind::kLight, count_period_factors(alpha, beta, n),
                  count_heavy_factors(alpha, beta, n), 0};
      t.contribution = t.n_value - t.h_value;
      report.total += t.contribution;
      report.terms.push_back(t);
    }
  }
  return report;
}

std::int64_t count_balanced(std::int64_t a, std::int64_t b) {
  return count_balanced_report(a, b).total;
}

std::int64_t brute_count_balanced(std::int64_t a, std::int64_t b, std::int64_t cap) {
  if (a < 0 || b < 0) throw PreconditionError("a and b must be nonnegative");
  if (checked_add(a, b) > cap) {
    throw PreconditionError("brute-force count limited to a + b <= " + std::to_string(cap));
  }
  if (a == 0 && b == 0) return 1;
  return static_cast<std::int64_t>(enumerate_balanced(a, b).size());
}

}  // namespace christoffel
