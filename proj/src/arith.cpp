#include "christoffel/arith.hpp"

#include <numeric>
#include <string>

#include "christoffel/errors.hpp"

namespace christoffel {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw PreconditionError("integer overflow in " + std::to_string(x) + " + " +
                            std::to_string(y));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw PreconditionError("integer overflow in " + std::to_string(x) + " * " +
                            std::to_string(y));
  }
  return out;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  if (num < 0 || den <= 0) {
    throw PreconditionError("floor_div requires num >= 0 and den > 0");
  }
  return num / den;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (num < 0 || den <= 0) {
    throw PreconditionError("ceil_div requires num >= 0 and den > 0");
  }
  return num / den + (num % den != 0 ? 1 : 0);
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  if (m < 1) throw PreconditionError("modulus must be >= 1");
  if (m == 1) return 0;
  std::int64_t r0 = m;
  std::int64_t r1 = ((x % m) + m) % m;
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    throw PreconditionError(std::to_string(x) + " is not invertible modulo " +
                            std::to_string(m));
  }
  return ((t0 % m) + m) % m;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw PreconditionError("euler_phi requires n >= 1");
  std::int64_t result = n;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

bool coprime(std::int64_t x, std::int64_t y) { return std::gcd(x, y) == 1; }

}  // namespace christoffel
