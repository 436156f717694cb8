#pragma once

#include <cstdint>

namespace christoffel {

// Integer helpers shared by the constructions and the counting formulas.
// Everything is exact 64-bit arithmetic; overflow raises PreconditionError.

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

// Floor and ceiling of num/den for num >= 0, den > 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

// Inverse of x modulo m, in [0, m). Requires m >= 1 and gcd(x, m) = 1.
// For m = 1 every residue is 0, so the result is 0.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m);

// Euler's totient; euler_phi(1) = 1.
std::int64_t euler_phi(std::int64_t n);

bool coprime(std::int64_t x, std::int64_t y);

}  // namespace christoffel
