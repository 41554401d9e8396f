#pragma once

#include <cstdint>

#include "wrom/rng.hpp"

namespace wrom::modmath {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Inverse of a mod n; throws std::invalid_argument if gcd(a, n) != 1.
std::uint64_t modinv(std::uint64_t a, std::uint64_t n);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Uniform prime with the top bit of `bits` set, bits >= 2, by rejection.
std::uint64_t random_prime(unsigned bits, RandomStream& rng);

}  // namespace wrom::modmath
