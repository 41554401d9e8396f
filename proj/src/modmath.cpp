#include "wrom/modmath.hpp"

#include <stdexcept>
#include <utility>

namespace wrom::modmath {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    if (n == 1) return 0;
    std::uint64_t result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t n) {
    // Extended Euclid on (a mod n, n), tracking only the x coefficient.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = n, new_r = a % n;
    while (new_r != 0) {
        const std::uint64_t q = r / new_r;
        t = std::exchange(new_t, t - static_cast<std::int64_t>(q) * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("modinv: not invertible");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(n))
                 : static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(unsigned bits, RandomStream& rng) {
    if (bits < 2 || bits > 62)
        throw std::invalid_argument("random_prime: bits outside [2, 62]");
    const std::uint64_t top = 1ull << (bits - 1);
    for (;;) {
        const std::uint64_t cand = top | rng.below(top);
        if (is_prime(cand)) return cand;
    }
}

}  // namespace wrom::modmath
