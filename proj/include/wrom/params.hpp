#pragma once

#include <cstdint>
#include <stdexcept>

namespace wrom {

// Hash shape (ell, t, k): inputs are m||r with |m| = ell, |r| = t and
// outputs are k-bit strings. t = 0 gives the classic non-prefix models.
struct Params {
    unsigned ell;
    unsigned t;
    unsigned k;

    static constexpr unsigned kMaxDomainBits = 24;

    Params(unsigned ell_, unsigned t_, unsigned k_) : ell(ell_), t(t_), k(k_) {
        if (ell < 1) throw std::invalid_argument("Params: ell must be >= 1");
        if (k < 1) throw std::invalid_argument("Params: k must be >= 1");
        if (ell + t > kMaxDomainBits)
            throw std::invalid_argument(
                "Params: ell + t exceeds exhaustive-backend limit of 24 bits");
        if (k > kMaxDomainBits)
            throw std::invalid_argument("Params: k exceeds backend limit of 24 bits");
    }

    unsigned input_bits() const { return ell + t; }
    std::uint32_t message_count() const { return 1u << ell; }      // #M
    std::uint32_t prefix_count() const { return 1u << t; }         // #R
    std::uint32_t input_count() const { return 1u << (ell + t); }  // #X
    std::uint32_t output_count() const { return 1u << k; }         // #Y

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace wrom
