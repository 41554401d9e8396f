#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wrom {

// Fixed-width bit string, at most 32 bits, stored big-endian as an integer.
// Concatenation a||b maps to (a.bits << b.width) | b.bits.
struct BitString {
    std::uint32_t bits = 0;
    unsigned width = 0;

    BitString() = default;
    BitString(std::uint32_t value, unsigned w) : bits(value), width(w) {
        if (w > 32) throw std::invalid_argument("BitString: width > 32");
        if (w < 32 && value >> w)
            throw std::invalid_argument("BitString: value does not fit width");
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;
};

inline BitString concat(BitString a, BitString b) {
    return BitString((a.bits << b.width) | b.bits, a.width + b.width);
}

// Splits x into (first x.width - suffix_width bits, last suffix_width bits).
inline std::pair<BitString, BitString> split_suffix(BitString x, unsigned suffix_width) {
    if (suffix_width > x.width)
        throw std::invalid_argument("split_suffix: suffix wider than string");
    BitString head(x.bits >> suffix_width, x.width - suffix_width);
    BitString tail(x.bits & ((suffix_width == 32 ? 0 : (1u << suffix_width)) - 1u),
                   suffix_width);
    return {head, tail};
}

inline std::string to_string(BitString s) {
    std::string out;
    out.reserve(s.width);
    for (unsigned i = s.width; i-- > 0;)
        out.push_back((s.bits >> i) & 1u ? '1' : '0');
    return out;
}

}  // namespace wrom
