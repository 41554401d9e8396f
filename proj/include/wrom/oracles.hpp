#pragma once

#include <optional>
#include <string>

#include "wrom/bitstring.hpp"
#include "wrom/function_table.hpp"
#include "wrom/rng.hpp"

namespace wrom {

// Answer of a weakening oracle: either one or two input strings, or Bottom
// (the oracles' "it returns ⊥" clauses).
struct OracleAnswer {
    bool bottom = true;
    BitString first;
    std::optional<BitString> second;

    static OracleAnswer bot() { return {}; }
    static OracleAnswer one(BitString a) { return {false, a, std::nullopt}; }
    static OracleAnswer pair(BitString a, BitString b) { return {false, a, b}; }

    friend bool operator==(const OracleAnswer&, const OracleAnswer&) = default;
};

std::string to_string(const OracleAnswer& a);

// Ideal oracles answering from the exhaustive table. The classic (non-prefix)
// oracles require t = 0; the chosen-prefix ones strictly generalize them.

// RO^h(x): the hash value of x.
BitString ro_query(const FunctionTable& f, BitString x);

// CO^h(): uniform entry x, uniform other preimage x' of h(x), or Bottom.
OracleAnswer co_query(const FunctionTable& f, RandomStream& rng);

// SPO^h(x): uniform x' != x with h(x') = h(x), or Bottom.
OracleAnswer spo_query(const FunctionTable& f, BitString x, RandomStream& rng);

// FPO^h(y): uniform preimage of y, or Bottom.
OracleAnswer fpo_query(const FunctionTable& f, BitString y, RandomStream& rng);

// COMMON-CP-CO^h(r): uniform m||r, uniform other m'||r colliding with it.
OracleAnswer common_cp_co_query(const FunctionTable& f, BitString r, RandomStream& rng);

// CP-CO^h(r, r'): uniform m||r, then a uniform entry m'||r' with the same
// hash value; when r = r' the entry m||r itself is excluded.
OracleAnswer cp_co_query(const FunctionTable& f, BitString r, BitString rp,
                         RandomStream& rng);

// CP-SPO^h(x, r'): uniform m'||r' != x with h(m'||r') = h(x), or Bottom.
OracleAnswer cp_spo_query(const FunctionTable& f, BitString x, BitString rp,
                          RandomStream& rng);

// CP-FPO^h(y, r): uniform m||r with h(m||r) = y, or Bottom.
OracleAnswer cp_fpo_query(const FunctionTable& f, BitString y, BitString r,
                          RandomStream& rng);

}  // namespace wrom
