#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "wrom/function_table.hpp"
#include "wrom/modmath.hpp"
#include "wrom/schemes.hpp"

using namespace wrom;

namespace {

// Schoolbook reference: repeated modular multiplication, no shared code with
// the library's square-and-multiply.
std::uint64_t naive_powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = (r * (base % n)) % n;
    return r;
}

FunctionTable constant_table(const Params& p, std::uint32_t y) {
    return FunctionTable(p, std::vector<std::uint32_t>(p.input_count(), y));
}

void roundtrip(SchemeInstance& inst, RandomStream& rng, int n = 300) {
    for (int i = 0; i < n; ++i) {
        const BitString m(rng.bits(inst.msg_bits), inst.msg_bits);
        CHECK(inst.verify(m, inst.sign(m, rng)));
    }
}

}  // namespace

TEST_CASE("modular arithmetic primitives") {
    CHECK(modmath::gcd(12, 18) == 6);
    CHECK(modmath::gcd(7, 0) == 7);
    CHECK(modmath::modinv(7, 60) == 43);  // 7 * 43 = 301 = 5 * 60 + 1
    CHECK_THROWS_AS(modmath::modinv(6, 60), std::invalid_argument);
    for (std::uint64_t n : {2ull, 3ull, 5ull, 251ull, 65521ull, 4294967291ull})
        CHECK(modmath::is_prime(n));
    for (std::uint64_t n : {1ull, 4ull, 91ull, 65535ull, 4294967295ull})
        CHECK(!modmath::is_prime(n));
    RandomStream rng(1);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t b = rng.below(1000), e = rng.below(50),
                            n = 2 + rng.below(1000);
        CHECK(modmath::powmod(b, e, n) == naive_powmod(b, e, n));
    }
}

TEST_CASE("prime generation hits the requested width") {
    RandomStream rng(2);
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t p = modmath::random_prime(8, rng);
        CHECK(p >= 128);
        CHECK(p < 256);
        CHECK(modmath::is_prime(p));
    }
}

TEST_CASE("RSA key generation") {
    RandomStream rng(3);
    for (int i = 0; i < 20; ++i) {
        const RsaKey key = rsa_gen(16, rng);
        CHECK(key.p != key.q);
        CHECK(key.p >= 128);
        CHECK(key.p < 256);
        CHECK(key.q >= 128);
        CHECK(key.q < 256);
        CHECK(key.n == key.p * key.q);
        const std::uint64_t phi = (key.p - 1) * (key.q - 1);
        CHECK(modmath::mulmod(key.e, key.d, phi) == 1);
        CHECK(modmath::gcd(key.e, phi) == 1);
    }
    CHECK_THROWS_AS(rsa_gen(7, rng), std::invalid_argument);
}

TEST_CASE("deterministic-hash RSA signing against a forced table") {
    // N = 77 = 7 * 11, e = 7, d = 43; h forced to the constant 2.
    const RsaKey key{77, 7, 43, 7, 11, 0};
    FunctionTable table = constant_table(Params{3, 0, 6}, 2);
    IdealHashOracle oracle(table);
    SchemeInstance fdh = instantiate_rsa_fdh(key, oracle);

    RandomStream rng(4);
    const BitString m(5, 3);
    const Signature sig = fdh.sign(m, rng);
    CHECK(sig.x == naive_powmod(2, 43, 77));
    CHECK(sig.x == 30);
    CHECK(naive_powmod(30, 7, 77) == 2);
    CHECK(fdh.verify(m, sig));
    CHECK_THROWS_AS(fdh.sign(BitString(0, 4), rng), std::invalid_argument);
}

TEST_CASE("signature bit flips are rejected") {
    RandomStream rng(5);
    const RsaKey key = rsa_gen(16, rng);
    FunctionTable table(Params{8, 0, 8}, rng);
    IdealHashOracle oracle(table);
    SchemeInstance fdh = instantiate_rsa_fdh(key, oracle);

    int rejected = 0;
    const int trials = 300;
    for (int i = 0; i < trials; ++i) {
        const BitString m(rng.bits(8), 8);
        Signature sig = fdh.sign(m, rng);
        sig.x ^= 1ull << rng.below(14);
        if (!fdh.verify(m, sig)) ++rejected;
    }
    CHECK(rejected > trials * 9 / 10);  // chance acceptance ~ 2^-8 per trial
}

TEST_CASE("salted full-domain-hash round-trips and salt discipline") {
    RandomStream rng(6);
    const RsaKey key = rsa_gen(16, rng);
    const unsigned k1 = 4;
    FunctionTable table(Params{8, k1, 8}, rng);
    IdealHashOracle oracle(table);
    SchemeInstance pfdh = instantiate_rsa_pfdh(key, oracle, k1);
    CHECK(pfdh.msg_bits == 8);
    roundtrip(pfdh, rng);

    // Salt freshness: 200 signatures of one message use many distinct salts.
    std::set<std::uint32_t> salts;
    const BitString m(77, 8);
    for (int i = 0; i < 200; ++i) salts.insert(pfdh.sign(m, rng).salt.bits);
    CHECK(salts.size() > 10);

    // A swapped salt almost never verifies.
    int rejected = 0;
    for (int i = 0; i < 200; ++i) {
        Signature sig = pfdh.sign(m, rng);
        sig.salt = BitString(sig.salt.bits ^ 1u, k1);
        if (!pfdh.verify(m, sig)) ++rejected;
    }
    CHECK(rejected > 180);
    Signature sig = pfdh.sign(m, rng);
    sig.salt = BitString(0, 5);
    CHECK(!pfdh.verify(m, sig));
}

TEST_CASE("xor-salted variant masks the hash value") {
    RandomStream rng(7);
    const RsaKey key = rsa_gen(16, rng);
    const Params hp{4, 4, 4};
    FunctionTable table = constant_table(hp, 0b0110);
    IdealHashOracle oracle(table);
    SchemeInstance xord = instantiate_rsa_pfdh_xor(key, oracle);
    roundtrip(xord, rng, 100);

    // Hand-built signature: r = 0101, w = 0110, y = 0011.
    const BitString m(9, 4);
    const Signature hand{Signature::Kind::PfdhXor, BitString(0b0101, 4),
                         modmath::powmod(0b0011, key.d, key.n), 0, 0};
    CHECK(xord.verify(m, hand));

    // r = w makes y = 0: 0^d = 0 must round-trip.
    const Signature zero{Signature::Kind::PfdhXor, BitString(0b0110, 4), 0, 0, 0};
    CHECK(xord.verify(m, zero));
}

TEST_CASE("padded encoding verifies prefix and width") {
    RandomStream rng(8);
    const RsaKey key = rsa_gen(16, rng);
    FunctionTable table(Params{8, 0, 8}, rng);
    IdealHashOracle oracle(table);
    const BitString s(1, 2), alg(2, 2);
    SchemeInstance pkcs = instantiate_rsassa_pkcs15(key, oracle, s, alg);
    roundtrip(pkcs, rng);

    // Re-encoding with a wrong algorithm tag must fail the prefix check.
    const BitString m(33, 8);
    const std::uint32_t w = ro_query(table, m).bits;
    const std::uint64_t bad_y = ((((1ull << 2) | 3ull) << 8) | w);  // alg tag 11
    const Signature forged{Signature::Kind::Pkcs, {},
                           modmath::powmod(bad_y, key.d, key.n), 0, 0};
    CHECK(!pkcs.verify(m, forged));

    // Configurations whose encoding cannot embed into Z_N are rejected.
    FunctionTable wide(Params{8, 0, 12}, rng);
    IdealHashOracle wide_oracle(wide);
    CHECK_THROWS_AS(instantiate_rsassa_pkcs15(key, wide_oracle, s, alg),
                    std::invalid_argument);
}

TEST_CASE("discrete-log group generation") {
    RandomStream rng(9);
    for (int i = 0; i < 5; ++i) {
        const DsaGroup grp = dsa_grgen(8, 20, rng);
        CHECK(modmath::is_prime(grp.p));
        CHECK(modmath::is_prime(grp.q));
        CHECK((grp.p - 1) % grp.q == 0);
        CHECK(grp.q >= 128);
        CHECK(grp.q < 256);
        CHECK(grp.p >= (1ull << 19));
        CHECK(grp.p < (1ull << 20));
        CHECK(grp.g != 1);
        CHECK(modmath::powmod(grp.g, grp.q, grp.p) == 1);
    }
}

TEST_CASE("discrete-log signing on a hand-checked group") {
    // p = 11, q = 5, g = 4 (4^5 = 1024 = 1 mod 11), x = 3, y = 4^3 = 9.
    const DsaKey key{{11, 5, 4}, 3, 9};
    CHECK(modmath::powmod(4, 3, 11) == 9);
    FunctionTable table = constant_table(Params{2, 0, 1}, 1);  // z = 1
    IdealHashOracle oracle(table);
    SchemeInstance dsa = instantiate_dsa(key, oracle);

    // Hand arithmetic for nonce 1: r = 4, s = 1 * (1 + 3*4) mod 5 = 3;
    // verification: w = 2, u1 = 2, u2 = 3, v = (16 * 729 mod 11) mod 5 = 4.
    const BitString m(0, 2);
    const Signature hand{Signature::Kind::Dsa, {}, 0, 4, 3};
    CHECK((naive_powmod(4, 2, 11) * naive_powmod(9, 3, 11)) % 11 % 5 == 4);
    CHECK(dsa.verify(m, hand));

    // Nonce 2 gives r = (16 mod 11) mod 5 = 0; signing must retry such
    // nonces, so produced components are always in range.
    RandomStream rng(10);
    for (int i = 0; i < 200; ++i) {
        const Signature sig = dsa.sign(m, rng);
        CHECK(sig.r >= 1);
        CHECK(sig.r < 5);
        CHECK(sig.s >= 1);
        CHECK(sig.s < 5);
        CHECK(dsa.verify(m, sig));
    }

    CHECK_THROWS_AS(dsa.verify(m, Signature{Signature::Kind::Dsa, {}, 0, 0, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dsa.verify(m, Signature{Signature::Kind::Dsa, {}, 0, 4, 5}),
                    std::invalid_argument);
}

TEST_CASE("full-size round-trips for every scheme") {
    RandomStream rng(11);
    {
        const RsaKey key = rsa_gen(16, rng);
        FunctionTable t(Params{8, 4, 8}, rng);
        IdealHashOracle o(t);
        SchemeInstance inst = instantiate_rsa_fdh(key, o);
        CHECK(inst.msg_bits == 12);
        roundtrip(inst, rng);
    }
    {
        const DsaKey key = dsa_gen(8, 24, rng);
        FunctionTable t(Params{8, 0, 8}, rng);
        IdealHashOracle o(t);
        SchemeInstance inst = instantiate_dsa(key, o);
        roundtrip(inst, rng);
    }
}

TEST_CASE("schemes query the hash exactly once per sign and verify") {
    RandomStream rng(12);
    const RsaKey key = rsa_gen(16, rng);
    FunctionTable t(Params{8, 4, 8}, rng);
    IdealHashOracle ideal(t);
    CountingHashOracle counter(ideal);
    SchemeInstance inst = instantiate_rsa_pfdh(key, counter, 4);

    const BitString m(200, 8);
    const Signature sig = inst.sign(m, rng);
    CHECK(counter.count() == 1);
    inst.verify(m, sig);
    CHECK(counter.count() == 2);
}
