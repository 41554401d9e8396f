#include "wrom/schemes.hpp"

#include <stdexcept>

#include "wrom/modmath.hpp"

namespace wrom {

using namespace modmath;

namespace {

void require_msg(BitString m, unsigned bits, const char* scheme) {
    if (m.width != bits)
        throw std::invalid_argument(std::string(scheme) + ": message length mismatch");
}

void require_embedding(const RsaKey& key, unsigned k, const char* scheme) {
    if (k >= 63 || key.n <= (1ull << k))
        throw std::invalid_argument(std::string(scheme) +
                                    ": modulus too small for k-bit hash embedding");
}

}  // namespace

std::string to_string(const Signature& sig) {
    switch (sig.kind) {
        case Signature::Kind::Fdh:
        case Signature::Kind::Pkcs:
            return std::to_string(sig.x);
        case Signature::Kind::Pfdh:
        case Signature::Kind::PfdhXor:
            return to_string(sig.salt) + ":" + std::to_string(sig.x);
        case Signature::Kind::Dsa:
            return std::to_string(sig.r) + ":" + std::to_string(sig.s);
    }
    return {};
}

RsaKey rsa_gen(unsigned modbits, RandomStream& rng) {
    if (modbits < 8 || modbits % 2 != 0)
        throw std::invalid_argument("rsa_gen: modbits must be even and >= 8");
    const unsigned half = modbits / 2;
    std::uint64_t p = random_prime(half, rng);
    std::uint64_t q;
    do {
        q = random_prime(half, rng);
    } while (q == p);

    const std::uint64_t n = p * q;
    const std::uint64_t phi = (p - 1) * (q - 1);
    std::uint64_t e;
    do {
        e = rng.below(phi);
    } while (e == 0 || gcd(e, phi) != 1);
    return {n, e, modinv(e, phi), p, q, modbits};
}

DsaGroup dsa_grgen(unsigned kbits, unsigned jbits, RandomStream& rng) {
    if (kbits < 3) throw std::invalid_argument("dsa_grgen: kbits must be >= 3");
    if (jbits <= kbits) throw std::invalid_argument("dsa_grgen: jbits must exceed kbits");
    for (;;) {
        const std::uint64_t q = random_prime(kbits, rng);
        // Search p = q*c + 1 of exactly jbits bits.
        const std::uint64_t lo = 1ull << (jbits - 1), hi = 1ull << jbits;
        for (int tries = 0; tries < 4096; ++tries) {
            const std::uint64_t cmin = lo / q + 1, cmax = (hi - 1) / q;
            if (cmin > cmax) break;
            const std::uint64_t c = cmin + rng.below(cmax - cmin + 1);
            const std::uint64_t p = q * c + 1;
            if (p < lo || p >= hi || !is_prime(p)) continue;
            for (;;) {
                const std::uint64_t x = 1 + rng.below(p - 1);
                const std::uint64_t g = powmod(x, (p - 1) / q, p);
                if (g != 1) return {p, q, g};
            }
        }
    }
}

DsaKey dsa_gen(unsigned kbits, unsigned jbits, RandomStream& rng) {
    DsaGroup grp = dsa_grgen(kbits, jbits, rng);
    // x = 0 would make the public key trivial and, when a message hashes to
    // 0 mod q, force s = 0 for every nonce, so signing could never terminate.
    const std::uint64_t x = 1 + rng.below(grp.q - 1);
    return {grp, x, powmod(grp.g, x, grp.p)};
}

SchemeInstance instantiate_rsa_fdh(const RsaKey& key, HashOracle& oracle) {
    const Params& hp = oracle.params();
    require_embedding(key, hp.k, "rsa-fdh");
    const unsigned msg_bits = hp.input_bits();
    HashOracle* h = &oracle;

    SchemeInstance inst;
    inst.name = "rsa-fdh";
    inst.msg_bits = msg_bits;
    inst.sign = [key, h, msg_bits](BitString m, RandomStream&) {
        require_msg(m, msg_bits, "rsa-fdh");
        const std::uint64_t y = h->query(m).bits;
        return Signature{Signature::Kind::Fdh, {}, powmod(y, key.d, key.n), 0, 0};
    };
    inst.verify = [key, h, msg_bits](BitString m, const Signature& sig) {
        require_msg(m, msg_bits, "rsa-fdh");
        return h->query(m).bits == powmod(sig.x, key.e, key.n);
    };
    return inst;
}

SchemeInstance instantiate_rsa_pfdh(const RsaKey& key, HashOracle& oracle,
                                    unsigned k1) {
    const Params& hp = oracle.params();
    require_embedding(key, hp.k, "rsa-pfdh");
    if (hp.input_bits() < k1)
        throw std::invalid_argument("rsa-pfdh: oracle input shorter than salt");
    const unsigned msg_bits = hp.input_bits() - k1;
    HashOracle* h = &oracle;

    SchemeInstance inst;
    inst.name = "rsa-pfdh";
    inst.msg_bits = msg_bits;
    inst.sign = [key, h, msg_bits, k1](BitString m, RandomStream& rng) {
        require_msg(m, msg_bits, "rsa-pfdh");
        const BitString r(rng.bits(k1), k1);
        const std::uint64_t y = h->query(concat(m, r)).bits;
        return Signature{Signature::Kind::Pfdh, r, powmod(y, key.d, key.n), 0, 0};
    };
    inst.verify = [key, h, msg_bits, k1](BitString m, const Signature& sig) {
        require_msg(m, msg_bits, "rsa-pfdh");
        if (sig.salt.width != k1) return false;
        return h->query(concat(m, sig.salt)).bits == powmod(sig.x, key.e, key.n);
    };
    return inst;
}

SchemeInstance instantiate_rsa_pfdh_xor(const RsaKey& key, HashOracle& oracle) {
    const Params& hp = oracle.params();
    require_embedding(key, hp.k, "rsa-pfdh-xor");
    if (hp.input_bits() < hp.k)
        throw std::invalid_argument("rsa-pfdh-xor: oracle input shorter than salt");
    const unsigned msg_bits = hp.input_bits() - hp.k;
    const unsigned k = hp.k;
    HashOracle* h = &oracle;

    SchemeInstance inst;
    inst.name = "rsa-pfdh-xor";
    inst.msg_bits = msg_bits;
    inst.sign = [key, h, msg_bits, k](BitString m, RandomStream& rng) {
        require_msg(m, msg_bits, "rsa-pfdh-xor");
        const BitString r(rng.bits(k), k);
        const std::uint64_t w = h->query(concat(m, r)).bits;
        const std::uint64_t y = (w ^ r.bits) % key.n;  // vacuous: N > 2^k
        return Signature{Signature::Kind::PfdhXor, r, powmod(y, key.d, key.n), 0, 0};
    };
    inst.verify = [key, h, msg_bits, k](BitString m, const Signature& sig) {
        require_msg(m, msg_bits, "rsa-pfdh-xor");
        if (sig.salt.width != k) return false;
        const std::uint64_t y = powmod(sig.x, key.e, key.n);
        const std::uint64_t w = h->query(concat(m, sig.salt)).bits;
        return (w ^ sig.salt.bits) == y;
    };
    return inst;
}

SchemeInstance instantiate_rsassa_pkcs15(const RsaKey& key, HashOracle& oracle,
                                         BitString s, BitString hash_alg_id) {
    const Params& hp = oracle.params();
    const unsigned k2 = hp.k;
    const unsigned k_total = s.width + hash_alg_id.width + k2;
    require_embedding(key, k_total, "rsassa-pkcs15");
    const unsigned msg_bits = hp.input_bits();
    const std::uint64_t prefix =
        (static_cast<std::uint64_t>(s.bits) << hash_alg_id.width) | hash_alg_id.bits;
    HashOracle* h = &oracle;

    SchemeInstance inst;
    inst.name = "rsassa-pkcs15";
    inst.msg_bits = msg_bits;
    inst.sign = [key, h, msg_bits, prefix, k2](BitString m, RandomStream&) {
        require_msg(m, msg_bits, "rsassa-pkcs15");
        const std::uint64_t w = h->query(m).bits;
        const std::uint64_t y = (prefix << k2) | w;
        return Signature{Signature::Kind::Pkcs, {}, powmod(y, key.d, key.n), 0, 0};
    };
    inst.verify = [key, h, msg_bits, prefix, k2, k_total](BitString m,
                                                          const Signature& sig) {
        require_msg(m, msg_bits, "rsassa-pkcs15");
        const std::uint64_t y = powmod(sig.x, key.e, key.n);
        if (y >> k_total) return false;  // cannot re-encode as a k-bit string
        if ((y >> k2) != prefix) return false;
        const std::uint64_t w = y & ((1ull << k2) - 1);
        return h->query(m).bits == w;
    };
    return inst;
}

SchemeInstance instantiate_dsa(const DsaKey& key, HashOracle& oracle) {
    const DsaGroup& grp = key.group;
    const unsigned msg_bits = oracle.params().input_bits();
    HashOracle* h = &oracle;

    SchemeInstance inst;
    inst.name = "dsa";
    inst.msg_bits = msg_bits;
    inst.sign = [key, grp, h, msg_bits](BitString m, RandomStream& rng) {
        require_msg(m, msg_bits, "dsa");
        const std::uint64_t z = h->query(m).bits % grp.q;
        for (;;) {
            const std::uint64_t kappa = rng.below(grp.q);
            if (kappa == 0) continue;
            const std::uint64_t r = powmod(grp.g, kappa, grp.p) % grp.q;
            if (r == 0) continue;
            const std::uint64_t s = mulmod(
                modinv(kappa, grp.q), (z + mulmod(key.x, r, grp.q)) % grp.q, grp.q);
            if (s == 0) continue;
            return Signature{Signature::Kind::Dsa, {}, 0, r, s};
        }
    };
    inst.verify = [key, grp, h, msg_bits](BitString m, const Signature& sig) {
        require_msg(m, msg_bits, "dsa");
        if (sig.r == 0 || sig.r >= grp.q || sig.s == 0 || sig.s >= grp.q)
            throw std::invalid_argument("dsa: signature component out of range");
        const std::uint64_t w = modinv(sig.s, grp.q);
        const std::uint64_t z = h->query(m).bits % grp.q;
        const std::uint64_t u1 = mulmod(z, w, grp.q);
        const std::uint64_t u2 = mulmod(sig.r, w, grp.q);
        const std::uint64_t v =
            mulmod(powmod(grp.g, u1, grp.p), powmod(key.y, u2, grp.p), grp.p) % grp.q;
        return v == sig.r;
    };
    return inst;
}

}  // namespace wrom
