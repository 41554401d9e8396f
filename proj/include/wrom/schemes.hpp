#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "wrom/bitstring.hpp"
#include "wrom/function_table.hpp"
#include "wrom/oracles.hpp"
#include "wrom/params.hpp"
#include "wrom/rng.hpp"

namespace wrom {

// Hash access point for the schemes. A scheme never touches a table directly;
// everything goes through a handle so the same code runs in any model.
class HashOracle {
public:
    virtual ~HashOracle() = default;
    virtual BitString query(BitString x) = 0;
    virtual const Params& params() const = 0;
};

// Answers from an exhaustive table (the ideal RO).
class IdealHashOracle final : public HashOracle {
public:
    explicit IdealHashOracle(const FunctionTable& table) : table_(&table) {}
    BitString query(BitString x) override { return ro_query(*table_, x); }
    const Params& params() const override { return table_->params(); }

private:
    const FunctionTable* table_;
};

// Wrapper counting queries, for tests of the schemes' oracle discipline.
class CountingHashOracle final : public HashOracle {
public:
    explicit CountingHashOracle(HashOracle& inner) : inner_(&inner) {}
    BitString query(BitString x) override {
        ++count_;
        return inner_->query(x);
    }
    const Params& params() const override { return inner_->params(); }
    std::uint64_t count() const { return count_; }

private:
    HashOracle* inner_;
    std::uint64_t count_ = 0;
};

struct RsaKey {
    std::uint64_t n;  // modulus, product of two distinct primes
    std::uint64_t e;
    std::uint64_t d;
    std::uint64_t p;
    std::uint64_t q;
    unsigned modbits;
};

// p, q distinct primes of modbits/2 bits; e uniform in Z_phi, redrawn until
// invertible; e*d = 1 mod phi(N).
RsaKey rsa_gen(unsigned modbits, RandomStream& rng);

struct DsaGroup {
    std::uint64_t p;  // jbits-bit prime
    std::uint64_t q;  // kbits-bit prime dividing p - 1
    std::uint64_t g;  // generator of the order-q subgroup, g != 1
};

DsaGroup dsa_grgen(unsigned kbits, unsigned jbits, RandomStream& rng);

struct DsaKey {
    DsaGroup group;
    std::uint64_t x;  // secret, in [0, q-1]
    std::uint64_t y;  // g^x mod p
};

DsaKey dsa_gen(unsigned kbits, unsigned jbits, RandomStream& rng);

struct Signature {
    enum class Kind { Fdh, Pfdh, PfdhXor, Pkcs, Dsa };
    Kind kind = Kind::Fdh;
    BitString salt;        // PFDH: k1 bits, PFDH-xor: k bits
    std::uint64_t x = 0;   // RSA signature value
    std::uint64_t r = 0;   // DSA
    std::uint64_t s = 0;   // DSA

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

// Gen/Sign/Verify closed over a key and an oracle handle.
struct SchemeInstance {
    std::string name;
    unsigned msg_bits = 0;
    std::function<Signature(BitString m, RandomStream& rng)> sign;
    std::function<bool(BitString m, const Signature& sig)> verify;
};

// Fig. "RSA-FDH": sigma = h(m)^d mod N. Requires N > 2^k so the k-bit hash
// embeds injectively (big-endian) into Z_N.
SchemeInstance instantiate_rsa_fdh(const RsaKey& key, HashOracle& oracle);

// Fig. "RSA-PFDH": fresh k1-bit salt r, sigma = (r, h(m||r)^d mod N).
// The oracle's input space must be ell + k1 bits with prefix length k1.
SchemeInstance instantiate_rsa_pfdh(const RsaKey& key, HashOracle& oracle,
                                    unsigned k1);

// Fig. "RSA-PFDH xor": fresh k-bit salt r, w = h(m||r),
// sigma = (r, (w xor r)^d mod N).
SchemeInstance instantiate_rsa_pfdh_xor(const RsaKey& key, HashOracle& oracle);

// Fig. "RSASSA-PKCS-v1.5": sigma = (s||HashAlgID||h(m))^d mod N, with the
// verifier re-encoding sigma^e as a fixed-width string and rejecting on a
// prefix mismatch. Rejects configurations with 2^(k1+c+k2) >= N.
SchemeInstance instantiate_rsassa_pkcs15(const RsaKey& key, HashOracle& oracle,
                                         BitString s, BitString hash_alg_id);

// Fig. "DSA": r = (g^kappa mod p) mod q, s = kappa^{-1}(z + x r) mod q with
// z = int(h(m)) mod q; degenerate kappa/r/s are redrawn.
SchemeInstance instantiate_dsa(const DsaKey& key, HashOracle& oracle);

}  // namespace wrom
