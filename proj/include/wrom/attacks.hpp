#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wrom/oracles.hpp"
#include "wrom/rng.hpp"
#include "wrom/schemes.hpp"

namespace wrom {

// Signing-oracle access handed to an adversary by the game runner. The
// runner, not the adversary, tracks which messages were queried.
struct GameHandle {
    const SchemeInstance* scheme;
    std::function<Signature(BitString m)> sign_query;
};

struct AttackOutcome {
    bool aborted = true;
    BitString message;
    Signature signature;
    std::vector<std::string> transcript;  // ordered (oracle, query, answer) lines
};

// Collision-replay forgery: obtain a colliding pair from the model's
// collision oracle, have the first element signed, output the second with
// the same signature. Works for any scheme whose signature depends on the
// message only through its hash (RSA-FDH, RSASSA-PKCS-v1.5, DSA); the
// harness rejects randomized-hash schemes at configuration time.
// `collision_oracle` is the CO / COMMON-CP-CO call already bound to its
// prefix argument.
AttackOutcome attack_collision_forge(
    GameHandle& game, const std::function<OracleAnswer()>& collision_oracle);

// Second-preimage forgery against the PFDH family: sign `message`, ask for
// another preimage of h(m||r) within the same prefix class r, reuse the
// signature on the partner message.
AttackOutcome attack_second_preimage_forge(
    GameHandle& game,
    const std::function<OracleAnswer(BitString x, BitString rp)>& cp_spo,
    BitString message);

// Positive control against RSA-PFDH in the CP-CT model: collect chosen-prefix
// collisions, then burn signing queries hoping the signer's salt hits a
// collected prefix. Success should scale like q_sign * Q / 2^{k1}.
AttackOutcome security_control_probe(
    GameHandle& game,
    const std::function<OracleAnswer(BitString r, BitString rp)>& cp_co,
    std::uint64_t budget, unsigned salt_bits, RandomStream& rng);

}  // namespace wrom
