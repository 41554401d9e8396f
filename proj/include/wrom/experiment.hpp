#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrom/attacks.hpp"
#include "wrom/bitstring.hpp"
#include "wrom/params.hpp"
#include "wrom/results.hpp"

namespace wrom {

// The eight hash models: the plain random oracle plus the seven weakenings,
// each granting the random oracle and at most one extra oracle.
enum class ModelKind { Rom, Ct, Spt, Fpt, CommonCpCt, CpCt, CpSpt, CpFpt };

enum class SchemeKind { RsaFdh, RsaPfdh, RsaPfdhXor, RsassaPkcs, Dsa };

enum class AttackKind { Collision, SecondPreimage, Probe };

ModelKind parse_model(const std::string& name);
SchemeKind parse_scheme(const std::string& name);
AttackKind parse_attack(const std::string& name);
std::string to_string(ModelKind m);
std::string to_string(SchemeKind s);
std::string to_string(AttackKind a);

struct ExperimentConfig {
    SchemeKind scheme = SchemeKind::RsaFdh;
    ModelKind model = ModelKind::CommonCpCt;
    AttackKind attack = AttackKind::Collision;

    unsigned l = 8;   // message bits (free part of the hash input)
    unsigned t = 0;   // prefix bits, deterministic-hash schemes only
    unsigned k = 8;   // hash output bits

    unsigned modbits = 16;  // RSA modulus size
    unsigned k1 = 4;        // PFDH salt bits
    unsigned jbits = 24;    // DSA large-prime size

    BitString pkcs_s{1, 2};        // fixed padding prefix
    BitString pkcs_alg_id{2, 2};   // hash-algorithm tag

    std::uint32_t attack_prefix = 0;  // prefix argument of the collision attack

    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    std::uint64_t budget = 64;  // probe attack query budget
    unsigned workers = 1;
};

// Shape of the hash function the configured scheme signs with. The PFDH
// family's salt is the prefix (t = k1 resp. k); deterministic-hash schemes
// sign the whole (l + t)-bit input.
Params hash_params(const ExperimentConfig& config);

// Throws std::invalid_argument on any inconsistency: unknown combinations,
// an attack needing an oracle its model does not grant, a classic model with
// t > 0, or size constraints (modulus too small for the hash embedding).
void validate_config(const ExperimentConfig& config);

enum class GameVerdict { Win, Lose, Abort };

struct GameTranscript {
    GameVerdict verdict = GameVerdict::Abort;
    std::vector<std::string> signing_queries;  // "m -> sigma" lines, in order
    std::vector<std::string> oracle_queries;   // extra-oracle lines, in order
    std::string forgery;                       // empty when aborted
};

std::string to_string(const GameTranscript& g);

// Scores a finished attack. Abort dominates; a verifying forgery wins only if
// its message was never signed, no matter what the attack claims. Verifier
// exceptions on malformed signatures count as rejection.
GameVerdict judge(const SchemeInstance& scheme,
                  const std::vector<BitString>& signed_messages,
                  const AttackOutcome& outcome);

// One full forgery game: fresh hash table and keys from the trial-derived
// stream, the configured attack against a challenger that records every
// signing query, verdict under the freshness rule (a forgery of a message
// that was ever signed loses, no matter what the verifier says).
GameTranscript run_game(const ExperimentConfig& config, std::uint64_t trial_index);

ExperimentResult run_trials(const ExperimentConfig& config);

// Closed-form quantities reported next to empirical rates.

// 1 - e^{(1 - 2^free_bits)/2^hash_bits}, the generic forgery lower bound.
double forgery_bound(unsigned free_bits, unsigned hash_bits);

// 1 - (1 - 2^{-hash_bits})^{2^free_bits - 1}: the exact probability that a
// uniformly chosen point has a colliding partner among the other points of
// its prefix class.
double forgery_exact(unsigned free_bits, unsigned hash_bits);

// 1 - e^{-1/2}, the strengthened second-preimage clause for l >= k >= 2.
double second_preimage_clause_bound();

// q_sign * Q2 / 2^k1 with Q2 = q_sign + q_h + 2 q_sc + 1: the salt-collision
// term of the PFDH security bounds.
double salt_reuse_term(std::uint64_t q_sign, std::uint64_t q_h,
                       std::uint64_t q_sc, unsigned k1);

// Simplified-simulator deviation bound for q = q_h + 2 q_sc queries:
//   (ln#Y / lnln#Y) 10q/#Y + 1/#Y^2 + q/#Y   when #M >= #Y,
// with #Y replaced by #M in the first term otherwise.
double abort_probability_bound(const Params& params, std::uint64_t q);

// The bound the configured experiment is checked against.
double config_bound(const ExperimentConfig& config);

// Joint-fidelity experiment: a fixed five-step script (three RO queries, two
// chosen-prefix collision queries) run per sample against the lazy simulator
// and against a fresh exhaustive table; outputs tallied as strings and
// compared by bias-corrected TV distance.
struct FidelityResult {
    double tv;
    std::uint64_t samples;  // per side
};
FidelityResult fidelity_experiment(const Params& params, std::uint64_t samples,
                                   std::uint64_t seed, unsigned workers = 1);

// Abort-rate experiment for the simplified simulators: per run, a fresh lazy
// state takes q_h random hash queries and q_sc random collision queries
// through the aborting variants; counts runs with at least one abort.
struct AbortRateResult {
    std::uint64_t runs;
    std::uint64_t aborts;
    double rate;
    double bound;       // abort_probability_bound at q = q_h + 2 q_sc
    double sigma;       // sqrt(rate (1-rate) / runs) Monte-Carlo deviation
};
AbortRateResult abort_rate_experiment(const Params& params, std::uint64_t q_h,
                                      std::uint64_t q_sc, std::uint64_t runs,
                                      std::uint64_t seed, unsigned workers = 1);

}  // namespace wrom
