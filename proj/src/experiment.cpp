#include "wrom/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "wrom/attacks.hpp"
#include "wrom/function_table.hpp"
#include "wrom/lazy_sim.hpp"
#include "wrom/oracles.hpp"
#include "wrom/parallel.hpp"
#include "wrom/schemes.hpp"
#include "wrom/stats.hpp"
#include "wrom/verification.hpp"

namespace wrom {

ModelKind parse_model(const std::string& name) {
    if (name == "rom") return ModelKind::Rom;
    if (name == "ct") return ModelKind::Ct;
    if (name == "spt") return ModelKind::Spt;
    if (name == "fpt") return ModelKind::Fpt;
    if (name == "common-cp-ct") return ModelKind::CommonCpCt;
    if (name == "cp-ct") return ModelKind::CpCt;
    if (name == "cp-spt") return ModelKind::CpSpt;
    if (name == "cp-fpt") return ModelKind::CpFpt;
    throw std::invalid_argument("unknown model: " + name);
}

SchemeKind parse_scheme(const std::string& name) {
    if (name == "rsa-fdh") return SchemeKind::RsaFdh;
    if (name == "rsa-pfdh") return SchemeKind::RsaPfdh;
    if (name == "rsa-pfdh-xor") return SchemeKind::RsaPfdhXor;
    if (name == "rsassa-pkcs") return SchemeKind::RsassaPkcs;
    if (name == "dsa") return SchemeKind::Dsa;
    throw std::invalid_argument("unknown scheme: " + name);
}

AttackKind parse_attack(const std::string& name) {
    if (name == "collision") return AttackKind::Collision;
    if (name == "second-preimage") return AttackKind::SecondPreimage;
    if (name == "probe") return AttackKind::Probe;
    throw std::invalid_argument("unknown attack: " + name);
}

std::string to_string(ModelKind m) {
    switch (m) {
        case ModelKind::Rom: return "rom";
        case ModelKind::Ct: return "ct";
        case ModelKind::Spt: return "spt";
        case ModelKind::Fpt: return "fpt";
        case ModelKind::CommonCpCt: return "common-cp-ct";
        case ModelKind::CpCt: return "cp-ct";
        case ModelKind::CpSpt: return "cp-spt";
        case ModelKind::CpFpt: return "cp-fpt";
    }
    throw std::logic_error("to_string(ModelKind)");
}

std::string to_string(SchemeKind s) {
    switch (s) {
        case SchemeKind::RsaFdh: return "rsa-fdh";
        case SchemeKind::RsaPfdh: return "rsa-pfdh";
        case SchemeKind::RsaPfdhXor: return "rsa-pfdh-xor";
        case SchemeKind::RsassaPkcs: return "rsassa-pkcs";
        case SchemeKind::Dsa: return "dsa";
    }
    throw std::logic_error("to_string(SchemeKind)");
}

std::string to_string(AttackKind a) {
    switch (a) {
        case AttackKind::Collision: return "collision";
        case AttackKind::SecondPreimage: return "second-preimage";
        case AttackKind::Probe: return "probe";
    }
    throw std::logic_error("to_string(AttackKind)");
}

Params hash_params(const ExperimentConfig& config) {
    switch (config.scheme) {
        case SchemeKind::RsaPfdh:
            return Params{config.l, config.k1, config.k};
        case SchemeKind::RsaPfdhXor:
            return Params{config.l, config.k, config.k};
        default:
            return Params{config.l, config.t, config.k};
    }
}

namespace {

bool deterministic_hash_scheme(SchemeKind s) {
    return s == SchemeKind::RsaFdh || s == SchemeKind::RsassaPkcs ||
           s == SchemeKind::Dsa;
}

bool salted_scheme(SchemeKind s) {
    return s == SchemeKind::RsaPfdh || s == SchemeKind::RsaPfdhXor;
}

unsigned rsa_embed_bits(const ExperimentConfig& config) {
    if (config.scheme == SchemeKind::RsassaPkcs)
        return config.pkcs_s.width + config.pkcs_alg_id.width + config.k;
    return config.k;
}

}  // namespace

void validate_config(const ExperimentConfig& config) {
    const Params hp = hash_params(config);  // ctor rejects bad shapes

    const bool classic = config.model == ModelKind::Rom ||
                         config.model == ModelKind::Ct ||
                         config.model == ModelKind::Spt ||
                         config.model == ModelKind::Fpt;
    if (classic && hp.t != 0)
        throw std::invalid_argument(
            "model " + to_string(config.model) + " requires prefix length 0");

    switch (config.attack) {
        case AttackKind::Collision:
            if (config.model != ModelKind::Ct &&
                config.model != ModelKind::CommonCpCt)
                throw std::invalid_argument(
                    "collision attack needs a collision oracle (model ct or "
                    "common-cp-ct), not " + to_string(config.model));
            if (!deterministic_hash_scheme(config.scheme))
                throw std::invalid_argument(
                    "collision attack targets deterministic-hash schemes; " +
                    to_string(config.scheme) + " salts its hash input");
            break;
        case AttackKind::SecondPreimage:
            if (config.model != ModelKind::CpSpt)
                throw std::invalid_argument(
                    "second-preimage attack needs model cp-spt, not " +
                    to_string(config.model));
            if (!salted_scheme(config.scheme))
                throw std::invalid_argument(
                    "second-preimage attack targets the salted schemes, not " +
                    to_string(config.scheme));
            break;
        case AttackKind::Probe:
            if (config.model != ModelKind::CpCt)
                throw std::invalid_argument("probe needs model cp-ct, not " +
                                            to_string(config.model));
            if (!salted_scheme(config.scheme))
                throw std::invalid_argument(
                    "probe targets the salted schemes, not " +
                    to_string(config.scheme));
            break;
    }

    if (config.scheme != SchemeKind::Dsa) {
        if (config.modbits < 8 || config.modbits % 2 != 0)
            throw std::invalid_argument("modbits must be even and >= 8");
        // Both prime factors have their top bit set, so N >= 2^(modbits-2);
        // the hash embedding needs N > 2^embed.
        if (rsa_embed_bits(config) > config.modbits - 2)
            throw std::invalid_argument(
                "modulus too small for the hash embedding");
    } else {
        if (config.jbits <= config.k || config.jbits > 62)
            throw std::invalid_argument("jbits must be in (k, 62]");
    }
    if (config.attack_prefix >> hp.t && hp.t < 32)
        throw std::invalid_argument("attack prefix does not fit t bits");
    if (config.trials == 0)
        throw std::invalid_argument("trials must be >= 1");
}

std::string to_string(const GameTranscript& g) {
    std::string out;
    switch (g.verdict) {
        case GameVerdict::Win: out = "verdict: win\n"; break;
        case GameVerdict::Lose: out = "verdict: lose\n"; break;
        case GameVerdict::Abort: out = "verdict: abort\n"; break;
    }
    for (const auto& line : g.oracle_queries) out += "oracle: " + line + "\n";
    for (const auto& line : g.signing_queries) out += "sign: " + line + "\n";
    if (!g.forgery.empty()) out += "forgery: " + g.forgery + "\n";
    return out;
}

GameTranscript run_game(const ExperimentConfig& config, std::uint64_t trial_index) {
    const Params hp = hash_params(config);
    RandomStream rng = RandomStream::derive(config.seed, trial_index);
    FunctionTable table(hp, rng);
    IdealHashOracle oracle(table);

    RsaKey rsa_key{};
    DsaKey dsa_key{};
    SchemeInstance inst;
    switch (config.scheme) {
        case SchemeKind::RsaFdh:
            rsa_key = rsa_gen(config.modbits, rng);
            inst = instantiate_rsa_fdh(rsa_key, oracle);
            break;
        case SchemeKind::RsaPfdh:
            rsa_key = rsa_gen(config.modbits, rng);
            inst = instantiate_rsa_pfdh(rsa_key, oracle, config.k1);
            break;
        case SchemeKind::RsaPfdhXor:
            rsa_key = rsa_gen(config.modbits, rng);
            inst = instantiate_rsa_pfdh_xor(rsa_key, oracle);
            break;
        case SchemeKind::RsassaPkcs:
            rsa_key = rsa_gen(config.modbits, rng);
            inst = instantiate_rsassa_pkcs15(rsa_key, oracle, config.pkcs_s,
                                             config.pkcs_alg_id);
            break;
        case SchemeKind::Dsa:
            dsa_key = dsa_gen(config.k, config.jbits, rng);
            inst = instantiate_dsa(dsa_key, oracle);
            break;
    }

    GameTranscript transcript;
    std::vector<BitString> signed_msgs;
    GameHandle handle{&inst, [&](BitString m) {
                          const Signature sigma = inst.sign(m, rng);
                          signed_msgs.push_back(m);
                          transcript.signing_queries.push_back(
                              to_string(m) + " -> " + to_string(sigma));
                          return sigma;
                      }};

    AttackOutcome outcome;
    switch (config.attack) {
        case AttackKind::Collision: {
            const BitString prefix(config.attack_prefix, hp.t);
            outcome = attack_collision_forge(handle, [&] {
                return config.model == ModelKind::Ct
                           ? co_query(table, rng)
                           : common_cp_co_query(table, prefix, rng);
            });
            break;
        }
        case AttackKind::SecondPreimage: {
            const BitString m(rng.bits(hp.ell), hp.ell);
            outcome = attack_second_preimage_forge(
                handle,
                [&](BitString x, BitString rp) {
                    return cp_spo_query(table, x, rp, rng);
                },
                m);
            break;
        }
        case AttackKind::Probe:
            outcome = security_control_probe(
                handle,
                [&](BitString r, BitString rp) {
                    return cp_co_query(table, r, rp, rng);
                },
                config.budget, hp.t, rng);
            break;
    }
    transcript.oracle_queries = outcome.transcript;

    if (!outcome.aborted)
        transcript.forgery =
            to_string(outcome.message) + " / " + to_string(outcome.signature);
    transcript.verdict = judge(inst, signed_msgs, outcome);
    return transcript;
}

GameVerdict judge(const SchemeInstance& scheme,
                  const std::vector<BitString>& signed_messages,
                  const AttackOutcome& outcome) {
    if (outcome.aborted) return GameVerdict::Abort;
    const bool fresh =
        std::find(signed_messages.begin(), signed_messages.end(),
                  outcome.message) == signed_messages.end();
    bool valid = false;
    try {
        valid = scheme.verify(outcome.message, outcome.signature);
    } catch (const std::invalid_argument&) {
        valid = false;  // out-of-range signature components never verify
    }
    return fresh && valid ? GameVerdict::Win : GameVerdict::Lose;
}

ExperimentResult run_trials(const ExperimentConfig& config) {
    validate_config(config);
    const auto start = std::chrono::steady_clock::now();

    const std::uint64_t wins = parallel_accumulate(
        config.trials, config.workers, std::uint64_t{0},
        [&](std::uint64_t& acc, std::uint64_t i) {
            if (run_game(config, i).verdict == GameVerdict::Win) ++acc;
        },
        [](std::uint64_t& acc, const std::uint64_t& part) { acc += part; });

    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    const Params hp = hash_params(config);
    ExperimentResult res;
    res.scheme = to_string(config.scheme);
    res.model = to_string(config.model);
    res.attack = to_string(config.attack);
    res.l = hp.ell;
    res.t = hp.t;
    res.k = hp.k;
    res.modbits = config.scheme == SchemeKind::Dsa ? 0 : config.modbits;
    res.k1 = config.scheme == SchemeKind::RsaPfdh ? config.k1 : 0;
    res.trials = config.trials;
    res.successes = wins;
    res.empirical_rate =
        static_cast<double>(wins) / static_cast<double>(config.trials);
    res.theoretical_bound = config_bound(config);
    const stats::WilsonInterval ci = stats::wilson95(wins, config.trials);
    res.wilson_lo = ci.lo;
    res.wilson_hi = ci.hi;
    res.seed = config.seed;
    res.wall_ms = static_cast<std::uint64_t>(wall.count());
    return res;
}

double forgery_bound(unsigned free_bits, unsigned hash_bits) {
    return 1.0 - std::exp((1.0 - std::exp2(static_cast<double>(free_bits))) /
                          std::exp2(static_cast<double>(hash_bits)));
}

double forgery_exact(unsigned free_bits, unsigned hash_bits) {
    const double others = std::exp2(static_cast<double>(free_bits)) - 1.0;
    const double miss = 1.0 - std::exp2(-static_cast<double>(hash_bits));
    return 1.0 - std::pow(miss, others);
}

double second_preimage_clause_bound() { return 1.0 - std::exp(-0.5); }

double salt_reuse_term(std::uint64_t q_sign, std::uint64_t q_h,
                       std::uint64_t q_sc, unsigned k1) {
    const double q2 = static_cast<double>(q_sign + q_h + 2 * q_sc + 1);
    return static_cast<double>(q_sign) * q2 / std::exp2(static_cast<double>(k1));
}

double abort_probability_bound(const Params& params, std::uint64_t q) {
    const double ny = static_cast<double>(params.output_count());
    const double nm = static_cast<double>(params.message_count());
    const double qd = static_cast<double>(q);
    const double load_term = std::log(ny) / std::log(std::log(ny)) * 10.0 * qd /
                             (nm >= ny ? ny : nm);
    return load_term + 1.0 / (ny * ny) + qd / ny;
}

double config_bound(const ExperimentConfig& config) {
    const Params hp = hash_params(config);
    switch (config.attack) {
        case AttackKind::Collision:
            return forgery_bound(hp.ell, hp.k);
        case AttackKind::SecondPreimage:
            // The strengthened clause applies when l >= k >= 2; otherwise
            // the generic bound over the salt class.
            if (hp.ell >= hp.k && hp.k >= 2) return second_preimage_clause_bound();
            return forgery_bound(hp.ell, hp.k);
        case AttackKind::Probe:
            return std::min(
                1.0, salt_reuse_term(config.budget, 0, config.budget, hp.t));
    }
    throw std::logic_error("config_bound");
}

FidelityResult fidelity_experiment(const Params& params, std::uint64_t samples,
                                   std::uint64_t seed, unsigned workers) {
    if (samples == 0)
        throw std::invalid_argument("fidelity_experiment: samples == 0");

    // Fixed script: three hash queries spanning two prefix classes, then two
    // collision queries (one same-prefix, one cross-prefix).
    const unsigned in_bits = params.input_bits();
    const std::vector<BitString> ro_inputs = {
        BitString(0, in_bits),
        BitString(1u % (1u << in_bits), in_bits),
        BitString((1u << in_bits) - 1u, in_bits)};
    const BitString r0(0, params.t);
    const BitString r1(params.t == 0 ? 0 : 1, params.t);

    auto run_side = [&](bool simulator, std::uint64_t base) {
        return parallel_accumulate(
            samples, workers, EmpiricalDistribution{},
            [&](EmpiricalDistribution& acc, std::uint64_t i) {
                RandomStream rng = RandomStream::derive(base, i);
                std::string outcome;
                if (simulator) {
                    LazyHashState state(params);
                    for (BitString x : ro_inputs)
                        outcome += to_string(prefix_ro(state, x, rng)) + ";";
                    outcome += to_string(cp_co_sim(state, r0, r0, rng)) + ";";
                    outcome += to_string(cp_co_sim(state, r1, r0, rng)) + ";";
                } else {
                    FunctionTable table(params, rng);
                    for (BitString x : ro_inputs)
                        outcome += to_string(ro_query(table, x)) + ";";
                    outcome += to_string(cp_co_query(table, r0, r0, rng)) + ";";
                    outcome += to_string(cp_co_query(table, r1, r0, rng)) + ";";
                }
                acc.add(outcome);
            },
            [](EmpiricalDistribution& acc, const EmpiricalDistribution& part) {
                acc.merge(part);
            });
    };

    const EmpiricalDistribution sim = run_side(true, seed);
    const EmpiricalDistribution ideal = run_side(false, seed ^ 0x5eedf00dull);
    return {tv_debiased(sim, ideal), samples};
}

AbortRateResult abort_rate_experiment(const Params& params, std::uint64_t q_h,
                                      std::uint64_t q_sc, std::uint64_t runs,
                                      std::uint64_t seed, unsigned workers) {
    if (runs == 0)
        throw std::invalid_argument("abort_rate_experiment: runs == 0");

    const std::uint64_t aborts = parallel_accumulate(
        runs, workers, std::uint64_t{0},
        [&](std::uint64_t& acc, std::uint64_t i) {
            RandomStream rng = RandomStream::derive(seed, i);
            LazyHashState state(params);
            for (std::uint64_t j = 0; j < q_h; ++j) {
                const BitString x(rng.bits(params.input_bits()),
                                  params.input_bits());
                if (!prefix_ro_bar(state, x, rng)) {
                    ++acc;
                    return;
                }
            }
            for (std::uint64_t j = 0; j < q_sc; ++j) {
                const BitString r(rng.bits(params.t), params.t);
                const BitString rp(rng.bits(params.t), params.t);
                if (cp_co_bar(state, r, rp, rng).aborted) {
                    ++acc;
                    return;
                }
            }
        },
        [](std::uint64_t& acc, const std::uint64_t& part) { acc += part; });

    const double rate = static_cast<double>(aborts) / static_cast<double>(runs);
    const double bound = abort_probability_bound(params, q_h + 2 * q_sc);
    const double sigma =
        std::sqrt(std::max(rate * (1.0 - rate), 1.0 / static_cast<double>(runs)) /
                  static_cast<double>(runs));
    return {runs, aborts, rate, bound, sigma};
}

}  // namespace wrom
