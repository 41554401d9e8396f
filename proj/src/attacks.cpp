#include "wrom/attacks.hpp"

#include <algorithm>

namespace wrom {

namespace {

std::string log_line(const std::string& oracle, const std::string& query,
                     const OracleAnswer& ans) {
    return oracle + "(" + query + ") -> " + to_string(ans);
}

}  // namespace

AttackOutcome attack_collision_forge(
    GameHandle& game, const std::function<OracleAnswer()>& collision_oracle) {
    AttackOutcome out;
    const OracleAnswer ans = collision_oracle();
    out.transcript.push_back(log_line("collision-oracle", "", ans));
    if (ans.bottom) return out;

    const Signature sigma = game.sign_query(ans.first);
    out.aborted = false;
    out.message = *ans.second;
    out.signature = sigma;
    return out;
}

AttackOutcome attack_second_preimage_forge(
    GameHandle& game,
    const std::function<OracleAnswer(BitString x, BitString rp)>& cp_spo,
    BitString message) {
    AttackOutcome out;
    const Signature sigma = game.sign_query(message);
    const BitString x = concat(message, sigma.salt);

    const OracleAnswer ans = cp_spo(x, sigma.salt);
    out.transcript.push_back(log_line("cp-spo", to_string(x), ans));
    if (ans.bottom) return out;

    auto [partner_msg, partner_prefix] = split_suffix(ans.first, sigma.salt.width);
    out.aborted = false;
    out.message = partner_msg;
    out.signature = sigma;
    return out;
}

AttackOutcome security_control_probe(
    GameHandle& game,
    const std::function<OracleAnswer(BitString r, BitString rp)>& cp_co,
    std::uint64_t budget, unsigned salt_bits, RandomStream& rng) {
    AttackOutcome out;
    if (budget == 0) return out;

    struct Pair {
        BitString message;  // first element's message part
        BitString salt;     // shared prefix
        BitString partner;  // second element's message part
    };
    std::vector<Pair> collected;
    for (std::uint64_t i = 0; i < budget; ++i) {
        const BitString r(rng.bits(salt_bits), salt_bits);
        const OracleAnswer ans = cp_co(r, r);
        out.transcript.push_back(log_line("cp-co", to_string(r), ans));
        if (ans.bottom) continue;
        auto [m, r1] = split_suffix(ans.first, salt_bits);
        auto [mp, r2] = split_suffix(*ans.second, salt_bits);
        collected.push_back({m, r1, mp});
    }
    if (collected.empty()) return out;

    std::vector<BitString> signed_msgs;
    for (std::uint64_t i = 0; i < budget; ++i) {
        const Pair& pair = collected[i % collected.size()];
        const Signature sigma = game.sign_query(pair.message);
        signed_msgs.push_back(pair.message);
        if (sigma.salt != pair.salt) continue;
        if (std::find(signed_msgs.begin(), signed_msgs.end(), pair.partner) !=
            signed_msgs.end())
            continue;  // partner already signed, a forgery would not be fresh
        out.aborted = false;
        out.message = pair.partner;
        out.signature = sigma;
        return out;
    }
    return out;
}

}  // namespace wrom
