#include "wrom/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wrom/function_table.hpp"
#include "wrom/oracles.hpp"
#include "wrom/parallel.hpp"
#include "wrom/stats.hpp"

namespace wrom {

Distribution EmpiricalDistribution::to_distribution() const {
    if (total_ == 0)
        throw std::invalid_argument("EmpiricalDistribution: empty tally");
    Distribution d;
    for (const auto& [s, c] : counts_)
        d.mass[s] = static_cast<double>(c) / static_cast<double>(total_);
    return d;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
    for (const auto& [s, c] : other.counts_) counts_[s] += c;
    total_ += other.total_;
}

EmpiricalDistribution collect_empirical(const std::function<std::string()>& sampler,
                                        std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("collect_empirical: n must be >= 1");
    EmpiricalDistribution e;
    for (std::uint64_t i = 0; i < n; ++i) e.add(sampler());
    return e;
}

ChiSquareVerdict chi_square_uniform(const EmpiricalDistribution& e,
                                    std::uint64_t support_size,
                                    double significance) {
    if (support_size < 2)
        throw std::invalid_argument("chi_square_uniform: support_size < 2");
    const double expected =
        static_cast<double>(e.total()) / static_cast<double>(support_size);
    if (expected < 5.0)
        throw std::invalid_argument(
            "chi_square_uniform: under-sampled (expected count per cell < 5)");

    double stat = 0.0;
    std::uint64_t seen = 0;
    for (const auto& [s, c] : e.counts()) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
        ++seen;
    }
    if (seen > support_size)
        throw std::invalid_argument("chi_square_uniform: more outcomes than support");
    stat += static_cast<double>(support_size - seen) * expected;

    const double crit =
        stats::chi_square_critical(static_cast<unsigned>(support_size - 1),
                                   significance);
    return {stat, crit, stat > crit};
}

double tv_empirical(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    return statistical_distance(a.to_distribution(), b.to_distribution());
}

double tv_debiased(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    const double na = static_cast<double>(a.total());
    const double nb = static_cast<double>(b.total());
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("tv_debiased: empty tally");

    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> joint;
    for (const auto& [s, c] : a.counts()) joint[s].first = c;
    for (const auto& [s, c] : b.counts()) joint[s].second = c;

    const double scale = std::sqrt(2.0 / std::numbers::pi) *
                         std::sqrt(1.0 / na + 1.0 / nb);
    double plug_in = 0.0, null_mean = 0.0;
    for (const auto& [s, cc] : joint) {
        const double pa = static_cast<double>(cc.first) / na;
        const double pb = static_cast<double>(cc.second) / nb;
        plug_in += std::abs(pa - pb);
        const double pooled = static_cast<double>(cc.first + cc.second) / (na + nb);
        null_mean += scale * std::sqrt(pooled * (1.0 - pooled));
    }
    return std::max(0.0, (plug_in - null_mean) / 2.0);
}

double tv_to_uniform(const EmpiricalDistribution& e, std::uint64_t support_size,
                     const std::function<std::string(std::uint64_t)>& name) {
    if (support_size == 0)
        throw std::invalid_argument("tv_to_uniform: empty support");
    const double uniform = 1.0 / static_cast<double>(support_size);
    const double n = static_cast<double>(e.total());
    double acc = 0.0;
    std::uint64_t seen = 0;
    for (std::uint64_t i = 0; i < support_size; ++i) {
        auto it = e.counts().find(name(i));
        const double mass =
            it == e.counts().end() ? 0.0 : static_cast<double>(it->second) / n;
        if (it != e.counts().end()) ++seen;
        acc += std::abs(mass - uniform);
    }
    if (seen != e.counts().size())
        throw std::invalid_argument("tv_to_uniform: tally contains foreign outcomes");
    return acc / 2.0;
}

double lemma1_threshold(const Params& params) {
    const double ny = static_cast<double>(params.output_count());
    const double base = 5.0 * std::log(ny) / std::log(std::log(ny));
    if (params.message_count() >= params.output_count())
        return base * static_cast<double>(params.message_count()) / ny;
    return base;
}

MaxLoadResult max_load_experiment(const Params& params, std::uint64_t tables,
                                  std::uint64_t seed, unsigned workers) {
    const double threshold = lemma1_threshold(params);
    const std::uint32_t n_msgs = params.message_count();
    const std::uint32_t n_out = params.output_count();

    auto bad = parallel_accumulate(
        tables, workers, std::uint64_t{0},
        [&](std::uint64_t& acc, std::uint64_t i) {
            RandomStream rng = RandomStream::derive(seed, i);
            std::vector<std::uint32_t> load(n_out, 0);
            std::uint32_t max_load = 0;
            for (std::uint32_t m = 0; m < n_msgs; ++m)
                max_load = std::max(max_load, ++load[rng.bits(params.k)]);
            if (static_cast<double>(max_load) > threshold) ++acc;
        },
        [](std::uint64_t& acc, const std::uint64_t& part) { acc += part; });

    const double ny = static_cast<double>(n_out);
    return {tables, bad,
            static_cast<double>(bad) / static_cast<double>(tables), threshold,
            1.0 / (ny * ny)};
}

double lemma4_bound(const Params& params, std::uint64_t q) {
    const double ny = static_cast<double>(params.output_count());
    const double nm = static_cast<double>(params.message_count());
    const double base = params.message_count() >= params.output_count() ? ny : nm;
    const double qd = static_cast<double>(q);
    return (5.0 * qd + 1.0 + 4.0 * qd * qd / base +
            20.0 * qd * std::log(ny) / std::log(std::log(ny))) /
           base;
}

AdversaryScript script_oracle_independent(const Params& params) {
    AdversaryScript s;
    s.name = "oracle-independent";
    s.choose = [params](const FunctionTable&, RandomStream& rng,
                        std::vector<BitString>&) {
        return BitString(rng.bits(params.input_bits()), params.input_bits());
    };
    return s;
}

AdversaryScript script_collision_probing(const Params& params, std::uint64_t q_sc) {
    AdversaryScript s;
    s.name = "collision-probing";
    s.q_sc = q_sc;
    s.choose = [params, q_sc](const FunctionTable& table, RandomStream& rng,
                              std::vector<BitString>& revealed) {
        const BitString r0(0, params.t);
        for (std::uint64_t i = 0; i < q_sc; ++i) {
            OracleAnswer ans = cp_co_query(table, r0, r0, rng);
            if (!ans.bottom) {
                revealed.push_back(ans.first);
                revealed.push_back(*ans.second);
            }
        }
        // First point of the probed prefix class the oracles did not reveal.
        for (std::uint32_t m = 0; m < params.message_count(); ++m) {
            const BitString x = concat(BitString(m, params.ell), r0);
            if (std::find(revealed.begin(), revealed.end(), x) == revealed.end())
                return x;
        }
        throw std::runtime_error("collision-probing script: no fresh point left");
    };
    return s;
}

Lemma4Result lemma4_probe(const AdversaryScript& script, const Params& params,
                          std::uint64_t samples, std::uint64_t seed,
                          unsigned workers) {
    if (samples == 0) throw std::invalid_argument("lemma4_probe: samples == 0");

    auto tally = parallel_accumulate(
        samples, workers, EmpiricalDistribution{},
        [&](EmpiricalDistribution& acc, std::uint64_t i) {
            RandomStream rng = RandomStream::derive(seed, i);
            FunctionTable table(params, rng);
            std::vector<BitString> revealed;
            const BitString x = script.choose(table, rng, revealed);
            if (std::find(revealed.begin(), revealed.end(), x) != revealed.end())
                throw std::invalid_argument(
                    "lemma4_probe: script chose an already-answered point");
            acc.add(to_string(ro_query(table, x)));
        },
        [](EmpiricalDistribution& acc, const EmpiricalDistribution& part) {
            acc.merge(part);
        });

    const double delta = tv_to_uniform(
        tally, params.output_count(),
        [&](std::uint64_t y) {
            return to_string(BitString(static_cast<std::uint32_t>(y), params.k));
        });
    const std::uint64_t q = script.q_h + 2 * script.q_sc;
    return {delta, lemma4_bound(params, q), q};
}

}  // namespace wrom
