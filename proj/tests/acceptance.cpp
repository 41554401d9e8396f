// Acceptance suite: each criterion prints one pass/fail line; the process
// exits nonzero if any selected criterion fails. Invoke with a criterion
// number (1..10) to run just that one, or with no arguments for all.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "wrom/experiment.hpp"
#include "wrom/function_table.hpp"
#include "wrom/lazy_sim.hpp"
#include "wrom/results.hpp"
#include "wrom/schemes.hpp"
#include "wrom/stats.hpp"
#include "wrom/verification.hpp"

using namespace wrom;

namespace {

unsigned workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : hw;
}

struct AttackRun {
    SchemeKind scheme;
    ModelKind model;
    AttackKind attack;
    unsigned l, t, k;
    unsigned k1;
    std::uint64_t seed;
};

ExperimentResult run_attack(const AttackRun& a, std::uint64_t trials = 10000) {
    ExperimentConfig c;
    c.scheme = a.scheme;
    c.model = a.model;
    c.attack = a.attack;
    c.l = a.l;
    c.t = a.t;
    c.k = a.k;
    c.k1 = a.k1;
    c.trials = trials;
    c.seed = a.seed;
    c.workers = workers();
    return run_trials(c);
}

bool forgery_criterion(const ExperimentResult& r, double rate_floor,
                       double exact, bool check_interval, char* detail) {
    const bool above = r.empirical_rate >= rate_floor;
    const bool contains =
        !check_interval || (r.wilson_lo <= exact && exact <= r.wilson_hi);
    std::snprintf(detail, 256,
                  "%s/%s rate %.4f vs floor %.4f, wilson [%.4f, %.4f]%s exact %.4f",
                  r.scheme.c_str(), r.model.c_str(), r.empirical_rate, rate_floor,
                  r.wilson_lo, r.wilson_hi, contains ? " contains" : " misses",
                  exact);
    return above && contains;
}

bool criterion1(std::string& detail) {
    char buf[256];
    const ExperimentResult r = run_attack({SchemeKind::RsaFdh,
                                           ModelKind::CommonCpCt,
                                           AttackKind::Collision, 8, 4, 8, 0, 47});
    const bool ok =
        forgery_criterion(r, forgery_bound(8, 8), forgery_exact(8, 8), true, buf);
    detail = buf;
    return ok;
}

bool criterion2(std::string& detail) {
    char buf[256];
    bool ok = true;
    detail.clear();
    const double floor = second_preimage_clause_bound();
    for (SchemeKind scheme : {SchemeKind::RsaPfdh, SchemeKind::RsaPfdhXor}) {
        const ExperimentResult r =
            run_attack({scheme, ModelKind::CpSpt, AttackKind::SecondPreimage, 8,
                        0, 8, 4, 43});
        ok = forgery_criterion(r, floor, forgery_exact(8, 8), true, buf) && ok;
        detail += std::string(detail.empty() ? "" : "; ") + buf;
    }
    return ok;
}

bool criterion3(std::string& detail) {
    char buf[256];
    bool ok = true;
    detail.clear();
    const AttackRun runs[] = {
        {SchemeKind::RsassaPkcs, ModelKind::Ct, AttackKind::Collision, 8, 0, 8, 0, 44},
        {SchemeKind::RsassaPkcs, ModelKind::CommonCpCt, AttackKind::Collision, 8, 4, 8, 0, 47},
        {SchemeKind::Dsa, ModelKind::Ct, AttackKind::Collision, 8, 0, 8, 0, 46},
        {SchemeKind::Dsa, ModelKind::CommonCpCt, AttackKind::Collision, 8, 4, 8, 0, 48},
    };
    for (const AttackRun& a : runs) {
        const ExperimentResult r = run_attack(a);
        ok = forgery_criterion(r, forgery_bound(8, 8), forgery_exact(8, 8),
                               false, buf) &&
             ok;
        detail += std::string(detail.empty() ? "" : "; ") + buf;
    }
    return ok;
}

bool criterion4(std::string& detail) {
    const Params p{4, 0, 4};
    const std::uint64_t samples = 1000000;
    EmpiricalDistribution tally;
    for (std::uint64_t i = 0; i < samples; ++i) {
        RandomStream rng = RandomStream::derive(48, i);
        LazyHashState state(p);
        tally.add(to_string(prefix_ro(state, BitString(0, 4), rng)));
    }
    const ChiSquareVerdict v = chi_square_uniform(tally, 16, 1e-3);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "fresh-output chi-square %.2f vs critical %.2f at k=4, 10^6 samples",
                  v.statistic, v.critical);
    detail = buf;
    return !v.reject;
}

bool criterion5(std::string& detail) {
    const FidelityResult f = fidelity_experiment(Params{2, 1, 2}, 1000000, 49,
                                                 workers());
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "script TV distance %.5f (tolerance 0.01) at 10^6 samples/side",
                  f.tv);
    detail = buf;
    return f.tv <= 0.01;
}

bool criterion6(std::string& detail) {
    const AbortRateResult r =
        abort_rate_experiment(Params{8, 2, 8}, 16, 8, 100000, 50, workers());
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "abort rate %.5f vs bound %.4f + 3 sigma %.5f at q=32, 10^5 runs",
                  r.rate, r.bound, r.sigma);
    detail = buf;
    return r.rate <= r.bound + 3.0 * r.sigma;
}

bool criterion7(std::string& detail) {
    const MaxLoadResult r =
        max_load_experiment(Params{8, 2, 8}, 1000000, 51, workers());
    const double p_val =
        r.bad_count == 0
            ? 1.0
            : 1.0 - stats::binomial_cdf(r.bad_count - 1, r.tables, r.bound);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "overload count %llu of 10^6 tables, bound 1/65536, p-value %.3g",
                  (unsigned long long)r.bad_count, p_val);
    detail = buf;
    return p_val >= 1e-3;
}

bool criterion8(std::string& detail) {
    ExperimentConfig c;
    c.scheme = SchemeKind::RsaPfdh;
    c.model = ModelKind::CpCt;
    c.attack = AttackKind::Probe;
    c.l = 2;
    c.k = 4;
    c.budget = 64;
    c.trials = 10000;
    c.workers = workers();

    c.k1 = 16;
    c.seed = 52;
    const ExperimentResult wide = run_trials(c);

    c.k1 = 2;
    c.seed = 53;
    const ExperimentResult narrow = run_trials(c);

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "probe rate %.4f at 16-bit salt (<= 0.01), %.4f at 2-bit salt (> 0.05)",
                  wide.empirical_rate, narrow.empirical_rate);
    detail = buf;
    return wide.empirical_rate <= 0.01 && narrow.empirical_rate > 0.05;
}

bool criterion9(std::string& detail) {
    RandomStream rng(54);
    std::uint64_t failures = 0;
    const std::uint64_t per_scheme = 1000;

    const RsaKey rsa = rsa_gen(16, rng);
    const DsaKey dsa = dsa_gen(8, 24, rng);

    FunctionTable fdh_t(Params{8, 4, 8}, rng);
    FunctionTable pfdh_t(Params{8, 4, 8}, rng);
    FunctionTable xor_t(Params{8, 8, 8}, rng);
    FunctionTable pkcs_t(Params{8, 0, 8}, rng);
    FunctionTable dsa_t(Params{8, 0, 8}, rng);
    IdealHashOracle fdh_o(fdh_t), pfdh_o(pfdh_t), xor_o(xor_t), pkcs_o(pkcs_t),
        dsa_o(dsa_t);

    SchemeInstance schemes[] = {
        instantiate_rsa_fdh(rsa, fdh_o),
        instantiate_rsa_pfdh(rsa, pfdh_o, 4),
        instantiate_rsa_pfdh_xor(rsa, xor_o),
        instantiate_rsassa_pkcs15(rsa, pkcs_o, BitString(1, 2), BitString(2, 2)),
        instantiate_dsa(dsa, dsa_o),
    };
    for (SchemeInstance& inst : schemes) {
        for (std::uint64_t i = 0; i < per_scheme; ++i) {
            const BitString m(rng.bits(inst.msg_bits), inst.msg_bits);
            if (!inst.verify(m, inst.sign(m, rng))) ++failures;
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "5 schemes x 1000 sign/verify round-trips, %llu failures",
                  (unsigned long long)failures);
    detail = buf;
    return failures == 0;
}

bool criterion10(std::string& detail) {
    // Re-running a seeded experiment must produce byte-identical result
    // files once the wall-time field is pinned.
    ExperimentConfig c;
    c.scheme = SchemeKind::RsaFdh;
    c.model = ModelKind::CommonCpCt;
    c.attack = AttackKind::Collision;
    c.l = 8;
    c.t = 4;
    c.k = 8;
    c.trials = 2000;
    c.seed = 42;
    c.workers = workers();

    auto stable = [&](unsigned worker_count) {
        ExperimentConfig cc = c;
        cc.workers = worker_count;
        ExperimentResult r = run_trials(cc);
        r.wall_ms = 0;
        return r;
    };
    const ExperimentResult a = stable(workers());
    const ExperimentResult b = stable(workers());
    const ExperimentResult serial = stable(1);

    const std::string ja = format_results({a}, ResultFormat::Json);
    const std::string jb = format_results({b}, ResultFormat::Json);
    const std::string js = format_results({serial}, ResultFormat::Json);
    const std::string ca = format_results({a}, ResultFormat::Csv);
    const std::string cb = format_results({b}, ResultFormat::Csv);

    const bool ok = ja == jb && ja == js && ca == cb && !ja.empty();
    detail = ok ? "re-runs and worker counts give byte-identical result files"
                : "re-run output differs";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    using Criterion = bool (*)(std::string&);
    const Criterion criteria[] = {criterion1, criterion2, criterion3,
                                  criterion4, criterion5, criterion6,
                                  criterion7, criterion8, criterion9,
                                  criterion10};

    int lo = 1, hi = 10;
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
            return 2;
        }
        lo = hi = n;
    }

    bool all_ok = true;
    for (int i = lo; i <= hi; ++i) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        const bool ok = criteria[i - 1](detail);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("criterion %2d: %s  (%lld ms)  %s\n", i,
                    ok ? "PASS" : "FAIL", (long long)ms, detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
