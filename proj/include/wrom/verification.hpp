#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wrom/bitstring.hpp"
#include "wrom/distribution.hpp"
#include "wrom/params.hpp"
#include "wrom/rng.hpp"

namespace wrom {

class FunctionTable;

// Tally of outcomes from repeated sampling.
class EmpiricalDistribution {
public:
    void add(const std::string& outcome) {
        ++counts_[outcome];
        ++total_;
    }

    std::uint64_t total() const { return total_; }
    const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

    Distribution to_distribution() const;

    void merge(const EmpiricalDistribution& other);

private:
    std::map<std::string, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

// n invocations of sampler, tallied. n >= 1.
EmpiricalDistribution collect_empirical(const std::function<std::string()>& sampler,
                                        std::uint64_t n);

struct ChiSquareVerdict {
    double statistic;
    double critical;
    bool reject;
};

// Pearson test of e against the uniform distribution on support_size cells.
// Requires expected count per cell >= 5.
ChiSquareVerdict chi_square_uniform(const EmpiricalDistribution& e,
                                    std::uint64_t support_size,
                                    double significance = 1e-3);

// Plug-in total-variation distance between two empirical distributions.
double tv_empirical(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

// Bias-corrected total-variation estimate: the plug-in distance minus its
// expected value under equal distributions (per-cell half-normal mean from
// the pooled frequencies), clamped at zero. The plug-in estimator has a
// noise floor of order sqrt(support/samples), which at script-output support
// sizes sits above the fidelity tolerances being tested.
double tv_debiased(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

// TV distance from e to the uniform distribution over support_size outcomes;
// `name` maps an outcome index to its tally key.
double tv_to_uniform(const EmpiricalDistribution& e, std::uint64_t support_size,
                     const std::function<std::string(std::uint64_t)>& name);

struct MaxLoadResult {
    std::uint64_t tables;
    std::uint64_t bad_count;
    double bad_frequency;
    double threshold;  // load threshold L
    double bound;      // 1 / (#Y)^2
};

// Draws `tables` fresh random r-class columns (2^ell outputs each, which is
// the full distribution of the per-prefix loads n_{y,r}) and counts how often
// some hash value's preimage count exceeds the threshold.
MaxLoadResult max_load_experiment(const Params& params, std::uint64_t tables,
                                  std::uint64_t seed, unsigned workers = 1);

// (5 ln#Y / lnln#Y) * (#M/#Y) when #M >= #Y, else (5 ln#Y / lnln#Y).
double lemma1_threshold(const Params& params);

struct Lemma4Result {
    double delta_estimate;
    double bound;
    std::uint64_t queries;  // q = q_h + 2 q_sc of the probed script
};

// (1/#Y)(5q + 1 + 4q^2/#Y + 20q ln#Y/lnln#Y), with #Y replaced by #M in the
// #M < #Y case.
double lemma4_bound(const Params& params, std::uint64_t q);

// One fixed adversary strategy: given oracle access, outputs a point x whose
// correspondence (x, h(x)) the oracles have not revealed. The script appends
// every input string the oracles revealed to `revealed`; the probe rejects a
// script whose chosen x appears there.
struct AdversaryScript {
    std::string name;
    std::uint64_t q_h = 0;
    std::uint64_t q_sc = 0;
    std::function<BitString(const FunctionTable& table, RandomStream& rng,
                            std::vector<BitString>& revealed)>
        choose;
};

AdversaryScript script_oracle_independent(const Params& params);
AdversaryScript script_collision_probing(const Params& params, std::uint64_t q_sc);

// Estimates the TV distance between the hash of the script's chosen point and
// uniform over fresh random tables, next to the closed-form bound.
Lemma4Result lemma4_probe(const AdversaryScript& script, const Params& params,
                          std::uint64_t samples, std::uint64_t seed,
                          unsigned workers = 1);

}  // namespace wrom
