#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wrom {

struct ExperimentResult {
    std::string scheme;
    std::string model;
    std::string attack;
    unsigned l = 0, t = 0, k = 0;
    unsigned modbits = 0, k1 = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double empirical_rate = 0.0;
    double theoretical_bound = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t wall_ms = 0;

    friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

enum class ResultFormat { Json, Csv };

ResultFormat parse_format(const std::string& name);  // "json" | "csv"

std::string format_results(const std::vector<ExperimentResult>& results,
                           ResultFormat format);

// Writes the declared schema to `path`; parse_results round-trips it exactly.
void emit_results(const std::vector<ExperimentResult>& results,
                  ResultFormat format, const std::string& path);

std::vector<ExperimentResult> parse_results(const std::string& path,
                                            ResultFormat format);

}  // namespace wrom
