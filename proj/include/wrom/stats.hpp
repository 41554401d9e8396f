#pragma once

#include <cstdint>

namespace wrom::stats {

// Upper quantile of the chi-square distribution with df degrees of freedom:
// the value c with Pr[X > c] = significance.
double chi_square_critical(unsigned df, double significance);

// Pr[Bin(n, p) <= observed], exact up to floating-point summation.
double binomial_cdf(std::uint64_t observed, std::uint64_t n, double p);

struct WilsonInterval {
    double lo;
    double hi;
};

// Wilson score interval at confidence 95%.
WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials);

}  // namespace wrom::stats
