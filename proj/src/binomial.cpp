#include "wrom/binomial.hpp"

#include <cmath>
#include <stdexcept>

namespace wrom {

std::uint64_t sample_binomial(const BinomialSpec& spec, RandomStream& rng) {
    const std::uint64_t n = spec.trials;
    const double p = spec.success_prob;
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_binomial: p outside [0, 1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;

    const double u = rng.real01();
    const double log_ratio = std::log(p) - std::log1p(-p);

    // log pmf(i+1) = log pmf(i) + log(n-i) - log(i+1) + log(p/(1-p))
    double log_pmf = static_cast<double>(n) * std::log1p(-p);
    double cdf = std::exp(log_pmf);
    std::uint64_t i = 0;
    while (u >= cdf && i < n) {
        log_pmf += std::log(static_cast<double>(n - i)) -
                   std::log(static_cast<double>(i + 1)) + log_ratio;
        ++i;
        cdf += std::exp(log_pmf);
    }
    return i;
}

}  // namespace wrom
