#include "wrom/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

namespace wrom::stats {

double chi_square_critical(unsigned df, double significance) {
    if (df == 0) throw std::invalid_argument("chi_square_critical: df == 0");
    if (significance <= 0.0 || significance >= 1.0)
        throw std::invalid_argument("chi_square_critical: significance outside (0, 1)");
    boost::math::chi_squared dist(df);
    return boost::math::quantile(boost::math::complement(dist, significance));
}

double binomial_cdf(std::uint64_t observed, std::uint64_t n, double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("binomial_cdf: p outside [0, 1]");
    if (observed >= n) return 1.0;
    boost::math::binomial dist(static_cast<double>(n), p);
    return boost::math::cdf(dist, static_cast<double>(observed));
}

WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson95: trials == 0");
    constexpr double z = 1.959963984540054;  // Phi^{-1}(0.975)
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {center - half, center + half};
}

}  // namespace wrom::stats
