#include "wrom/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace wrom {

void Distribution::validate() const {
    double total = 0.0;
    for (const auto& [s, m] : mass) {
        if (m < 0.0) throw std::invalid_argument("Distribution: negative mass at " + s);
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("Distribution: masses do not sum to 1");
}

double statistical_distance(const Distribution& p, const Distribution& q) {
    double acc = 0.0;
    auto it = p.mass.begin();
    auto jt = q.mass.begin();
    while (it != p.mass.end() || jt != q.mass.end()) {
        if (jt == q.mass.end() || (it != p.mass.end() && it->first < jt->first)) {
            acc += it->second;
            ++it;
        } else if (it == p.mass.end() || jt->first < it->first) {
            acc += jt->second;
            ++jt;
        } else {
            acc += std::abs(it->second - jt->second);
            ++it;
            ++jt;
        }
    }
    return acc / 2.0;
}

}  // namespace wrom
