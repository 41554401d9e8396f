#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace wrom {

// Finite distribution over string-encoded outcomes.
struct Distribution {
    std::map<std::string, double> mass;

    // Masses non-negative and summing to 1 within 1e-12.
    void validate() const;
};

// Delta(P, Q) = (1/2) sum_s |P(s) - Q(s)| over the union of supports.
double statistical_distance(const Distribution& p, const Distribution& q);

}  // namespace wrom
