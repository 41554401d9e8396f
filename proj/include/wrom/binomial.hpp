#pragma once

#include <cstdint>

#include "wrom/rng.hpp"

namespace wrom {

// B(N, p) with N trials and success probability p.
struct BinomialSpec {
    std::uint64_t trials;
    double success_prob;
};

// Exact inverse-CDF draw from B(N, p). The PMF is walked with a log-space
// recurrence so large N and tiny p do not underflow. No normal or Poisson
// approximation anywhere; the simulator fidelity lemmas assume exactness.
std::uint64_t sample_binomial(const BinomialSpec& spec, RandomStream& rng);

}  // namespace wrom
