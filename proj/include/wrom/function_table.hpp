#pragma once

#include <span>
#include <vector>

#include "wrom/bitstring.hpp"
#include "wrom/params.hpp"
#include "wrom/rng.hpp"

namespace wrom {

// Exhaustive table of a random function h: {0,1}^(ell+t) -> {0,1}^k, together
// with its fiber decomposition indexed by (y, r). This is the ground truth all
// ideal oracles answer from and the reference the lazy simulators are checked
// against.
class FunctionTable {
public:
    // Every input gets an independently uniform k-bit output drawn from rng.
    FunctionTable(const Params& params, RandomStream& rng);

    // Table with explicitly given outputs, indexed by x = (m << t) | r.
    // Used by tests to force degenerate shapes (constant, identity, ...).
    FunctionTable(const Params& params, std::vector<std::uint32_t> outputs);

    const Params& params() const { return params_; }

    // h(x) for x encoded as (m << t) | r.
    std::uint32_t value(std::uint32_t x) const { return out_[x]; }

    // All m with h(m||r) = y, in increasing order of m.
    std::span<const std::uint32_t> fiber(std::uint32_t y, std::uint32_t r) const {
        const std::size_t i = (static_cast<std::size_t>(y) << params_.t) | r;
        return {fiber_m_.data() + fiber_off_[i], fiber_m_.data() + fiber_off_[i + 1]};
    }

private:
    void build_fibers();

    Params params_;
    std::vector<std::uint32_t> out_;        // x -> y
    std::vector<std::uint32_t> fiber_off_;  // CSR offsets over (y, r)
    std::vector<std::uint32_t> fiber_m_;    // m values grouped by (y, r)
};

}  // namespace wrom
