#include "wrom/function_table.hpp"

#include <stdexcept>

namespace wrom {

FunctionTable::FunctionTable(const Params& params, RandomStream& rng)
    : params_(params) {
    const std::uint32_t n = params_.input_count();
    out_.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) out_[x] = rng.bits(params_.k);
    build_fibers();
}

FunctionTable::FunctionTable(const Params& params, std::vector<std::uint32_t> outputs)
    : params_(params), out_(std::move(outputs)) {
    if (out_.size() != params_.input_count())
        throw std::invalid_argument("FunctionTable: output vector size mismatch");
    for (std::uint32_t y : out_)
        if (y >= params_.output_count())
            throw std::invalid_argument("FunctionTable: output out of range");
    build_fibers();
}

void FunctionTable::build_fibers() {
    const std::size_t cells = static_cast<std::size_t>(params_.output_count())
                              << params_.t;
    const std::uint32_t n = params_.input_count();
    const std::uint32_t rmask = params_.prefix_count() - 1;

    fiber_off_.assign(cells + 1, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        const std::size_t i = (static_cast<std::size_t>(out_[x]) << params_.t) |
                              (x & rmask);
        ++fiber_off_[i + 1];
    }
    for (std::size_t i = 0; i < cells; ++i) fiber_off_[i + 1] += fiber_off_[i];

    fiber_m_.resize(n);
    std::vector<std::uint32_t> cursor(fiber_off_.begin(), fiber_off_.end() - 1);
    for (std::uint32_t x = 0; x < n; ++x) {
        const std::size_t i = (static_cast<std::size_t>(out_[x]) << params_.t) |
                              (x & rmask);
        fiber_m_[cursor[i]++] = x >> params_.t;
    }
}

}  // namespace wrom
