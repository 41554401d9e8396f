#include "wrom/oracles.hpp"

#include <stdexcept>

namespace wrom {

std::string to_string(const OracleAnswer& a) {
    if (a.bottom) return "bot";
    std::string s = to_string(a.first);
    if (a.second) s += "," + to_string(*a.second);
    return s;
}

namespace {

void require_width(BitString s, unsigned w, const char* what) {
    if (s.width != w)
        throw std::invalid_argument(std::string("length mismatch: ") + what);
}

void require_classic(const FunctionTable& f, const char* oracle) {
    if (f.params().t != 0)
        throw std::invalid_argument(std::string(oracle) +
                                    ": classic oracle requires t = 0");
}

BitString make_input(const Params& p, std::uint32_t m, std::uint32_t r) {
    return BitString((m << p.t) | r, p.input_bits());
}

// Uniform element of `fiber` excluding m values for which `exclude` holds.
template <class Pred>
std::optional<std::uint32_t> pick_fiber(std::span<const std::uint32_t> fiber,
                                        Pred exclude, RandomStream& rng) {
    std::size_t n = 0;
    for (std::uint32_t m : fiber)
        if (!exclude(m)) ++n;
    if (n == 0) return std::nullopt;
    std::uint64_t idx = rng.below(n);
    for (std::uint32_t m : fiber)
        if (!exclude(m) && idx-- == 0) return m;
    throw std::logic_error("pick_fiber: unreachable");
}

}  // namespace

BitString ro_query(const FunctionTable& f, BitString x) {
    require_width(x, f.params().input_bits(), "ro_query input");
    return BitString(f.value(x.bits), f.params().k);
}

OracleAnswer co_query(const FunctionTable& f, RandomStream& rng) {
    require_classic(f, "co_query");
    return cp_co_query(f, BitString(0, 0), BitString(0, 0), rng);
}

OracleAnswer spo_query(const FunctionTable& f, BitString x, RandomStream& rng) {
    require_classic(f, "spo_query");
    return cp_spo_query(f, x, BitString(0, 0), rng);
}

OracleAnswer fpo_query(const FunctionTable& f, BitString y, RandomStream& rng) {
    require_classic(f, "fpo_query");
    return cp_fpo_query(f, y, BitString(0, 0), rng);
}

OracleAnswer common_cp_co_query(const FunctionTable& f, BitString r,
                                RandomStream& rng) {
    return cp_co_query(f, r, r, rng);
}

OracleAnswer cp_co_query(const FunctionTable& f, BitString r, BitString rp,
                         RandomStream& rng) {
    const Params& p = f.params();
    require_width(r, p.t, "cp_co_query prefix r");
    require_width(rp, p.t, "cp_co_query prefix r'");

    const std::uint32_t m = static_cast<std::uint32_t>(rng.below(p.message_count()));
    const std::uint32_t x = (m << p.t) | r.bits;
    const std::uint32_t y = f.value(x);

    const bool same = r.bits == rp.bits;
    auto partner = pick_fiber(
        f.fiber(y, rp.bits), [&](std::uint32_t mp) { return same && mp == m; }, rng);
    if (!partner) return OracleAnswer::bot();
    return OracleAnswer::pair(make_input(p, m, r.bits), make_input(p, *partner, rp.bits));
}

OracleAnswer cp_spo_query(const FunctionTable& f, BitString x, BitString rp,
                          RandomStream& rng) {
    const Params& p = f.params();
    require_width(x, p.input_bits(), "cp_spo_query input");
    require_width(rp, p.t, "cp_spo_query prefix r'");

    const std::uint32_t y = f.value(x.bits);
    auto partner = pick_fiber(
        f.fiber(y, rp.bits),
        [&](std::uint32_t mp) { return ((mp << p.t) | rp.bits) == x.bits; }, rng);
    if (!partner) return OracleAnswer::bot();
    return OracleAnswer::one(make_input(p, *partner, rp.bits));
}

OracleAnswer cp_fpo_query(const FunctionTable& f, BitString y, BitString r,
                          RandomStream& rng) {
    const Params& p = f.params();
    require_width(y, p.k, "cp_fpo_query hash value");
    require_width(r, p.t, "cp_fpo_query prefix");

    auto preimage = pick_fiber(
        f.fiber(y.bits, r.bits), [](std::uint32_t) { return false; }, rng);
    if (!preimage) return OracleAnswer::bot();
    return OracleAnswer::one(make_input(p, *preimage, r.bits));
}

}  // namespace wrom
