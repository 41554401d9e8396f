#include "wrom/lazy_sim.hpp"

#include <stdexcept>

#include "wrom/binomial.hpp"

namespace wrom {

namespace {

[[noreturn]] void inconsistent(const char* what) {
    throw std::logic_error(std::string("lazy simulator state inconsistent: ") + what);
}

}  // namespace

const LazyHashState::PrefixClass* LazyHashState::find_cls(std::uint32_t r) const {
    auto it = classes_.find(r);
    return it == classes_.end() ? nullptr : &it->second;
}

std::optional<std::uint32_t> LazyHashState::lookup_t(std::uint32_t m,
                                                     std::uint32_t r) const {
    const PrefixClass* c = find_cls(r);
    if (!c) return std::nullopt;
    auto it = c->t.find(m);
    if (it == c->t.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint64_t> LazyHashState::lookup_l(std::uint32_t y,
                                                     std::uint32_t r) const {
    const PrefixClass* c = find_cls(r);
    if (!c) return std::nullopt;
    auto it = c->l.find(y);
    if (it == c->l.end()) return std::nullopt;
    return it->second;
}

std::size_t LazyHashState::t_count(std::uint32_t r) const {
    const PrefixClass* c = find_cls(r);
    return c ? c->t.size() : 0;
}

std::size_t LazyHashState::t_count(std::uint32_t r, std::uint32_t y) const {
    const PrefixClass* c = find_cls(r);
    if (!c) return 0;
    auto it = c->fibers.find(y);
    return it == c->fibers.end() ? 0 : it->second.size();
}

std::size_t LazyHashState::l_count(std::uint32_t r) const {
    const PrefixClass* c = find_cls(r);
    return c ? c->l.size() : 0;
}

std::uint64_t LazyHashState::l_sum(std::uint32_t r) const {
    const PrefixClass* c = find_cls(r);
    if (!c) return 0;
    std::uint64_t sum = 0;
    for (const auto& [y, n] : c->l) sum += n;
    return sum;
}

void LazyHashState::insert_t(std::uint32_t m, std::uint32_t r, std::uint32_t y) {
    PrefixClass& c = cls(r);
    if (!c.t.emplace(m, y).second) inconsistent("duplicate T entry");
    c.fibers[y].push_back(m);
}

void LazyHashState::insert_l(std::uint32_t y, std::uint32_t r, std::uint64_t n) {
    if (!cls(r).l.emplace(y, n).second) inconsistent("duplicate L entry");
}

std::uint32_t LazyHashState::mint_fresh_message(std::uint32_t r, RandomStream& rng) {
    const PrefixClass& c = cls(r);
    if (c.t.size() >= params_.message_count())
        inconsistent("minting with no free message");
    for (;;) {
        auto m = static_cast<std::uint32_t>(rng.below(params_.message_count()));
        if (!c.t.contains(m)) return m;
    }
}

void LazyHashState::validate() const {
    for (const auto& [r, c] : classes_) {
        std::uint64_t lsum = 0;
        for (const auto& [y, n] : c.l) lsum += n;
        if (lsum > params_.message_count()) inconsistent("sum of L counts exceeds #M");
        if (c.l.size() > params_.output_count()) inconsistent("#L(r) exceeds #Y");

        std::size_t fiber_total = 0;
        for (const auto& [y, ms] : c.fibers) {
            fiber_total += ms.size();
            auto it = c.l.find(y);
            if (it == c.l.end()) inconsistent("T output missing from L");
            if (it->second < ms.size()) inconsistent("L count below #T(r, y)");
            for (std::uint32_t m : ms) {
                auto tt = c.t.find(m);
                if (tt == c.t.end() || tt->second != y)
                    inconsistent("fiber view out of sync with T");
            }
        }
        if (fiber_total != c.t.size()) inconsistent("fiber view misses T entries");
    }
}

BitString prefix_ro(LazyHashState& state, BitString x, RandomStream& rng) {
    const Params& p = state.params();
    if (x.width != p.input_bits())
        throw std::invalid_argument("prefix_ro: input length mismatch");
    auto [mm, rr] = split_suffix(x, p.t);
    const std::uint32_t m = mm.bits, r = rr.bits;

    if (auto known = state.lookup_t(m, r)) return BitString(*known, p.k);

    LazyHashState::PrefixClass& c = state.cls(r);
    const std::uint64_t n_msgs = p.message_count();
    const std::uint64_t denom = n_msgs - c.t.size();
    if (denom == 0) inconsistent("no uncommitted message for a fresh query");

    std::uint64_t pending = 0;  // sum over L of (n - #T(r, y))
    for (const auto& [y, n] : c.l) {
        const std::size_t committed = state.t_count(r, y);
        if (n < committed) inconsistent("L count below committed entries");
        pending += n - committed;
    }
    if (pending > denom) inconsistent("pending preimages exceed free messages");

    // Known-value branch: the fresh input lands on an already-committed hash
    // value, weighted by its remaining preimage budget.
    if (pending > 0 && rng.below(denom) < pending) {
        std::uint64_t pick = rng.below(pending);
        for (const auto& [y, n] : c.l) {
            const std::uint64_t w = n - state.t_count(r, y);
            if (pick < w) {
                state.insert_t(m, r, y);
                return BitString(y, p.k);
            }
            pick -= w;
        }
        inconsistent("weighted selection ran past L");
    }

    // Fresh-value branch: uniform unused y, binomially committed fiber size.
    const std::uint64_t used = c.l.size();
    if (used >= p.output_count()) inconsistent("fresh branch with no unused value");
    std::uint32_t y;
    do {
        y = rng.bits(p.k);
    } while (c.l.contains(y));

    std::uint64_t committed_total = 0;
    for (const auto& [yy, n] : c.l) committed_total += n;
    const std::uint64_t n_prime = sample_binomial(
        {n_msgs - committed_total - 1,
         1.0 / static_cast<double>(p.output_count() - used)},
        rng);
    state.insert_l(y, r, n_prime + 1);
    state.insert_t(m, r, y);
    return BitString(y, p.k);
}

std::optional<BitString> prefix_ro_bar(LazyHashState& state, BitString x,
                                       RandomStream& rng) {
    const Params& p = state.params();
    if (x.width != p.input_bits())
        throw std::invalid_argument("prefix_ro_bar: input length mismatch");
    auto [mm, rr] = split_suffix(x, p.t);
    const std::uint32_t m = mm.bits, r = rr.bits;

    if (auto known = state.lookup_t(m, r)) return BitString(*known, p.k);

    LazyHashState::PrefixClass& c = state.cls(r);
    const std::uint32_t y = rng.bits(p.k);
    if (c.l.contains(y)) return std::nullopt;

    std::uint64_t committed_total = 0;
    for (const auto& [yy, n] : c.l) committed_total += n;
    // With every message already committed to a used value a fresh value is
    // impossible; the exact algorithm never reaches this point (p = 1 there),
    // so it falls under the overline deviation and counts as an abort.
    if (committed_total >= p.message_count()) return std::nullopt;

    const std::uint64_t n_prime = sample_binomial(
        {p.message_count() - committed_total - 1,
         1.0 / static_cast<double>(p.output_count() - c.l.size())},
        rng);
    state.insert_l(y, r, n_prime + 1);
    state.insert_t(m, r, y);
    return BitString(y, p.k);
}

// Algorithm CP-CO with the RO part pluggable so the exact and overline
// variants share one transcription.
struct CpCoRunner {
static BarAnswer run(LazyHashState& state, BitString r, BitString rp,
                     RandomStream& rng, bool overline) {
    const Params& p = state.params();
    if (r.width != p.t || rp.width != p.t)
        throw std::invalid_argument("cp_co: prefix length mismatch");

    const auto m = static_cast<std::uint32_t>(rng.below(p.message_count()));
    const BitString x = concat(BitString(m, p.ell), r);

    std::uint32_t y;
    if (overline) {
        auto out = prefix_ro_bar(state, x, rng);
        if (!out) return {true, OracleAnswer::bot()};
        y = out->bits;
    } else {
        y = prefix_ro(state, x, rng).bits;
    }

    const bool same = r.bits == rp.bits;
    if (!state.lookup_l(y, rp.bits)) {
        if (same) throw std::logic_error("cp_co: prefix-RO left its own value out of L");
        const std::uint64_t committed = state.l_sum(rp.bits);
        const std::size_t used = state.l_count(rp.bits);
        const std::uint64_t n_prime = sample_binomial(
            {p.message_count() - committed,
             1.0 / static_cast<double>(p.output_count() - used)},
            rng);
        state.insert_l(y, rp.bits, n_prime);
    }

    const std::uint64_t n = *state.lookup_l(y, rp.bits);
    if (n == 0) return {false, OracleAnswer::bot()};

    if (same && n == 1) return {false, OracleAnswer::bot()};

    const std::size_t recorded = state.t_count(rp.bits, y);
    const std::uint64_t reusable = same ? recorded - 1 : recorded;
    const std::uint64_t pool = same ? n - 1 : n;
    if (reusable > pool) throw std::logic_error("cp_co: more T entries than L allows");

    std::uint32_t partner;
    if (reusable > 0 && rng.below(pool) < reusable) {
        // Reuse a recorded entry; for r = r' the first element itself is excluded.
        std::uint64_t pick = rng.below(reusable);
        const auto& ms = state.cls(rp.bits).fibers.at(y);
        partner = ms[0];  // overwritten below
        bool found = false;
        for (std::uint32_t cand : ms) {
            if (same && cand == m) continue;
            if (pick-- == 0) {
                partner = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("cp_co: partner selection ran past fiber");
    } else {
        partner = state.mint_fresh_message(rp.bits, rng);
        state.insert_t(partner, rp.bits, y);
    }
    return {false,
            OracleAnswer::pair(x, concat(BitString(partner, p.ell), rp))};
}
};

OracleAnswer cp_co_sim(LazyHashState& state, BitString r, BitString rp,
                       RandomStream& rng) {
    BarAnswer out = CpCoRunner::run(state, r, rp, rng, /*overline=*/false);
    if (out.aborted) throw std::logic_error("cp_co_sim: exact variant aborted");
    return out.answer;
}

BarAnswer cp_co_bar(LazyHashState& state, BitString r, BitString rp,
                    RandomStream& rng) {
    return CpCoRunner::run(state, r, rp, rng, /*overline=*/true);
}

}  // namespace wrom
