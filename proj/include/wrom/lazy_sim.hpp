#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wrom/bitstring.hpp"
#include "wrom/oracles.hpp"
#include "wrom/params.hpp"
#include "wrom/rng.hpp"

namespace wrom {

// Shared state of the lazy-sampling simulators: the paired tables
//   T: (m, r) -> y   "the hash value of m||r is y"
//   L: (y, r) -> n   "y has n preimages with prefix r"
// Counts #T(r), #T(r, y), #L(r) and the per-(r, y) entry lists are views
// derived from the tables, not independent state.
class LazyHashState {
public:
    explicit LazyHashState(const Params& params) : params_(params) {}

    const Params& params() const { return params_; }

    // Throws std::logic_error if the T/L synchronization invariants are
    // violated. Called by tests after operations; a failure is a bug.
    void validate() const;

    std::optional<std::uint32_t> lookup_t(std::uint32_t m, std::uint32_t r) const;
    std::optional<std::uint64_t> lookup_l(std::uint32_t y, std::uint32_t r) const;

    std::size_t t_count(std::uint32_t r) const;                     // #T(r)
    std::size_t t_count(std::uint32_t r, std::uint32_t y) const;    // #T(r, y)
    std::size_t l_count(std::uint32_t r) const;                     // #L(r)
    std::uint64_t l_sum(std::uint32_t r) const;                     // sum of n over L(r)

private:
    friend BitString prefix_ro(LazyHashState&, BitString, RandomStream&);
    friend std::optional<BitString> prefix_ro_bar(LazyHashState&, BitString,
                                                  RandomStream&);
    friend struct CpCoRunner;

    struct PrefixClass {
        std::map<std::uint32_t, std::uint32_t> t;                    // m -> y
        std::map<std::uint32_t, std::uint64_t> l;                    // y -> n
        std::map<std::uint32_t, std::vector<std::uint32_t>> fibers;  // y -> ms in T
    };

    PrefixClass& cls(std::uint32_t r) { return classes_[r]; }
    const PrefixClass* find_cls(std::uint32_t r) const;

    void insert_t(std::uint32_t m, std::uint32_t r, std::uint32_t y);
    void insert_l(std::uint32_t y, std::uint32_t r, std::uint64_t n);

    // Uniform m in M with no T entry for prefix r, by rejection.
    std::uint32_t mint_fresh_message(std::uint32_t r, RandomStream& rng);

    Params params_;
    std::map<std::uint32_t, PrefixClass> classes_;
};

// Algorithm "prefix-RO": lazy random-oracle simulation whose outputs are
// distributed exactly as the ideal RO's.
BitString prefix_ro(LazyHashState& state, BitString x, RandomStream& rng);

// Algorithm "CP-CO": lazy chosen-prefix collision-oracle simulation.
OracleAnswer cp_co_sim(LazyHashState& state, BitString r, BitString rp,
                       RandomStream& rng);

// Simplified "overline" variant of prefix-RO: fresh outputs are drawn from
// all of Y and the run aborts on a clash with an already-used value.
// nullopt is the abort outcome, a first-class result.
std::optional<BitString> prefix_ro_bar(LazyHashState& state, BitString x,
                                       RandomStream& rng);

// CP-CO with the internal prefix-RO call replaced by the overline variant.
struct BarAnswer {
    bool aborted = false;
    OracleAnswer answer;
};
BarAnswer cp_co_bar(LazyHashState& state, BitString r, BitString rp,
                    RandomStream& rng);

}  // namespace wrom
