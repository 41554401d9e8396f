#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace wrom {

// Runs per_index(acc, i) for i in [0, n) across `workers` threads, each with
// its own accumulator, then merges accumulators in thread order. Index-keyed
// seeding keeps results independent of the partitioning.
template <class Acc, class PerIndex, class Merge>
Acc parallel_accumulate(std::uint64_t n, unsigned workers, Acc init,
                        PerIndex per_index, Merge merge) {
    if (workers <= 1 || n < 2) {
        Acc acc = init;
        for (std::uint64_t i = 0; i < n; ++i) per_index(acc, i);
        return acc;
    }
    if (workers > n) workers = static_cast<unsigned>(n);

    std::vector<Acc> parts(workers, init);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = n * w / workers;
        const std::uint64_t hi = n * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) per_index(parts[w], i);
        });
    }
    for (auto& t : threads) t.join();

    Acc acc = init;
    for (const Acc& part : parts) merge(acc, part);
    return acc;
}

}  // namespace wrom
