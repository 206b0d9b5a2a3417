#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace comaj {

/// `requested` if set and nonzero, else $COMAJ_JOBS, else 1.
unsigned resolve_jobs(std::optional<unsigned> requested);

/// Splits [0, count) into fixed-size chunks handed out to `jobs` workers.
/// Each worker folds its chunks into its own copy of `init` through
/// body(begin, end, partial); the partials are then merged in worker order.
/// Callers must use an exactly commutative partial (integer counts), so the
/// result does not depend on `jobs` or on scheduling.
template <class Partial, class Body, class Merge>
Partial chunked_reduce(std::uint64_t count, unsigned jobs, std::uint64_t chunk, const Partial& init,
                       Body body, Merge merge)
{
    chunk = std::max<std::uint64_t>(chunk, 1);
    const std::uint64_t chunks = (count + chunk - 1) / chunk;
    jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(chunks, 1)));

    std::vector<Partial> partials(jobs, init);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&](unsigned w) {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks)
                break;
            const std::uint64_t begin = c * chunk;
            body(begin, std::min(count, begin + chunk), partials[w]);
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back(worker, w);
        for (auto& t : threads)
            t.join();
    }

    Partial result = std::move(partials[0]);
    for (unsigned w = 1; w < jobs; ++w)
        merge(result, partials[w]);
    return result;
}

}  // namespace comaj
