#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ladder {

/// Half-open index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool empty() const noexcept { return begin == end; }
};

/// Balanced contiguous split of [0, count) into `parts` ranges; range p is
/// [p*count/parts, (p+1)*count/parts).
inline IndexRange partition_range(std::size_t count, std::size_t parts, std::size_t p) noexcept {
    return {count * p / parts, count * (p + 1) / parts};
}

/// Runs body(worker, range) on `workers` threads, each owning one contiguous
/// chunk of [0, count). Worker 0 runs on the calling thread. The first
/// exception thrown by any worker is rethrown after all workers joined.
template <typename Body>
void parallel_for(std::size_t workers, std::size_t count, Body&& body) {
    workers = std::max<std::size_t>(1, workers);
    if (workers == 1) {
        body(std::size_t{0}, IndexRange{0, count});
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    body(w, partition_range(count, workers, w));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        try {
            body(std::size_t{0}, partition_range(count, workers, 0));
        } catch (...) {
            errors[0] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Runs body(worker) once per worker, for algorithms that do their own index
/// assignment.
template <typename Body>
void parallel_workers(std::size_t workers, Body&& body) {
    parallel_for(workers, workers, [&](std::size_t w, IndexRange) { body(w); });
}

} // namespace ladder
