#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ringlab {

inline unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Partitions [0, total) into contiguous chunks and runs
// fn(chunk_index, begin, end) on up to `jobs` worker threads.  Chunk
// boundaries depend only on (total, jobs), so callers that collect results
// per chunk and concatenate in chunk order get deterministic output
// regardless of scheduling.  The first exception thrown by any worker is
// rethrown on the calling thread after all workers join.
inline void parallel_chunks(
    std::uint64_t total, unsigned jobs,
    const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    if (jobs == 0) jobs = default_jobs();
    if (jobs > total) jobs = static_cast<unsigned>(total);
    if (jobs <= 1) {
        fn(0, 0, total);
        return;
    }
    std::uint64_t base = total / jobs, extra = total % jobs;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    std::uint64_t begin = 0;
    for (unsigned c = 0; c < jobs; ++c) {
        std::uint64_t len = base + (c < extra ? 1 : 0);
        std::uint64_t end = begin + len;
        workers.emplace_back([&, c, begin, end]() {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ringlab
