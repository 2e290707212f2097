#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace kelly {

/// SplitMix64 output for the given state (Steele, Lea & Flood's fixed
/// increment generator). Used only to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the index-th substream of a master seed: the (index+1)-th output
/// of a SplitMix64 stream started at `master`, computed in O(1). Each path
/// or bootstrap replicate gets its own substream, so results are identical
/// for any worker count and any single unit of work is reproducible in
/// isolation.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9e3779b97f4a7c15ULL);
}

inline std::mt19937_64 substream_engine(std::uint64_t master,
                                        std::uint64_t index) {
    return std::mt19937_64(substream_seed(master, index));
}

/// Runs body(i) for i in [0, n) on up to n_threads workers with a static
/// block partition. Work units must be independent; output determinism is
/// then independent of n_threads. The first exception thrown by any worker
/// is rethrown on the calling thread after all workers have joined.
template <typename Body>
void parallel_for(std::size_t n, int n_threads, Body&& body) {
    if (n == 0) return;
    const std::size_t workers =
        n_threads <= 1 ? 1
                       : std::min<std::size_t>(static_cast<std::size_t>(n_threads), n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<bool> failed{false};
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body, &error, &error_mutex, &failed] {
            try {
                for (std::size_t i = lo; i < hi && !failed.load(); ++i) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace kelly
