#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace resolvedim {

/// Effective worker count: an explicit request wins, then the
/// RESOLVEDIM_THREADS environment variable, then 1.
int resolve_thread_count(int requested);

/// Runs work(shard) for every shard in [0, shards) on up to `threads`
/// workers and returns the results indexed by shard. Shard order in the
/// result is fixed, so reductions over it are deterministic at any
/// thread count.
template <typename R>
std::vector<R> run_sharded(int shards, int threads, const std::function<R(int)>& work) {
    std::vector<R> results(shards);
    if (threads <= 1 || shards <= 1) {
        for (int s = 0; s < shards; ++s)
            results[s] = work(s);
        return results;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int s = next.fetch_add(1); s < shards; s = next.fetch_add(1))
            results[s] = work(s);
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, shards);
    pool.reserve(count);
    for (int t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return results;
}

/// Like run_sharded for searches that want the result of the LOWEST shard
/// that produced one. Workers skip shards above an already-successful
/// lower shard; the skip is a pure optimization, the merge always picks
/// the lowest-index hit.
template <typename R>
std::optional<R> run_sharded_first(int shards, int threads,
                                   const std::function<std::optional<R>(int)>& work) {
    std::vector<std::optional<R>> results(shards);
    std::atomic<int> best{shards};
    auto run_one = [&](int s) {
        if (s > best.load(std::memory_order_relaxed))
            return;
        results[s] = work(s);
        if (results[s]) {
            int cur = best.load(std::memory_order_relaxed);
            while (s < cur && !best.compare_exchange_weak(cur, s, std::memory_order_relaxed)) {
            }
        }
    };
    if (threads <= 1 || shards <= 1) {
        for (int s = 0; s < shards; ++s) {
            run_one(s);
            if (results[s])
                return results[s];
        }
        return std::nullopt;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int s = next.fetch_add(1); s < shards; s = next.fetch_add(1))
            run_one(s);
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, shards);
    pool.reserve(count);
    for (int t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    for (auto& r : results)
        if (r)
            return r;
    return std::nullopt;
}

} // namespace resolvedim
