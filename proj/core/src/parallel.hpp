#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace pqclan {

/// Evaluates fn(0..count-1) on up to `threads` workers (0 = hardware concurrency) and returns
/// the results in index order. The first exception thrown by any task is rethrown.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
    using Raw = std::invoke_result_t<Fn&, std::size_t>;
    // vector<bool> packs bits, so concurrent writes to neighbours would race
    using Slot = std::conditional_t<std::is_same_v<Raw, bool>, unsigned char, Raw>;
    std::vector<Slot> out(count);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) out[k] = static_cast<Slot>(fn(k));
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                out[k] = static_cast<Slot>(fn(k));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace pqclan
