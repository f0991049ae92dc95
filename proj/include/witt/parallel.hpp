#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace witt {

/// Worker count: hardware concurrency capped by the WITT_THREADS environment
/// variable (values < 1 mean serial).
inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("WITT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
        if (cap >= 1 && cap > hw) hw = cap;
    }
    return hw;
}

/// Static block partition of [0, count); f(index) must write only to
/// index-owned slots so merged results stay deterministic.
template <typename F>
void parallel_for(long count, const F& f) {
    const int threads = count < 64 ? 1 : max_threads();
    if (threads <= 1) {
        for (long i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const long lo = t * chunk;
        const long hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (long i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace witt
