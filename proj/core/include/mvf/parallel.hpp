#ifndef MVF_PARALLEL_HPP
#define MVF_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mvf {

// Worker count: hardware concurrency capped by the MVF_THREADS env var.
inline int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("MVF_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

// Static block partition of [begin, end). Each index must write only its own
// output slot; results are then independent of the worker count, which keeps
// runs bitwise reproducible.
template <typename Fn>
void parallel_for(long begin, long end, Fn&& fn) {
    const long count = end - begin;
    if (count <= 0) return;
    const int workers = static_cast<int>(std::min<long>(thread_count(), count));
    if (workers <= 1) {
        for (long i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const long chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long lo = begin + w * chunk;
        const long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (long i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace mvf

#endif
