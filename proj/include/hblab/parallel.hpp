#ifndef HBLAB_PARALLEL_HPP
#define HBLAB_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hblab {

// Worker cap for internal loops.  HB_LAB_THREADS overrides the hardware
// default; results never depend on the chosen count because workers write
// into index-addressed slots.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    n = std::min(n, 8);
    if (const char* env = std::getenv("HB_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 256) n = static_cast<int>(v);
    }
    return n;
}

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const int workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hblab

#endif
