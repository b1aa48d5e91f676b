#include "mixspec/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "mixspec/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mixspec {

namespace {
int g_default_workers = 0;

int env_workers() {
    const char* env = std::getenv("MIXSPEC_WORKERS");
    if (env != nullptr) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}
}  // namespace

int default_workers() {
    if (g_default_workers >= 1) return g_default_workers;
    return env_workers();
}

void set_default_workers(int workers) {
    if (workers < 0) throw InvalidInput("set_default_workers: negative worker count");
    g_default_workers = workers;
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers) {
    if (workers <= 0) workers = default_workers();
    if (workers <= 1 || n <= 1) {
        serial_for(n, fn);
        return;
    }

    // Exceptions must not escape a worker thread (or an OpenMP region); the
    // first one is captured and rethrown on the calling thread.
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    auto guarded = [&](std::size_t i) {
        try {
            fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

#ifdef _OPENMP
    // Dynamic schedule is safe: fn only writes per-index slots, so iteration
    // order cannot affect the result.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        guarded(static_cast<std::size_t>(i));
    }
#else
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            guarded(i);
        }
    };
    std::vector<std::thread> pool;
    std::size_t spawn = std::min(static_cast<std::size_t>(workers), n);
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
#endif

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mixspec
