#pragma once

#include <cstddef>
#include <functional>

namespace mixspec {

// Worker count used when a call site passes workers = 0: the MIXSPEC_WORKERS
// environment variable if set, otherwise the hardware thread count.
int default_workers();
void set_default_workers(int workers);

// Runs fn(i) for i in [0, n). With workers <= 1 this is a plain serial loop
// (the reference implementation); otherwise iterations are distributed over
// an OpenMP parallel-for when available, or a std::thread pool as fallback.
//
// Contract: fn must write only to per-index slots (no shared accumulation),
// so the result is bit-identical for every worker count. Reductions happen
// serially over the slots after this returns.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers = 0);

// The serial reference path, always a plain loop. Kept distinct so tests and
// the benchmark can compare it directly against parallel_for.
void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mixspec
