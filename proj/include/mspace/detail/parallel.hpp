#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace mspace::detail {

// Splits [0, count) into `jobs` contiguous ranges, evaluates
// range_fn(lo, hi) -> R on each, and folds the results in range order:
// merge(merge(init, R_0), R_1), ... The fold order is fixed, so the result
// does not depend on the worker count.
template <class R, class RangeFn, class MergeFn>
R partitioned_reduce(std::uint64_t count, int jobs, R init, RangeFn range_fn, MergeFn merge) {
    if (jobs < 1) jobs = 1;
    if (jobs > 64) jobs = 64;
    std::uint64_t njobs = static_cast<std::uint64_t>(jobs);
    if (njobs > count) njobs = count == 0 ? 1 : count;

    if (njobs <= 1) return merge(std::move(init), range_fn(0, count));

    std::vector<std::optional<R>> results(njobs);
    std::vector<std::exception_ptr> errors(njobs);
    std::vector<std::thread> workers;
    workers.reserve(njobs);
    std::uint64_t chunk = count / njobs, rem = count % njobs;
    std::uint64_t lo = 0;
    for (std::uint64_t w = 0; w < njobs; ++w) {
        std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        workers.emplace_back([&, w, lo, hi] {
            try {
                results[w].emplace(range_fn(lo, hi));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (std::thread& t : workers) t.join();
    for (std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    R acc = std::move(init);
    for (std::uint64_t w = 0; w < njobs; ++w) acc = merge(std::move(acc), std::move(*results[w]));
    return acc;
}

} // namespace mspace::detail
