#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace mpj {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Exec { serial, parallel };

/// Smallest index in [0, count) for which `fails(i)` holds, or nullopt.
///
/// The parallel version reduces with min, so both versions report the same
/// index. `fails` must not throw.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Pred&& fails, Exec exec)
{
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < count; ++i)
            if (fails(i))
                return i;
        return std::nullopt;
    }
    std::size_t best = count;
    const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 32) reduction(min : best)
    for (long long i = 0; i < total; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (idx < best && fails(idx))
            best = idx;
    }
    if (best == count)
        return std::nullopt;
    return best;
}

/// out[i] = fn(i) for i in [0, count). The first exception (by index) is
/// rethrown after the loop.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, Exec exec)
{
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (long long i = 0; i < total; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            slots[idx].emplace(fn(idx));
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

} // namespace mpj
