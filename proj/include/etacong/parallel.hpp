#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace etacong {

// Splits [begin, end) into at most `jobs` contiguous chunks and runs fn(lo, hi)
// on each. Chunks smaller than `grain` are not split further.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned jobs, std::size_t grain, Fn&& fn)
{
    if (end <= begin) {
        return;
    }
    const std::size_t total = end - begin;
    std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, total / std::max<std::size_t>(grain, 1)));
    if (chunks <= 1) {
        fn(begin, end);
        return;
    }
    const std::size_t step = (total + chunks - 1) / chunks;
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
        const std::size_t lo = begin + c * step;
        const std::size_t hi = std::min(end, lo + step);
        if (lo < hi) {
            workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
        }
    }
    fn(begin, std::min(end, begin + step));
}

} // namespace etacong
