#pragma once

// Brute-force partition counts. Nothing here touches the series code: the
// counts come from walking the combinatorial objects one by one.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "etacong/arith.hpp"

namespace etacong::oracle {

inline constexpr std::int64_t default_cap = 60;

/// Parts in nonincreasing order, stored as (part, multiplicity) runs.
struct partition {
    std::vector<std::pair<std::int64_t, std::int64_t>> runs;

    std::int64_t sum() const
    {
        std::int64_t s = 0;
        for (auto [part, mult] : runs) {
            s += part * mult;
        }
        return s;
    }
};

enum class parity { even, odd };

namespace detail {

inline void check_cap(std::int64_t n, std::int64_t cap)
{
    if (n < 0) {
        throw invalid_input("oracle: n must be nonnegative");
    }
    if (n > cap) {
        throw cap_exceeded("oracle: n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
    }
}

// Chooses the next (smaller) distinct part and its multiplicity. When
// evens_only is set a part has already been even, so odd parts are pruned:
// they would sit below an even part.
inline void descend(std::int64_t remaining, std::int64_t max_part, bool evens_only, bool prune, partition& current,
                    const std::function<void(const partition&)>& visit)
{
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
        const bool even = part % 2 == 0;
        if (prune && evens_only && !even) {
            continue;
        }
        for (std::int64_t mult = 1; mult * part <= remaining; ++mult) {
            current.runs.emplace_back(part, mult);
            descend(remaining - mult * part, part - 1, evens_only || even, prune, current, visit);
            current.runs.pop_back();
        }
    }
}

} // namespace detail

/// Visits every partition of n.
inline void for_each_partition(std::int64_t n, const std::function<void(const partition&)>& visit)
{
    partition current;
    detail::descend(n, n, false, false, current, visit);
}

/// Visits every partition of n whose even parts are all below its odd parts.
inline void for_each_eo_partition(std::int64_t n, const std::function<void(const partition&)>& visit)
{
    partition current;
    detail::descend(n, n, false, true, current, visit);
}

inline bool evens_below_odds(const partition& p)
{
    std::int64_t max_even = 0;
    std::int64_t min_odd = 0;
    for (auto [part, mult] : p.runs) {
        if (part % 2 == 0) {
            max_even = std::max(max_even, part);
        } else if (min_odd == 0 || part < min_odd) {
            min_odd = part;
        }
    }
    return max_even == 0 || min_odd == 0 || max_even < min_odd;
}

/// Only the largest even part has odd multiplicity. Without even parts every
/// multiplicity must be even.
inline bool only_largest_even_odd(const partition& p)
{
    std::int64_t largest_even = 0;
    for (auto [part, mult] : p.runs) {
        if (part % 2 == 0) {
            largest_even = std::max(largest_even, part);
        }
    }
    for (auto [part, mult] : p.runs) {
        const bool odd_mult = mult % 2 == 1;
        if (odd_mult != (part == largest_even)) {
            return false;
        }
    }
    return true;
}

inline bigint count_partitions(std::int64_t n, std::int64_t cap = default_cap)
{
    detail::check_cap(n, cap);
    bigint count = 0;
    for_each_partition(n, [&](const partition&) { ++count; });
    return count;
}

inline bigint count_EO(std::int64_t n, std::int64_t cap = default_cap)
{
    detail::check_cap(n, cap);
    bigint count = 0;
    for_each_eo_partition(n, [&](const partition& p) {
        if (evens_below_odds(p)) {
            ++count;
        }
    });
    return count;
}

inline bigint count_EObar(std::int64_t n, std::int64_t cap = default_cap)
{
    detail::check_cap(n, cap);
    bigint count = 0;
    for_each_eo_partition(n, [&](const partition& p) {
        if (evens_below_odds(p) && only_largest_even_odd(p)) {
            ++count;
        }
    });
    return count;
}

/// Multisets of two-coloured parts, every part congruent to 2 mod 4.
inline bigint count_EOu(std::int64_t n, std::int64_t cap = default_cap)
{
    detail::check_cap(n, cap);
    // Items are (size, colour) pairs, taken in a fixed order with any
    // multiplicity, so each multiset is produced exactly once.
    std::vector<std::int64_t> sizes;
    for (std::int64_t s = 2; s <= n; s += 4) {
        sizes.push_back(s);
        sizes.push_back(s);
    }
    bigint count = 0;
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t item, std::int64_t remaining) {
        if (remaining == 0) {
            ++count;
            return;
        }
        if (item == sizes.size()) {
            return;
        }
        for (std::int64_t used = 0; used <= remaining; used += sizes[item]) {
            walk(item + 1, remaining - used);
        }
    };
    walk(0, n);
    return count;
}

/// Whether m = k(3k - 1)/2 for some integer k, i.e. 24m + 1 is a square.
inline bool is_generalized_pentagonal(std::int64_t m)
{
    if (m < 0) {
        return false;
    }
    const std::int64_t d = 24 * m + 1;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
    while (s * s > d) {
        --s;
    }
    while ((s + 1) * (s + 1) <= d) {
        ++s;
    }
    return s * s == d;
}

/// Parity of EObar(n) in closed form: odd exactly when n = 8 * k(3k -+ 1)/2.
inline parity pentagonal_parity_EObar(std::int64_t n)
{
    if (n < 0) {
        throw invalid_input("oracle: n must be nonnegative");
    }
    return (n % 8 == 0 && is_generalized_pentagonal(n / 8)) ? parity::odd : parity::even;
}

} // namespace etacong::oracle
