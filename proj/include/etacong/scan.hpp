#pragma once

// Empirical sweeps: divisibility density along a progression of a modular
// series, and the parity of EObar(2N) along N == r (mod t) together with the
// explicit upper bound for the first odd case.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "etacong/arith.hpp"
#include "etacong/generating_functions.hpp"
#include "etacong/oracle.hpp"
#include "etacong/series.hpp"

namespace etacong::scan {

inline constexpr std::size_t default_memory_ceiling = 10'000'000;

/// Largest series truncation a command may allocate. ETACONG_MEM_CEILING
/// overrides the default; it counts coefficients.
inline std::size_t memory_ceiling()
{
    if (const char* env = std::getenv("ETACONG_MEM_CEILING"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
        throw invalid_input(std::string("ETACONG_MEM_CEILING is not a positive integer: ") + env);
    }
    return default_memory_ceiling;
}

inline void require_within_ceiling(std::size_t truncation, std::size_t ceiling)
{
    if (truncation > ceiling) {
        throw cap_exceeded("series truncation " + std::to_string(truncation) + " exceeds the coefficient ceiling " +
                           std::to_string(ceiling));
    }
}

/// n -> a n + b.
struct index_map {
    std::size_t a = 1;
    std::size_t b = 0;

    std::size_t operator()(std::size_t n) const { return a * n + b; }
};

struct scan_config {
    named_function function;
    std::uint32_t u;
    index_map map;
    std::size_t X;
    std::vector<std::size_t> checkpoints; // ascending, all <= X; X is always reported

    void validate() const
    {
        if (u < 1) {
            throw invalid_input("density modulus must be positive");
        }
        if (map.a < 1) {
            throw invalid_input("index map step must be positive");
        }
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            if (checkpoints[i] > X || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
                throw invalid_input("checkpoints must be strictly ascending and at most X");
            }
        }
    }
};

/// EObar(8n + 6) mod 8.
inline scan_config eobar_density_config(std::size_t X, std::vector<std::size_t> checkpoints = {})
{
    return {named_function::eobar, 8, {8, 6}, X, std::move(checkpoints)};
}

/// EO_u(2n) mod 2^k.
inline scan_config eou_density_config(unsigned k, std::size_t X, std::vector<std::size_t> checkpoints = {})
{
    if (k < 1 || k > 31) {
        throw invalid_input("k must lie in [1, 31]");
    }
    return {named_function::eou_even, std::uint32_t{1} << k, {1, 0}, X, std::move(checkpoints)};
}

struct density_point {
    std::size_t X;
    std::size_t divisible; // #{0 <= n <= X : coefficient == 0 mod u}
    std::size_t total;     // X + 1

    rational fraction() const { return rational(divisible, total); }
    rational exception_ratio() const { return rational(total - divisible, total); }
};

struct density_report {
    scan_config config;
    std::vector<density_point> points;
};

inline density_report run_density(const scan_config& config, std::size_t ceiling = memory_ceiling(),
                                  unsigned jobs = 1)
{
    config.validate();
    const std::size_t top = config.map(config.X);
    require_within_ceiling(top, ceiling);

    std::vector<std::size_t> marks = config.checkpoints;
    if (marks.empty() || marks.back() != config.X) {
        marks.push_back(config.X);
    }
    density_report out{config, {}};
    if (config.u == 1) {
        for (auto x : marks) {
            out.points.push_back({x, x + 1, x + 1});
        }
        return out;
    }
    const auto s = named_series(config.function, top, mod_ring(config.u), jobs);
    std::size_t divisible = 0;
    std::size_t next = 0;
    for (std::size_t n = 0; n <= config.X; ++n) {
        if (s[config.map(n)] == 0) {
            ++divisible;
        }
        if (n == marks[next]) {
            out.points.push_back({n, divisible, n + 1});
            ++next;
        }
    }
    return out;
}

inline nlohmann::json to_json(const density_report& r)
{
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : r.points) {
        points.push_back({{"X", std::to_string(p.X)},
                          {"divisible", std::to_string(p.divisible)},
                          {"total", std::to_string(p.total)},
                          {"fraction", to_string(p.fraction())},
                          {"exception_ratio", to_string(p.exception_ratio())}});
    }
    return {{"function", std::string(name_of(r.config.function))},
            {"modulus", std::to_string(r.config.u)},
            {"index_map", std::to_string(r.config.map.a) + "n+" + std::to_string(r.config.map.b)},
            {"points", std::move(points)}};
}

inline std::string to_csv(const density_report& r)
{
    std::string out = "X,divisible,total,fraction\n";
    for (const auto& p : r.points) {
        out += std::to_string(p.X) + "," + std::to_string(p.divisible) + "," + std::to_string(p.total) + "," +
               to_string(p.fraction()) + "\n";
    }
    return out;
}

struct bound_query {
    std::int64_t r;
    std::int64_t t;

    void validate() const
    {
        if (t < 1 || r < 0 || r >= t) {
            throw invalid_input("bound query needs 0 <= r < t");
        }
    }

    std::int64_t d() const { return std::gcd(12 * r - 1, t); }

    /// Least j >= 0 with 2^j > t / 12.
    unsigned j() const
    {
        unsigned j = 0;
        while ((std::int64_t{12} << j) <= t) {
            ++j;
        }
        return j;
    }
};

/// 2^{9+j} 3^7 t^6 / d^2 * prod over p | 6t of (1 - 1/p^2) - 2^j, exactly.
inline rational thm14_bound(const bound_query& q)
{
    q.validate();
    const unsigned j = q.j();
    const std::int64_t d = q.d();
    rational value(ipow(bigint(2), 9 + j) * ipow(bigint(3), 7) * ipow(bigint(q.t), 6), bigint(d) * d);
    for (auto p : prime_divisors(6 * q.t)) {
        value *= rational(p * p - 1, p * p);
    }
    return value - rational(ipow(bigint(2), j));
}

inline std::int64_t generalized_pentagonal(std::int64_t k) { return k * (3 * k - 1) / 2; }

/// Whether some M == r (mod t) has EObar(2M) odd. Such M are the numbers
/// 4 k(3k - 1)/2, whose residues mod t repeat with period 2t in k.
inline bool odd_exists(std::int64_t r, std::int64_t t)
{
    for (std::int64_t k = 0; k < 2 * t; ++k) {
        if (mod_floor(4 * (generalized_pentagonal(k) % t), t) == r) {
            return true;
        }
    }
    return false;
}

struct parity_scan_report {
    std::int64_t r;
    std::int64_t t;
    std::int64_t limit;
    std::optional<std::int64_t> first_even_N;
    std::optional<std::int64_t> first_odd_M;
    bool odd_exists;
    rational bound;
};

/// Walks N = r, r + t, ... <= limit and classifies EObar(2N) mod 2 by the
/// pentagonal closed form.
inline parity_scan_report run_parity_scan(std::int64_t r, std::int64_t t, std::int64_t limit)
{
    const bound_query q{r, t};
    q.validate();
    if (limit < t) {
        throw invalid_input("parity scan limit must be at least t");
    }
    parity_scan_report out{r, t, limit, std::nullopt, std::nullopt, odd_exists(r, t), thm14_bound(q)};
    for (std::int64_t N = r; N <= limit; N += t) {
        const bool odd = oracle::pentagonal_parity_EObar(2 * N) == oracle::parity::odd;
        if (odd && !out.first_odd_M) {
            out.first_odd_M = N;
        }
        if (!odd && !out.first_even_N) {
            out.first_even_N = N;
        }
        if (out.first_even_N && (out.first_odd_M || !out.odd_exists)) {
            break;
        }
    }
    return out;
}

inline nlohmann::json to_json(const parity_scan_report& s)
{
    auto opt = [](const std::optional<std::int64_t>& v) -> nlohmann::json {
        return v ? nlohmann::json(std::to_string(*v)) : nlohmann::json(nullptr);
    };
    return {{"r", std::to_string(s.r)},
            {"t", std::to_string(s.t)},
            {"limit", std::to_string(s.limit)},
            {"first_even_N", opt(s.first_even_N)},
            {"first_odd_M", opt(s.first_odd_M)},
            {"odd_exists", s.odd_exists},
            {"bound", to_short_string(s.bound)}};
}

} // namespace etacong::scan
