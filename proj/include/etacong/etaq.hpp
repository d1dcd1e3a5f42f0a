#pragma once

// Eta-quotients f(z) = prod over d | N of eta(d z)^{r_d}: weight, the two
// mod-24 level conditions, the nebentypus character, orders of vanishing at
// the cusps of Gamma_0(N), and the resulting holomorphy classification.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "etacong/arith.hpp"
#include "etacong/series.hpp"

namespace etacong::etaq {

class eta_quotient {
public:
    eta_quotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents)
        : level_(level), exponents_(std::move(exponents))
    {
        if (level_ < 1) {
            throw invalid_input("eta quotient level must be positive");
        }
        for (auto it = exponents_.begin(); it != exponents_.end();) {
            if (it->first < 1 || level_ % it->first != 0) {
                throw invalid_input("eta quotient: " + std::to_string(it->first) + " does not divide level " +
                                    std::to_string(level_));
            }
            it = (it->second == 0) ? exponents_.erase(it) : std::next(it);
        }
    }

    std::int64_t level() const noexcept { return level_; }
    const std::map<std::int64_t, std::int64_t>& exponents() const noexcept { return exponents_; }

    std::int64_t exponent(std::int64_t delta) const
    {
        const auto it = exponents_.find(delta);
        return it == exponents_.end() ? 0 : it->second;
    }

    std::int64_t sum_exponents() const
    {
        std::int64_t s = 0;
        for (auto [d, r] : exponents_) {
            s += r;
        }
        return s;
    }

    std::int64_t sum_delta_r() const
    {
        std::int64_t s = 0;
        for (auto [d, r] : exponents_) {
            s += d * r;
        }
        return s;
    }

    std::vector<eta_factor> factors() const
    {
        std::vector<eta_factor> out;
        for (auto [d, r] : exponents_) {
            out.push_back({d, r});
        }
        return out;
    }

    friend bool operator==(const eta_quotient&, const eta_quotient&) = default;

private:
    std::int64_t level_;
    std::map<std::int64_t, std::int64_t> exponents_;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw invalid_input("eta quotient text: bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

} // namespace detail

/// Parses "N; d1:r1, d2:r2, ...".
inline eta_quotient parse_eta_quotient(std::string_view text)
{
    const auto semi = text.find(';');
    const std::int64_t level = detail::parse_int(text.substr(0, semi), "level");
    std::map<std::int64_t, std::int64_t> exps;
    if (semi != std::string_view::npos) {
        std::string_view rest = text.substr(semi + 1);
        while (!detail::trim(rest).empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = detail::trim(rest.substr(0, comma));
            const auto colon = item.find(':');
            if (colon == std::string_view::npos) {
                throw invalid_input("eta quotient text: expected delta:exponent, got '" + std::string(item) + "'");
            }
            const auto d = detail::parse_int(item.substr(0, colon), "delta");
            if (exps.contains(d)) {
                throw invalid_input("eta quotient text: repeated delta " + std::to_string(d));
            }
            exps[d] = detail::parse_int(item.substr(colon + 1), "exponent");
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
    }
    return eta_quotient(level, std::move(exps));
}

inline std::string format(const eta_quotient& eq)
{
    std::string out = std::to_string(eq.level()) + ";";
    bool first = true;
    for (auto [d, r] : eq.exponents()) {
        out += (first ? " " : ", ") + std::to_string(d) + ":" + std::to_string(r);
        first = false;
    }
    return out;
}

inline rational weight(const eta_quotient& eq) { return rational(eq.sum_exponents(), 2); }

inline bool has_integral_weight(const eta_quotient& eq) { return eq.sum_exponents() % 2 == 0; }

struct level_conditions {
    bool delta_sum;       // sum d r_d == 0 mod 24
    bool level_over_sum;  // sum (N/d) r_d == 0 mod 24

    bool both() const { return delta_sum && level_over_sum; }
};

inline level_conditions check_level_conditions(const eta_quotient& eq)
{
    std::int64_t dual = 0;
    for (auto [d, r] : eq.exponents()) {
        dual += (eq.level() / d) * r;
    }
    return {mod_floor(eq.sum_delta_r(), 24) == 0, mod_floor(dual, 24) == 0};
}

/// Squarefree kernel of (-1)^weight * prod d^{r_d}, signed.
inline std::int64_t character_kernel(const eta_quotient& eq)
{
    if (!has_integral_weight(eq)) {
        throw invalid_input("character needs an integral weight, got " + to_string(weight(eq)));
    }
    std::map<std::int64_t, std::int64_t> prime_exps;
    for (auto [d, r] : eq.exponents()) {
        for (auto [p, e] : factorize(d)) {
            prime_exps[p] += e * r;
        }
    }
    std::int64_t kernel = (eq.sum_exponents() / 2) % 2 == 0 ? 1 : -1;
    for (auto [p, e] : prime_exps) {
        if (mod_floor(e, 2) == 1) {
            kernel *= p;
        }
    }
    return kernel;
}

/// chi(d) = ((-1)^weight prod d^{r_d} / d), a Kronecker symbol.
inline int character(const eta_quotient& eq, std::int64_t d) { return kronecker(character_kernel(eq), d); }

/// Order of vanishing at a cusp c/d with d | N:
/// (N/24) sum gcd(d, delta)^2 r_delta / (gcd(d, N/d) d delta).
inline rational cusp_order(const eta_quotient& eq, std::int64_t d)
{
    const std::int64_t N = eq.level();
    if (d < 1 || N % d != 0) {
        throw invalid_input("cusp denominator " + std::to_string(d) + " does not divide level " + std::to_string(N));
    }
    rational sum = 0;
    for (auto [delta, r] : eq.exponents()) {
        const std::int64_t g = std::gcd(d, delta);
        sum += rational(g * g * r, std::gcd(d, N / d) * d * delta);
    }
    return sum * rational(N, 24);
}

/// Same quantity computed at the cusp c/d itself: the width N / gcd(d^2, N)
/// times the leading exponents gcd(delta c, d)^2 / (24 delta) of each
/// eta(delta z) after moving c/d to infinity.
inline rational cusp_order_at(const eta_quotient& eq, std::int64_t c, std::int64_t d)
{
    const std::int64_t N = eq.level();
    if (d < 1 || N % d != 0 || std::gcd(c, d) != 1) {
        throw invalid_input("cusp c/d needs d | N and gcd(c, d) = 1");
    }
    const std::int64_t width = N / std::gcd(d * d, N);
    rational sum = 0;
    for (auto [delta, r] : eq.exponents()) {
        const std::int64_t g = std::gcd(delta * c, d);
        sum += rational(g * g * r, 24 * delta);
    }
    return sum * width;
}

/// [SL2(Z) : Gamma_0(N)] = N prod over p | N of (1 + 1/p).
inline std::int64_t index_gamma0(std::int64_t N)
{
    if (N < 1) {
        throw invalid_input("level must be positive");
    }
    std::int64_t out = 1;
    for (auto [p, e] : factorize(N)) {
        for (int k = 1; k < e; ++k) {
            out *= p;
        }
        out *= p + 1;
    }
    return out;
}

struct cusp_count {
    std::int64_t denominator;
    std::int64_t count;

    friend bool operator==(const cusp_count&, const cusp_count&) = default;
};

/// Number of inequivalent cusps of Gamma_0(N) with each denominator d | N.
inline std::vector<cusp_count> cusp_census(std::int64_t N)
{
    std::vector<cusp_count> out;
    for (auto d : divisors(N)) {
        out.push_back({d, euler_phi(std::gcd(d, N / d))});
    }
    return out;
}

/// Sum over cusps of the order of vanishing, counted with multiplicity.
inline rational valence_sum(const eta_quotient& eq)
{
    rational total = 0;
    for (const auto& [d, count] : cusp_census(eq.level())) {
        total += cusp_order(eq, d) * count;
    }
    return total;
}

enum class form_class { cusp_form, holomorphic, weakly_holomorphic };

inline std::string_view name_of(form_class c)
{
    switch (c) {
    case form_class::cusp_form: return "cusp form";
    case form_class::holomorphic: return "holomorphic modular form";
    case form_class::weakly_holomorphic: return "weakly holomorphic";
    }
    return "?";
}

struct form_classification {
    rational weight;
    bool integral_weight;
    bool satisfies_24_conditions;
    rational min_cusp_order;
    form_class cls;
    // False when the 24-conditions fail or the weight is not a nonnegative
    // integer; the label is then weakly holomorphic and unchecked.
    bool certified;
};

inline form_classification classify(const eta_quotient& eq)
{
    form_classification out{};
    out.weight = weight(eq);
    out.integral_weight = has_integral_weight(eq);
    out.satisfies_24_conditions = check_level_conditions(eq).both();
    bool first = true;
    for (auto d : divisors(eq.level())) {
        const rational ord = cusp_order(eq, d);
        if (first || ord < out.min_cusp_order) {
            out.min_cusp_order = ord;
            first = false;
        }
    }
    out.certified = out.integral_weight && out.satisfies_24_conditions && out.weight >= 0;
    if (!out.certified || out.min_cusp_order < 0) {
        out.cls = form_class::weakly_holomorphic;
    } else if (out.min_cusp_order > 0) {
        out.cls = form_class::cusp_form;
    } else {
        out.cls = form_class::holomorphic;
    }
    return out;
}

/// q-expansion at infinity: q^{sum d r_d / 24} prod (q^d;q^d)^{r_d}.
template <class Ring>
series<Ring> expand(const eta_quotient& eq, std::size_t truncation, const Ring& ring, unsigned jobs = 1)
{
    const std::int64_t sdr = eq.sum_delta_r();
    if (mod_floor(sdr, 24) != 0 || sdr < 0) {
        throw invalid_input("eta quotient " + format(eq) + " has no integral nonnegative order at infinity");
    }
    const auto factors = eq.factors();
    auto body = factors.empty() ? series<Ring>::one(ring, truncation)
                                : build_eta_product(std::span<const eta_factor>(factors), truncation, ring, jobs);
    return shift(body, static_cast<std::size_t>(sdr / 24));
}

} // namespace etacong::etaq
