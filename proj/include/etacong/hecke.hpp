#pragma once

// Hecke operators T_p on q-expansions, eigenform residual checks, and the
// index generators for the two EObar congruence families (mod 2 and mod 8).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "etacong/arith.hpp"
#include "etacong/etaq.hpp"
#include "etacong/generating_functions.hpp"
#include "etacong/series.hpp"

namespace etacong::hecke {

struct hecke_context {
    std::int64_t weight;
    int chi; // chi(p)
    std::int64_t p;

    static hecke_context make(std::int64_t weight, int chi, std::int64_t p)
    {
        if (!is_prime(p)) {
            throw invalid_input("Hecke operator needs a prime, got " + std::to_string(p));
        }
        if (weight < 1) {
            throw invalid_input("Hecke operator needs weight >= 1");
        }
        if (chi < -1 || chi > 1) {
            throw invalid_input("character value must be -1, 0 or 1");
        }
        return {weight, chi, p};
    }

    /// Weight and chi(p) read off an eta-quotient.
    static hecke_context for_form(const etaq::eta_quotient& eq, std::int64_t p)
    {
        if (!etaq::has_integral_weight(eq)) {
            throw invalid_input("Hecke operator needs an integral weight");
        }
        return make(eq.sum_exponents() / 2, etaq::character(eq, p), p);
    }
};

/// (f | T_p)(n) = f(pn) + chi(p) p^{weight-1} f(n/p), truncated at floor(T/p).
template <class Ring>
series<Ring> apply_Tp(const series<Ring>& f, const hecke_context& ctx)
{
    const auto p = static_cast<std::size_t>(ctx.p);
    if (f.truncation() < p) {
        throw invalid_input("series truncation " + std::to_string(f.truncation()) + " is below p = " + std::to_string(p));
    }
    if constexpr (std::is_same_v<Ring, mod_ring>) {
        if (ctx.weight > 1 && std::gcd<std::int64_t, std::int64_t>(ctx.p, f.ring().modulus()) != 1) {
            throw domain_mismatch("p^(k-1) shares a factor with the modulus; T_p would lose information");
        }
    }
    const Ring& ring = f.ring();
    const auto factor = ring.from_bigint(bigint(ctx.chi) * ipow(bigint(ctx.p), static_cast<unsigned>(ctx.weight - 1)));
    const std::size_t T = f.truncation() / p;
    series<Ring> out(ring, T);
    for (std::size_t n = 0; n <= T; ++n) {
        out[n] = f[p * n];
        if (n % p == 0) {
            out[n] = ring.add(out[n], ring.mul(factor, f[n / p]));
        }
    }
    return out;
}

enum class eigen_status { exact_match, mismatch };

struct eigen_report {
    std::int64_t p;
    bigint lambda;
    std::size_t checked_to;
    eigen_status status;
    std::optional<std::size_t> mismatch_at;
};

/// Reads lambda(p) = a(p v) for a form normalised by a(v) = 1 at its
/// valuation v, then checks f | T_p = lambda f on every n <= floor(T/p).
inline eigen_report eigen_residual(const exact_series& f, const hecke_context& ctx)
{
    const auto v = f.valuation();
    if (!v || f[*v] != 1) {
        throw invalid_input("eigen residual needs a series whose first nonzero coefficient is 1");
    }
    const auto p = static_cast<std::size_t>(ctx.p);
    if (p * *v > f.truncation()) {
        throw invalid_input("truncation too small to read lambda(p) = a(p v)");
    }
    eigen_report out{ctx.p, f[p * *v], 0, eigen_status::exact_match, std::nullopt};
    const auto image = apply_Tp(f, ctx);
    for (std::size_t n = 0; n <= image.truncation(); ++n) {
        if (image[n] != out.lambda * f[n]) {
            out.status = eigen_status::mismatch;
            out.mismatch_at = n;
            out.checked_to = n;
            return out;
        }
    }
    out.checked_to = image.truncation();
    return out;
}

inline nlohmann::json to_json(const eigen_report& r)
{
    nlohmann::json j{{"p", std::to_string(r.p)},
                     {"lambda", r.lambda.str()},
                     {"checked_to", std::to_string(r.checked_to)},
                     {"status", r.status == eigen_status::exact_match ? "exact-match" : "mismatch"}};
    if (r.mismatch_at) {
        j["mismatch_at"] = std::to_string(*r.mismatch_at);
    }
    return j;
}

namespace detail {

inline bigint product_of_squares(std::span<const std::int64_t> primes)
{
    bigint out = 1;
    for (auto p : primes) {
        out *= bigint(p) * p;
    }
    return out;
}

inline void check_last_prime_j(std::span<const std::int64_t> primes, std::int64_t j)
{
    if (primes.empty()) {
        throw invalid_input("family needs at least one prime");
    }
    if (mod_floor(j, primes.back()) == 0) {
        throw invalid_input("j must not be divisible by the last prime " + std::to_string(primes.back()));
    }
}

inline bigint finish_index(const bigint& leading, const bigint& numerator)
{
    if (numerator % 3 != 0) {
        throw invalid_input("family offset is not an integer");
    }
    bigint index = leading + numerator / 3;
    if (index < 0) {
        throw invalid_input("family index is negative");
    }
    return index;
}

} // namespace detail

/// p_1^2..p_{k+1}^2 n + (p_1^2..p_k^2 p_{k+1} (3j + p_{k+1}) - 1) / 3, where
/// every p_i >= 5 is prime with p_i == 2 (mod 3) and p_{k+1} does not divide j.
inline bigint family_index_thm1(std::span<const std::int64_t> primes, std::int64_t j, std::int64_t n)
{
    detail::check_last_prime_j(primes, j);
    for (auto p : primes) {
        if (p < 5 || !is_prime(p) || p % 3 != 2) {
            throw invalid_input("mod-2 family needs primes p >= 5 with p == 2 (mod 3), got " + std::to_string(p));
        }
    }
    if (n < 0) {
        throw invalid_input("n must be nonnegative");
    }
    const std::int64_t last = primes.back();
    const bigint head = detail::product_of_squares(primes.first(primes.size() - 1));
    return detail::finish_index(detail::product_of_squares(primes) * n, head * last * (3 * bigint(j) + last) - 1);
}

/// 8 p_1^2..p_{k+1}^2 n + (p_1^2..p_k^2 p_{k+1} (24j + 19 p_{k+1}) - 1) / 3,
/// where every p_i == 1 (mod 24) is prime and p_{k+1} does not divide j.
/// Eligibility of the primes is a separate check.
inline bigint family_index_thm2(std::span<const std::int64_t> primes, std::int64_t j, std::int64_t n)
{
    detail::check_last_prime_j(primes, j);
    for (auto p : primes) {
        if (!is_prime(p) || p % 24 != 1) {
            throw invalid_input("mod-8 family needs primes p == 1 (mod 24), got " + std::to_string(p));
        }
    }
    if (n < 0) {
        throw invalid_input("n must be nonnegative");
    }
    const std::int64_t last = primes.back();
    const bigint head = detail::product_of_squares(primes.first(primes.size() - 1));
    return detail::finish_index(8 * detail::product_of_squares(primes) * n,
                                head * last * (24 * bigint(j) + 19 * bigint(last)) - 1);
}

enum class family_verdict { holds, fails, out_of_range };

struct family_check {
    bigint index;
    family_verdict verdict;
    std::optional<std::uint32_t> residue; // EObar(index) mod the family modulus
};

/// Looks up EObar(index) in a modular EObar series whose modulus is a
/// multiple of `target`, and checks divisibility by target.
inline family_check check_index(const mod_series& eobar, const bigint& index, std::uint32_t target)
{
    if (eobar.ring().modulus() % target != 0) {
        throw domain_mismatch("series modulus " + std::to_string(eobar.ring().modulus()) + " is not a multiple of " +
                              std::to_string(target));
    }
    if (index > eobar.truncation()) {
        return {index, family_verdict::out_of_range, std::nullopt};
    }
    const std::uint32_t r = eobar[index.convert_to<std::size_t>()] % target;
    return {index, r == 0 ? family_verdict::holds : family_verdict::fails, r};
}

inline family_check verify_family_thm1(const mod_series& eobar, std::span<const std::int64_t> primes, std::int64_t j,
                                       std::int64_t n)
{
    return check_index(eobar, family_index_thm1(primes, j, n), 2);
}

/// (19p - 1) / 3, the EObar argument whose vanishing mod 8 makes p eligible.
inline std::int64_t eligibility_index(std::int64_t p) { return (19 * p - 1) / 3; }

inline family_check verify_family_thm2(const mod_series& eobar, std::span<const std::int64_t> primes, std::int64_t j,
                                       std::int64_t n)
{
    const auto index = family_index_thm2(primes, j, n);
    for (auto p : primes) {
        const auto gate = check_index(eobar, eligibility_index(p), 8);
        if (gate.verdict == family_verdict::out_of_range) {
            return {index, family_verdict::out_of_range, std::nullopt};
        }
        if (gate.verdict == family_verdict::fails) {
            throw invalid_input("prime " + std::to_string(p) + " is not eligible: EObar((19p-1)/3) = " +
                                std::to_string(*gate.residue) + " mod 8");
        }
    }
    return check_index(eobar, index, 8);
}

/// Primes p <= limit with p == 1 (mod 24) and EObar((19p-1)/3) == 0 (mod 8),
/// read from one EObar series; the series must reach (19 limit - 1)/3.
inline std::vector<std::int64_t> eligible_primes_thm2(const mod_series& eobar, std::int64_t limit)
{
    if (eobar.ring().modulus() % 8 != 0) {
        throw domain_mismatch("eligibility needs an EObar series modulo a multiple of 8");
    }
    if (static_cast<std::size_t>(eligibility_index(limit)) > eobar.truncation()) {
        throw invalid_input("EObar series too short for the requested limit");
    }
    std::vector<std::int64_t> out;
    for (auto p : primes_up_to(limit)) {
        if (p % 24 == 1 && eobar[static_cast<std::size_t>(eligibility_index(p))] % 8 == 0) {
            out.push_back(p);
        }
    }
    return out;
}

inline std::vector<std::int64_t> eligible_prime_search_thm2(std::int64_t limit, unsigned jobs = 1)
{
    if (limit < 2) {
        throw invalid_input("limit must be at least 2");
    }
    const auto T = static_cast<std::size_t>(eligibility_index(limit));
    return eligible_primes_thm2(named_series(named_function::eobar, T, mod_ring(8), jobs), limit);
}

/// The four weight-2 forms F_1, F_7, F_13, F_19 on Gamma_0(2304).
inline etaq::eta_quotient fj_form(int j)
{
    switch (j) {
    case 1: return etaq::eta_quotient(2304, {{24, 5}, {96, -1}});
    case 7: return etaq::eta_quotient(2304, {{24, 3}, {96, 1}});
    case 13: return etaq::eta_quotient(2304, {{24, 1}, {96, 3}});
    case 19: return etaq::eta_quotient(2304, {{96, 5}, {24, -1}});
    default: throw invalid_input("F_j is defined for j in {1, 7, 13, 19}");
    }
}

struct prime_check {
    std::int64_t p;
    bool ok;
    std::optional<std::size_t> first_bad; // index into the T_p image
};

struct fj_form_report {
    int j;
    bool support_ok;
    std::optional<std::size_t> support_violation;
    std::vector<prime_check> annihilation;   // T_p f == 0
    std::vector<prime_check> class_mapping;  // T_p f supported on n == p j (mod 24)

    bool ok() const
    {
        auto all = [](const std::vector<prime_check>& v) {
            return std::all_of(v.begin(), v.end(), [](const prime_check& c) { return c.ok; });
        };
        return support_ok && all(annihilation) && all(class_mapping);
    }
};

struct fj_report {
    std::size_t truncation;
    std::vector<fj_form_report> forms;

    bool ok() const
    {
        return std::all_of(forms.begin(), forms.end(), [](const fj_form_report& f) { return f.ok(); });
    }
};

inline std::vector<std::int64_t> default_annihilating_primes() { return {5, 11, 17, 23, 29, 41, 47, 53}; }
inline std::vector<std::int64_t> default_mapping_primes() { return {5, 7, 13, 19, 31, 37, 43, 73}; }

inline fj_report fj_structure_check(std::size_t truncation,
                                    const std::vector<std::int64_t>& annihilating = default_annihilating_primes(),
                                    const std::vector<std::int64_t>& mapping = default_mapping_primes())
{
    if (truncation < 500) {
        throw invalid_input("F_j structure check needs T >= 500");
    }
    fj_report report{truncation, {}};
    for (int j : {1, 7, 13, 19}) {
        const auto form = fj_form(j);
        const auto f = etaq::expand(form, truncation, exact_ring{});
        fj_form_report r{j, true, std::nullopt, {}, {}};
        for (std::size_t n = 0; n <= truncation; ++n) {
            if (!f[n].is_zero() && n % 24 != static_cast<std::size_t>(j)) {
                r.support_ok = false;
                r.support_violation = n;
                break;
            }
        }
        for (auto p : annihilating) {
            const auto image = apply_Tp(f, hecke_context::for_form(form, p));
            prime_check c{p, true, std::nullopt};
            for (std::size_t n = 0; n <= image.truncation(); ++n) {
                if (!image[n].is_zero()) {
                    c = {p, false, n};
                    break;
                }
            }
            r.annihilation.push_back(c);
        }
        for (auto p : mapping) {
            const auto image = apply_Tp(f, hecke_context::for_form(form, p));
            const auto target = static_cast<std::size_t>(mod_floor(p * j, 24));
            prime_check c{p, true, std::nullopt};
            for (std::size_t n = 0; n <= image.truncation(); ++n) {
                if (!image[n].is_zero() && n % 24 != target) {
                    c = {p, false, n};
                    break;
                }
            }
            r.class_mapping.push_back(c);
        }
        report.forms.push_back(std::move(r));
    }
    return report;
}

} // namespace etacong::hecke
