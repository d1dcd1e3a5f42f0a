#pragma once

// Truncated power series in q over either the integers or Z/uZ.
//
// A series stores the coefficients of q^0 .. q^T explicitly, including
// leading zeros, so coefficient n is always the coefficient of q^n.
// Every product of eta factors is evaluated through sparse kernels: the
// factors (q^d;q^d)^{+-1} and (q^d;q^d)^{+-3} have O(sqrt(T)) nonzero terms
// (pentagonal numbers and Jacobi's triangular-number identity), so a
// product over a handful of factors costs O(T^1.5) instead of O(T^2).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "etacong/arith.hpp"
#include "etacong/parallel.hpp"

namespace etacong {

enum class domain_kind { exact, modular };

struct coefficient_domain {
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 31;

    domain_kind kind = domain_kind::exact;
    std::uint32_t modulus = 0; // meaningful only for modular domains

    static coefficient_domain exact() { return {}; }

    static coefficient_domain modular(std::uint64_t modulus)
    {
        if (modulus < 2 || modulus > max_modulus) {
            throw invalid_input("coefficient modulus must lie in [2, 2^31], got " + std::to_string(modulus));
        }
        return {domain_kind::modular, static_cast<std::uint32_t>(modulus)};
    }

    std::string describe() const
    {
        return kind == domain_kind::exact ? std::string("exact") : "mod " + std::to_string(modulus);
    }

    friend bool operator==(const coefficient_domain&, const coefficient_domain&) = default;
};

/// Arbitrary-precision integer coefficients.
class exact_ring {
public:
    using value_type = bigint;

    coefficient_domain domain() const { return coefficient_domain::exact(); }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return v; }
    value_type from_bigint(const bigint& v) const { return v; }
    bigint to_bigint(const value_type& v) const { return v; }
    bool is_zero(const value_type& v) const { return v.is_zero(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }

    value_type unit_inverse(const value_type& a) const
    {
        if (!is_unit(a)) {
            throw not_invertible("constant term " + a.str() + " is not a unit over the integers");
        }
        return a;
    }

    friend bool operator==(const exact_ring&, const exact_ring&) = default;
};

/// Residues modulo a fixed u in [2, 2^31], stored in [0, u).
class mod_ring {
public:
    using value_type = std::uint32_t;

    explicit mod_ring(std::uint64_t modulus) : modulus_(coefficient_domain::modular(modulus).modulus) {}

    std::uint32_t modulus() const noexcept { return modulus_; }
    coefficient_domain domain() const { return coefficient_domain::modular(modulus_); }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return static_cast<value_type>(mod_floor(v, modulus_)); }

    value_type from_bigint(const bigint& v) const
    {
        bigint r = v % modulus_;
        if (r < 0) {
            r += modulus_;
        }
        return r.convert_to<value_type>();
    }

    bigint to_bigint(value_type v) const { return bigint(v); }
    bool is_zero(value_type v) const { return v == 0; }

    value_type add(value_type a, value_type b) const
    {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= modulus_ ? s - modulus_ : s);
    }

    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (modulus_ - b); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t{a} * b % modulus_); }
    value_type neg(value_type a) const { return a == 0 ? 0 : modulus_ - a; }
    bool is_unit(value_type a) const { return std::gcd(a, modulus_) == 1; }

    value_type unit_inverse(value_type a) const
    {
        std::int64_t r0 = modulus_;
        std::int64_t r1 = a;
        std::int64_t s0 = 0;
        std::int64_t s1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        }
        if (r0 != 1) {
            throw not_invertible("constant term " + std::to_string(a) + " is not a unit modulo " + std::to_string(modulus_));
        }
        return from_int(s0);
    }

    friend bool operator==(const mod_ring&, const mod_ring&) = default;

private:
    std::uint32_t modulus_;
};

template <class Ring>
class series {
public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    series(Ring ring, std::size_t truncation) : ring_(std::move(ring)), coeffs_(truncation + 1, ring_.zero()) {}

    series(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw invalid_input("a series needs at least the constant coefficient");
        }
        if constexpr (std::is_same_v<Ring, mod_ring>) {
            for (auto c : coeffs_) {
                if (c >= ring_.modulus()) {
                    throw invalid_input("coefficient not reduced modulo " + std::to_string(ring_.modulus()));
                }
            }
        }
    }

    static series from_integers(Ring ring, std::span<const std::int64_t> values)
    {
        std::vector<value_type> coeffs;
        coeffs.reserve(values.size());
        for (auto v : values) {
            coeffs.push_back(ring.from_int(v));
        }
        return series(std::move(ring), std::move(coeffs));
    }

    static series from_integers(Ring ring, std::initializer_list<std::int64_t> values)
    {
        return from_integers(std::move(ring), std::span<const std::int64_t>(values.begin(), values.size()));
    }

    static series one(Ring ring, std::size_t truncation)
    {
        series out(std::move(ring), truncation);
        out.coeffs_[0] = out.ring_.one();
        return out;
    }

    const Ring& ring() const noexcept { return ring_; }
    coefficient_domain domain() const { return ring_.domain(); }
    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }

    const value_type& operator[](std::size_t n) const { return coeffs_[n]; }
    value_type& operator[](std::size_t n) { return coeffs_[n]; }

    /// Coefficient of q^n, or nullopt when n lies beyond the truncation.
    std::optional<value_type> at(std::size_t n) const
    {
        if (n > truncation()) {
            return std::nullopt;
        }
        return coeffs_[n];
    }

    std::span<const value_type> coefficients() const noexcept { return coeffs_; }
    std::vector<value_type>& mutable_coefficients() noexcept { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [this](const value_type& c) { return ring_.is_zero(c); });
    }

    std::size_t nonzero_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [this](const value_type& c) { return !ring_.is_zero(c); }));
    }

    /// Index of the first nonzero coefficient.
    std::optional<std::size_t> valuation() const
    {
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (!ring_.is_zero(coeffs_[n])) {
                return n;
            }
        }
        return std::nullopt;
    }

    series truncated(std::size_t truncation) const
    {
        if (truncation > this->truncation()) {
            throw invalid_input("cannot extend a series beyond its truncation");
        }
        return series(ring_, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(truncation) + 1));
    }

    friend bool operator==(const series& a, const series& b)
    {
        return a.domain() == b.domain() && a.coeffs_ == b.coeffs_;
    }

private:
    Ring ring_;
    std::vector<value_type> coeffs_;
};

using exact_series = series<exact_ring>;
using mod_series = series<mod_ring>;

/// Reduces an exact series into Z/uZ.
inline mod_series reduce(const exact_series& a, const mod_ring& ring)
{
    std::vector<mod_ring::value_type> coeffs;
    coeffs.reserve(a.truncation() + 1);
    for (const auto& c : a.coefficients()) {
        coeffs.push_back(ring.from_bigint(c));
    }
    return mod_series(ring, std::move(coeffs));
}

/// The factor (q^scale; q^scale)_inf^exponent.
struct eta_factor {
    std::int64_t scale = 1;
    std::int64_t exponent = 0;

    friend bool operator==(const eta_factor&, const eta_factor&) = default;
};

struct sparse_term {
    std::size_t exponent;
    std::int64_t coefficient;
};

/// Nonzero terms sorted by exponent.
using sparse_series = std::vector<sparse_term>;

/// (q^d; q^d)_inf up to q^truncation: sum over k of (-1)^k q^{d k(3k-1)/2}.
inline sparse_series pentagonal_terms(std::size_t scale, std::size_t truncation)
{
    sparse_series out{{0, 1}};
    for (std::size_t k = 1;; ++k) {
        const std::size_t lo = scale * (k * (3 * k - 1) / 2);
        if (lo > truncation) {
            break;
        }
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        out.push_back({lo, sign});
        const std::size_t hi = lo + scale * k;
        if (hi <= truncation) {
            out.push_back({hi, sign});
        }
    }
    return out;
}

/// (q^d; q^d)_inf^3 up to q^truncation via Jacobi:
/// sum over k >= 0 of (-1)^k (2k+1) q^{d k(k+1)/2}.
inline sparse_series jacobi_cube_terms(std::size_t scale, std::size_t truncation)
{
    sparse_series out;
    for (std::size_t k = 0;; ++k) {
        const std::size_t e = scale * (k * (k + 1) / 2);
        if (e > truncation) {
            break;
        }
        const auto c = static_cast<std::int64_t>(2 * k + 1);
        out.push_back({e, (k % 2 == 0) ? c : -c});
    }
    return out;
}

namespace detail {

template <class Ring>
using ring_terms = std::vector<std::pair<std::size_t, typename Ring::value_type>>;

template <class Ring>
ring_terms<Ring> to_ring_terms(const Ring& ring, const sparse_series& s)
{
    ring_terms<Ring> out;
    out.reserve(s.size());
    for (const auto& t : s) {
        auto c = ring.from_int(t.coefficient);
        if (!ring.is_zero(c)) {
            out.emplace_back(t.exponent, std::move(c));
        }
    }
    return out;
}

template <class Ring>
ring_terms<Ring> nonzero_terms(const series<Ring>& a)
{
    ring_terms<Ring> out;
    for (std::size_t n = 0; n <= a.truncation(); ++n) {
        if (!a.ring().is_zero(a[n])) {
            out.emplace_back(n, a[n]);
        }
    }
    return out;
}

// Accumulator layout for the modular kernels. With u <= 2^16 the products
// fit in 32 bits; power-of-two moduli may wrap freely because 2^32 is a
// multiple of u. Otherwise accumulate in 64 bits and reduce every
// `reduce_every` additions.
struct mod_plan {
    bool narrow;
    std::size_t reduce_every;
};

inline mod_plan plan_for(std::uint32_t m)
{
    const std::uint64_t sq = std::uint64_t{m - 1} * (m - 1);
    if (m <= (1U << 16)) {
        if (std::has_single_bit(m)) {
            return {true, std::numeric_limits<std::size_t>::max()};
        }
        const std::uint64_t room = std::numeric_limits<std::uint32_t>::max() - m;
        return {true, static_cast<std::size_t>(std::max<std::uint64_t>(1, room / sq))};
    }
    const std::uint64_t room = std::numeric_limits<std::uint64_t>::max() - m;
    return {false, static_cast<std::size_t>(std::max<std::uint64_t>(1, room / sq))};
}

constexpr std::size_t output_block = std::size_t{1} << 15;
constexpr std::size_t divide_block = std::size_t{1} << 12;

template <class Acc>
void mod_multiply_range(std::span<const std::uint32_t> a, const ring_terms<mod_ring>& terms, std::span<std::uint32_t> out,
                        std::size_t lo, std::size_t hi, std::uint32_t m, std::size_t reduce_every)
{
    std::vector<Acc> acc;
    for (std::size_t blo = lo; blo < hi; blo += output_block) {
        const std::size_t bhi = std::min(hi, blo + output_block);
        acc.assign(bhi - blo, 0);
        std::size_t pending = 0;
        for (const auto& [e, c] : terms) {
            if (e >= bhi) {
                break;
            }
            const std::size_t start = std::max(blo, e);
            Acc* dst = acc.data() + (start - blo);
            const std::uint32_t* src = a.data() + (start - e);
            const std::size_t len = bhi - start;
            const Acc coef = c;
            for (std::size_t i = 0; i < len; ++i) {
                dst[i] += coef * src[i];
            }
            if (++pending == reduce_every) {
                for (auto& x : acc) {
                    x %= m;
                }
                pending = 0;
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            out[blo + i] = static_cast<std::uint32_t>(acc[i] % m);
        }
    }
}

template <class Acc>
void mod_divide(std::span<const std::uint32_t> a, const ring_terms<mod_ring>& negated, std::uint32_t inv0,
                std::span<std::uint32_t> b, std::uint32_t m, std::size_t reduce_every, unsigned jobs)
{
    const std::size_t size = a.size();
    const auto split = std::find_if(negated.begin(), negated.end(), [](const auto& t) { return t.first >= divide_block; });
    const std::span<const std::pair<std::size_t, std::uint32_t>> near(negated.begin(), split);
    const std::span<const std::pair<std::size_t, std::uint32_t>> far(split, negated.end());
    std::vector<Acc> acc(divide_block);
    for (std::size_t lo = 0; lo < size; lo += divide_block) {
        const std::size_t hi = std::min(size, lo + divide_block);
        for (std::size_t i = lo; i < hi; ++i) {
            acc[i - lo] = a[i];
        }
        // Far terms only reach back into finished blocks.
        parallel_for(lo, hi, jobs, 1024, [&](std::size_t plo, std::size_t phi) {
            std::size_t pending = 0;
            for (const auto& [e, c] : far) {
                if (e >= phi) {
                    break;
                }
                const std::size_t start = std::max(plo, e);
                Acc* dst = acc.data() + (start - lo);
                const std::uint32_t* src = b.data() + (start - e);
                const std::size_t len = phi - start;
                const Acc coef = c;
                for (std::size_t i = 0; i < len; ++i) {
                    dst[i] += coef * src[i];
                }
                if (++pending == reduce_every) {
                    for (std::size_t i = plo; i < phi; ++i) {
                        acc[i - lo] %= m;
                    }
                    pending = 0;
                }
            }
        });
        for (std::size_t i = lo; i < hi; ++i) {
            Acc x = acc[i - lo] % m;
            std::size_t pending = 0;
            for (const auto& [e, c] : near) {
                if (e > i) {
                    break;
                }
                x += static_cast<Acc>(c) * b[i - e];
                if (++pending == reduce_every) {
                    x %= m;
                    pending = 0;
                }
            }
            b[i] = static_cast<std::uint32_t>(std::uint64_t(x % m) * inv0 % m);
        }
    }
}

} // namespace detail

/// a times the sparse polynomial given by `terms`, truncated at `truncation`.
template <class Ring>
series<Ring> multiply_terms(const series<Ring>& a, const detail::ring_terms<Ring>& terms, std::size_t truncation,
                            unsigned jobs = 1)
{
    const Ring& ring = a.ring();
    series<Ring> out(ring, truncation);
    if constexpr (std::is_same_v<Ring, mod_ring>) {
        const std::uint32_t m = ring.modulus();
        const auto plan = detail::plan_for(m);
        std::span<const std::uint32_t> src = a.coefficients();
        std::span<std::uint32_t> dst = out.mutable_coefficients();
        parallel_for(0, truncation + 1, jobs, detail::output_block, [&](std::size_t lo, std::size_t hi) {
            if (plan.narrow) {
                detail::mod_multiply_range<std::uint32_t>(src, terms, dst, lo, hi, m, plan.reduce_every);
            } else {
                detail::mod_multiply_range<std::uint64_t>(src, terms, dst, lo, hi, m, plan.reduce_every);
            }
        });
    } else {
        for (const auto& [e, c] : terms) {
            if (e > truncation) {
                break;
            }
            if (c == 1) {
                for (std::size_t i = e; i <= truncation; ++i) {
                    out[i] += a[i - e];
                }
            } else if (c == -1) {
                for (std::size_t i = e; i <= truncation; ++i) {
                    out[i] -= a[i - e];
                }
            } else {
                for (std::size_t i = e; i <= truncation; ++i) {
                    out[i] += c * a[i - e];
                }
            }
        }
    }
    return out;
}

/// Solves b * s = a for b, where s is given by `terms` (sorted, first term
/// at exponent 0 with a unit coefficient).
template <class Ring>
series<Ring> divide_terms(const series<Ring>& a, const detail::ring_terms<Ring>& terms, unsigned jobs = 1)
{
    const Ring& ring = a.ring();
    if (terms.empty() || terms.front().first != 0) {
        throw not_invertible("divisor has zero constant term");
    }
    const auto inv0 = ring.unit_inverse(terms.front().second);
    const std::size_t T = a.truncation();
    series<Ring> out(ring, T);
    if constexpr (std::is_same_v<Ring, mod_ring>) {
        const std::uint32_t m = ring.modulus();
        detail::ring_terms<mod_ring> negated;
        for (std::size_t k = 1; k < terms.size() && terms[k].first <= T; ++k) {
            negated.emplace_back(terms[k].first, ring.neg(terms[k].second));
        }
        const auto plan = detail::plan_for(m);
        if (plan.narrow) {
            detail::mod_divide<std::uint32_t>(a.coefficients(), negated, inv0, out.mutable_coefficients(), m,
                                              plan.reduce_every, jobs);
        } else {
            detail::mod_divide<std::uint64_t>(a.coefficients(), negated, inv0, out.mutable_coefficients(), m,
                                              plan.reduce_every, jobs);
        }
    } else {
        for (std::size_t n = 0; n <= T; ++n) {
            bigint x = a[n];
            for (std::size_t k = 1; k < terms.size(); ++k) {
                const auto& [e, c] = terms[k];
                if (e > n) {
                    break;
                }
                if (c == 1) {
                    x -= out[n - e];
                } else if (c == -1) {
                    x += out[n - e];
                } else {
                    x -= c * out[n - e];
                }
            }
            out[n] = (inv0 == 1) ? std::move(x) : bigint(-x);
        }
    }
    return out;
}

template <class Ring>
void require_same_domain(const series<Ring>& a, const series<Ring>& b)
{
    if (!(a.ring() == b.ring())) {
        throw domain_mismatch("coefficient domains differ: " + a.domain().describe() + " vs " + b.domain().describe());
    }
}

/// Product truncated at the smaller truncation. Runs in O(T * k) where k is
/// the number of nonzero terms of the sparser operand.
template <class Ring>
series<Ring> multiply(const series<Ring>& a, const series<Ring>& b, unsigned jobs = 1)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    const bool a_sparser = a.nonzero_count() < b.nonzero_count();
    const series<Ring>& dense = a_sparser ? b : a;
    const series<Ring>& sparse = a_sparser ? a : b;
    return multiply_terms(dense.truncated(T), detail::nonzero_terms(sparse.truncated(T)), T, jobs);
}

/// Multiplicative inverse; requires a unit constant term.
template <class Ring>
series<Ring> invert(const series<Ring>& a, unsigned jobs = 1)
{
    if (!a.ring().is_unit(a[0])) {
        throw not_invertible("constant term is not a unit in the " + a.domain().describe() + " domain");
    }
    return divide_terms(series<Ring>::one(a.ring(), a.truncation()), detail::nonzero_terms(a), jobs);
}

template <class Ring>
series<Ring> add(const series<Ring>& a, const series<Ring>& b)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    series<Ring> out(a.ring(), T);
    for (std::size_t n = 0; n <= T; ++n) {
        out[n] = a.ring().add(a[n], b[n]);
    }
    return out;
}

template <class Ring>
series<Ring> subtract(const series<Ring>& a, const series<Ring>& b)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    series<Ring> out(a.ring(), T);
    for (std::size_t n = 0; n <= T; ++n) {
        out[n] = a.ring().sub(a[n], b[n]);
    }
    return out;
}

template <class Ring>
series<Ring> scale(const series<Ring>& a, const typename Ring::value_type& c)
{
    series<Ring> out(a.ring(), a.truncation());
    for (std::size_t n = 0; n <= a.truncation(); ++n) {
        out[n] = a.ring().mul(c, a[n]);
    }
    return out;
}

/// q^shift * a, keeping the truncation of a.
template <class Ring>
series<Ring> shift(const series<Ring>& a, std::size_t amount)
{
    series<Ring> out(a.ring(), a.truncation());
    for (std::size_t n = amount; n <= a.truncation(); ++n) {
        out[n] = a[n - amount];
    }
    return out;
}

/// Substitutes q -> q^step, producing a series truncated at `truncation`.
template <class Ring>
series<Ring> spread(const series<Ring>& a, std::size_t step, std::size_t truncation)
{
    series<Ring> out(a.ring(), truncation);
    for (std::size_t n = 0; n * step <= truncation && n <= a.truncation(); ++n) {
        out[n * step] = a[n];
    }
    return out;
}

/// b(n) = a(m n + t), truncated at floor((T - t) / m).
template <class Ring>
series<Ring> extract_progression(const series<Ring>& a, std::size_t m, std::size_t t)
{
    if (m == 0 || t >= m) {
        throw invalid_input("progression needs 0 <= t < m");
    }
    if (a.truncation() < t) {
        throw invalid_input("series truncation is below the progression offset");
    }
    const std::size_t T = (a.truncation() - t) / m;
    series<Ring> out(a.ring(), T);
    for (std::size_t n = 0; n <= T; ++n) {
        out[n] = a[m * n + t];
    }
    return out;
}

/// Product of (q^d;q^d)^e over the given factors, truncated at q^truncation.
///
/// Works in x = q^g with g the gcd of the scales, then spreads back. Each
/// |e| is split as 3a + b: a passes with the Jacobi cube series and b passes
/// with the pentagonal series, multiplying for e > 0 and dividing for e < 0.
template <class Ring>
series<Ring> build_eta_product(std::span<const eta_factor> factors, std::size_t truncation, const Ring& ring,
                               unsigned jobs = 1)
{
    if (factors.empty()) {
        throw invalid_input("eta product needs at least one factor");
    }
    std::int64_t g = 0;
    for (const auto& f : factors) {
        if (f.scale < 1) {
            throw invalid_input("eta factor scale must be positive");
        }
        if (f.exponent != 0) {
            g = std::gcd(g, f.scale);
        }
    }
    if (g == 0) {
        return series<Ring>::one(ring, truncation);
    }
    const auto step = static_cast<std::size_t>(g);
    const std::size_t reduced = truncation / step;
    auto acc = series<Ring>::one(ring, reduced);
    for (const auto& f : factors) {
        if (f.exponent == 0) {
            continue;
        }
        const auto d = static_cast<std::size_t>(f.scale) / step;
        const std::uint64_t magnitude = static_cast<std::uint64_t>(f.exponent < 0 ? -f.exponent : f.exponent);
        const auto cube = detail::to_ring_terms(ring, jacobi_cube_terms(d, reduced));
        const auto penta = detail::to_ring_terms(ring, pentagonal_terms(d, reduced));
        for (std::uint64_t k = 0; k < magnitude / 3; ++k) {
            acc = f.exponent > 0 ? multiply_terms(acc, cube, reduced, jobs) : divide_terms(acc, cube, jobs);
        }
        for (std::uint64_t k = 0; k < magnitude % 3; ++k) {
            acc = f.exponent > 0 ? multiply_terms(acc, penta, reduced, jobs) : divide_terms(acc, penta, jobs);
        }
    }
    return step == 1 ? acc : spread(acc, step, truncation);
}

template <class Ring>
series<Ring> build_eta_product(std::initializer_list<eta_factor> factors, std::size_t truncation, const Ring& ring,
                               unsigned jobs = 1)
{
    return build_eta_product(std::span<const eta_factor>(factors.begin(), factors.size()), truncation, ring, jobs);
}

/// (q^d; q^d)_inf^e truncated at q^truncation.
template <class Ring>
series<Ring> expand_eta_factor(eta_factor factor, std::size_t truncation, const Ring& ring)
{
    const eta_factor one[] = {factor};
    return build_eta_product(std::span<const eta_factor>(one), truncation, ring);
}

} // namespace etacong
