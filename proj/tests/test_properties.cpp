#include <random>

#include <gtest/gtest.h>

#include "etacong/generating_functions.hpp"
#include "etacong/hecke.hpp"
#include "etacong/oracle.hpp"
#include "etacong/series.hpp"

#include "reference.hpp"

using namespace etacong;

namespace {

std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

exact_series random_exact(std::size_t T, std::int64_t bound, bool unit_constant)
{
    std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
    exact_series a(exact_ring{}, T);
    for (std::size_t n = 0; n <= T; ++n) {
        a[n] = coeff(rng());
    }
    if (unit_constant) {
        a[0] = (rng()() & 1U) != 0 ? 1 : -1;
    }
    return a;
}

// Sparse random series exercise the sparse kernels rather than the dense path.
exact_series random_sparse(std::size_t T, std::size_t terms)
{
    std::uniform_int_distribution<std::size_t> where(1, T);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    exact_series a(exact_ring{}, T);
    a[0] = 1;
    for (std::size_t i = 0; i < terms; ++i) {
        a[where(rng())] = coeff(rng());
    }
    return a;
}

std::vector<bigint> as_vector(const exact_series& a)
{
    const auto c = a.coefficients();
    return {c.begin(), c.end()};
}

} // namespace

TEST(Properties, InvertRoundtripExact)
{
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = trial % 2 == 0 ? random_exact(120, 50, true) : random_sparse(400, 12);
        EXPECT_EQ(multiply(a, invert(a)), exact_series::one(exact_ring{}, a.truncation()));
    }
}

TEST(Properties, InvertRoundtripModular)
{
    for (std::uint32_t u : {2U, 8U, 9U, 20U, 1U << 16, 1000003U, 1U << 31}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto a = reduce(random_exact(300, 1000, true), mod_ring(u));
            if (u % 3 != 0) {
                a[0] = 3 % u == 0 ? 1 : 3 % u; // a non-trivial unit
            }
            EXPECT_EQ(multiply(a, invert(a)), mod_series::one(mod_ring(u), 300)) << u;
        }
    }
}

TEST(Properties, MultiplyMatchesConvolution)
{
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_exact(150, 30, false);
        const auto b = trial % 2 == 0 ? random_exact(150, 30, false) : random_sparse(150, 6);
        EXPECT_EQ(as_vector(multiply(a, b)), reference::convolve(as_vector(a), as_vector(b)));
        EXPECT_EQ(multiply(a, b), multiply(b, a));
    }
}

TEST(Properties, MultiplyAssociative)
{
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_exact(100, 10, false);
        const auto b = random_sparse(100, 8);
        const auto c = random_exact(100, 10, false);
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}

TEST(Properties, ReductionIsARingMap)
{
    for (std::uint32_t u : {2U, 4U, 5U, 8U, 20U, 65536U, 999983U}) {
        const mod_ring ring(u);
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = random_exact(200, 100000, true);
            const auto b = random_sparse(200, 10);
            EXPECT_EQ(reduce(multiply(a, b), ring), multiply(reduce(a, ring), reduce(b, ring)));
            EXPECT_EQ(reduce(invert(a), ring), invert(reduce(a, ring)));
            EXPECT_EQ(reduce(add(a, b), ring), add(reduce(a, ring), reduce(b, ring)));
        }
    }
}

TEST(Properties, PentagonalSupport)
{
    const std::size_t T = 5000;
    const auto p = expand_eta_factor({1, 1}, T, exact_ring{});
    std::vector<int> want(T + 1, 0);
    for (std::int64_t k = -100; k <= 100; ++k) {
        const std::int64_t g = k * (3 * k - 1) / 2;
        if (g <= static_cast<std::int64_t>(T)) {
            want[static_cast<std::size_t>(g)] = k % 2 == 0 ? 1 : -1;
        }
    }
    for (std::size_t n = 0; n <= T; ++n) {
        EXPECT_EQ(p[n], want[n]) << n;
    }
}

TEST(Properties, FrobeniusModTwo)
{
    const mod_ring two(2);
    for (std::int64_t d = 1; d <= 7; ++d) {
        for (std::size_t T : {1U, 17U, 400U, 3001U}) {
            EXPECT_EQ(expand_eta_factor({d, 2}, T, two), expand_eta_factor({2 * d, 1}, T, two)) << d << " " << T;
        }
    }
}

TEST(Properties, EobarParityIsPentagonal)
{
    const std::size_t T = 100000;
    const mod_ring two(2);
    const auto e = named_series(named_function::eobar, T, two);
    EXPECT_EQ(e, expand_eta_factor({8, 1}, T, two));
    for (std::size_t n = 0; n <= T; ++n) {
        const bool odd = oracle::pentagonal_parity_EObar(static_cast<std::int64_t>(n)) == oracle::parity::odd;
        ASSERT_EQ(e[n] == 1, odd) << n;
    }
}

TEST(Properties, TruncationMonotone)
{
    for (const auto& [name, f] : named_function_table) {
        const auto big = named_series(f, 700, exact_ring{});
        for (std::size_t T : {0U, 1U, 19U, 20U, 333U}) {
            EXPECT_EQ(big.truncated(T), named_series(f, T, exact_ring{})) << name << " " << T;
        }
        const auto m = named_series(f, 5000, mod_ring(8));
        EXPECT_EQ(m.truncated(1234), named_series(f, 1234, mod_ring(8))) << name;
    }
}

TEST(Properties, EvenPartsOfEobar)
{
    for (std::size_t T : {2U, 21U, 500U, 4001U}) {
        EXPECT_EQ(extract_progression(named_series(named_function::eobar, T, exact_ring{}), 2, 0),
                  named_series(named_function::eobar_even, T / 2, exact_ring{}));
        EXPECT_EQ(extract_progression(named_series(named_function::eou, T, exact_ring{}), 2, 0),
                  named_series(named_function::eou_even, T / 2, exact_ring{}));
    }
}

TEST(Properties, HeckeLinear)
{
    for (std::int64_t p : {2, 5, 7, 13}) {
        const auto ctx = hecke::hecke_context::make(4, p % 2 == 0 ? 0 : 1, p);
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = random_exact(300, 1000, false);
            const auto b = random_exact(300, 1000, false);
            EXPECT_EQ(hecke::apply_Tp(add(a, b), ctx), add(hecke::apply_Tp(a, ctx), hecke::apply_Tp(b, ctx)));
        }
    }
}

TEST(Properties, HeckeSupportFilter)
{
    // f supported on n == c (mod 24), p coprime to 24: nonzero output indices
    // n satisfy p n == c or n == c p (mod 24).
    for (int c : {1, 7, 13, 19}) {
        exact_series f(exact_ring{}, 2400);
        std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
        for (std::size_t n = static_cast<std::size_t>(c); n <= 2400; n += 24) {
            f[n] = coeff(rng());
        }
        for (std::int64_t p : {5, 7, 11, 13, 29}) {
            const auto g = hecke::apply_Tp(f, hecke::hecke_context::make(2, 1, p));
            for (std::size_t n = 0; n <= g.truncation(); ++n) {
                if (!g[n].is_zero()) {
                    const auto pn = mod_floor(p * static_cast<std::int64_t>(n), 24);
                    const auto np = mod_floor(static_cast<std::int64_t>(n) - c * p, 24);
                    EXPECT_TRUE(pn == c || np == 0) << c << " " << p << " " << n;
                }
            }
        }
    }
}
