#include <gtest/gtest.h>

#include "etacong/generating_functions.hpp"
#include "etacong/series.hpp"
#include "etacong/series_io.hpp"

#include "reference.hpp"

using namespace etacong;

namespace {

exact_series ex(std::vector<std::int64_t> v) { return exact_series::from_integers(exact_ring{}, v); }

mod_series md(std::uint32_t u, std::vector<std::int64_t> v) { return mod_series::from_integers(mod_ring(u), v); }

} // namespace

TEST(Series, ConstructionInvariants)
{
    const exact_series z(exact_ring{}, 5);
    EXPECT_EQ(z.truncation(), 5U);
    EXPECT_EQ(z.coefficients().size(), 6U);
    EXPECT_TRUE(z.is_zero());
    EXPECT_THROW(mod_series(mod_ring(4), std::vector<std::uint32_t>{1, 4}), invalid_input);
    EXPECT_THROW(mod_ring(1), invalid_input);
    EXPECT_NO_THROW(mod_ring(std::uint64_t{1} << 31));
    EXPECT_THROW(mod_ring((std::uint64_t{1} << 31) + 1), invalid_input);
    const auto m = md(5, {-1, 7});
    const auto c = m.coefficients();
    EXPECT_EQ(std::vector<std::uint32_t>(c.begin(), c.end()), (std::vector<std::uint32_t>{4, 2}));
}

TEST(Series, ExpandEtaFactor)
{
    EXPECT_EQ(expand_eta_factor({1, 1}, 7, exact_ring{}), ex({1, -1, -1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(expand_eta_factor({1, 0}, 5, exact_ring{}), ex({1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(expand_eta_factor({3, 8}, 6, exact_ring{}), ex({1, 0, 0, -8, 0, 0, 20}));
}

TEST(Series, Multiply)
{
    EXPECT_EQ(multiply(ex({1, -1, 0, 0}), ex({1, 1, 1, 1})), ex({1, 0, 0, 0}));
    const auto p = expand_eta_factor({1, 1}, 4, exact_ring{});
    EXPECT_EQ(multiply(p, p), ex({1, -2, -1, 2, 1}));
    // truncation is the smaller of the two
    EXPECT_EQ(multiply(ex({1, 1, 1}), ex({1, 1, 1, 1, 1})).truncation(), 2U);
    EXPECT_THROW(multiply(md(4, {1}), md(8, {1})), domain_mismatch);
}

TEST(Series, FrobeniusModTwo)
{
    const mod_ring two(2);
    EXPECT_EQ(expand_eta_factor({1, 2}, 200, two), expand_eta_factor({2, 1}, 200, two));
}

TEST(Series, Invert)
{
    EXPECT_EQ(invert(ex({1, -1, 0, 0, 0})), ex({1, 1, 1, 1, 1}));
    EXPECT_EQ(invert(expand_eta_factor({2, 2}, 6, exact_ring{})), ex({1, 0, 2, 0, 5, 0, 10}));
    const mod_ring eight(8);
    const auto f = expand_eta_factor({24, 1}, 100, eight);
    const auto g = invert(f);
    EXPECT_EQ(g[0], 1U);
    EXPECT_EQ(multiply(f, g), mod_series::one(eight, 100));
    EXPECT_THROW(invert(ex({2, 1})), not_invertible);
    EXPECT_THROW(invert(md(8, {2, 1})), not_invertible);
    EXPECT_NO_THROW(invert(md(8, {3, 1})));
    EXPECT_EQ(multiply(invert(md(8, {3, 1, 5})), md(8, {3, 1, 5})), md(8, {1, 0, 0}));
}

TEST(Series, BuildEtaProduct)
{
    const mod_ring four(4);
    const auto c = build_eta_product({{2, 2}, {4, 1}}, 48, four);
    EXPECT_EQ(c[18], 0U);
    EXPECT_EQ(c[28], 0U);
    EXPECT_EQ(build_eta_product({{1, 1}}, 30, exact_ring{}), expand_eta_factor({1, 1}, 30, exact_ring{}));
    EXPECT_EQ(build_eta_product({{4, 3}, {2, -2}}, 8, exact_ring{}), ex({1, 0, 2, 0, 2, 0, 4, 0, 5}));
}

TEST(Series, BuildEtaProductMatchesReference)
{
    const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> cases{
        {{1, -1}},          {{1, 24}},          {{4, 3}, {2, -2}},  {{8, 5}, {2, -5}, {16, -2}},
        {{96, 5}, {24, -1}}, {{3, 8}},          {{1, -7}, {5, 3}},  {{2, 2}, {1, -2}},
        {{6, 4}, {12, -4}, {36, 11}}};
    for (const auto& c : cases) {
        std::vector<eta_factor> f;
        for (auto [d, e] : c) {
            f.push_back({d, e});
        }
        const auto got = build_eta_product(std::span<const eta_factor>(f), 300, exact_ring{});
        const auto want = reference::eta_product(c, 300);
        for (std::size_t n = 0; n <= 300; ++n) {
            ASSERT_EQ(got[n], want[n]) << "n = " << n;
        }
        for (std::uint32_t u : {2U, 5U, 8U, 20U, 1024U, 65536U, 1000003U, 2147483648U}) {
            const auto m = build_eta_product(std::span<const eta_factor>(f), 300, mod_ring(u));
            for (std::size_t n = 0; n <= 300; ++n) {
                bigint r = want[n] % u;
                if (r < 0) {
                    r += u;
                }
                ASSERT_EQ(bigint(m[n]), r) << "u = " << u << " n = " << n;
            }
        }
    }
}

TEST(Series, ThreadedKernelsAgree)
{
    const mod_ring eight(8);
    const auto one = named_series(named_function::eobar, 200000, eight, 1);
    const auto four = named_series(named_function::eobar, 200000, eight, 4);
    EXPECT_EQ(one, four);
    const auto a = named_series(named_function::eou_even, 2000, exact_ring{}, 1);
    const auto b = named_series(named_function::eou_even, 2000, exact_ring{}, 3);
    EXPECT_EQ(a, b);
}

TEST(Series, NamedSeries)
{
    const exact_ring zz;
    EXPECT_EQ(named_series(named_function::eobar, 8, zz), ex({1, 0, 2, 0, 2, 0, 4, 0, 5}));
    EXPECT_EQ(named_series(named_function::eta8_3z, 7, zz), ex({0, 1, 0, 0, -8, 0, 0, 20}));
    const auto e = named_series("eobar", 9, zz);
    for (std::size_t n = 1; n <= 9; n += 2) {
        EXPECT_TRUE(e[n].is_zero());
    }
    EXPECT_EQ(named_series("eo", 8, zz)[8], 12);
    EXPECT_EQ(named_series("thm2_form", 100, zz).valuation(), std::optional<std::size_t>(19));
    EXPECT_THROW(named_series("nosuch", 5, zz), invalid_input);
    // unit constant term: T = 0 gives [1]
    for (const auto& [name, f] : named_function_table) {
        if (f != named_function::eta8_3z && f != named_function::thm2_form) {
            EXPECT_EQ(named_series(f, 0, zz), ex({1})) << name;
        }
    }
}

TEST(Series, ExtractProgression)
{
    const exact_ring zz;
    const auto eobar = named_series(named_function::eobar, 20, zz);
    EXPECT_EQ(extract_progression(eobar, 2, 0), named_series(named_function::eobar_even, 10, zz));
    EXPECT_EQ(extract_progression(eobar, 1, 0), eobar);
    const auto e5 = named_series(named_function::eobar, 48, mod_ring(5));
    const auto sub = extract_progression(e5, 10, 8);
    EXPECT_EQ(sub.truncation(), 4U);
    EXPECT_TRUE(sub.is_zero());
}

TEST(Series, ShiftSpreadScale)
{
    EXPECT_EQ(shift(ex({1, 2, 3}), 1), ex({0, 1, 2}));
    EXPECT_EQ(spread(ex({1, 2, 3}), 2, 5), ex({1, 0, 2, 0, 3, 0}));
    EXPECT_EQ(scale(ex({1, -2}), bigint(3)), ex({3, -6}));
    EXPECT_EQ(add(ex({1, 2}), ex({3, 4, 5})), ex({4, 6}));
    EXPECT_EQ(subtract(md(4, {1, 0}), md(4, {3, 1})), md(4, {2, 3}));
}

TEST(Series, Dissection)
{
    EXPECT_TRUE(dissection_check(2));
    EXPECT_EQ(named_series(named_function::eobar, 0, exact_ring{}), ex({1}));
    const auto lhs = build_eta_product({{1, -2}}, 2, exact_ring{});
    EXPECT_EQ(lhs, ex({1, 2, 5}));
    EXPECT_TRUE(dissection_check(500));
    EXPECT_EQ(dissection_mismatch(50, 1), std::optional<std::size_t>(1));
    EXPECT_THROW(dissection_check(1), invalid_input);
}

TEST(Series, JsonAndCsv)
{
    const auto e = named_series(named_function::eobar, 8, exact_ring{});
    const auto j = to_json(e);
    EXPECT_EQ(j["coeffs"][8], "5");
    EXPECT_EQ(j["domain"]["kind"], "exact");
    EXPECT_EQ(std::get<exact_series>(series_from_json(j)), e);
    const auto m = named_series(named_function::eobar, 8, mod_ring(4));
    EXPECT_EQ(std::get<mod_series>(series_from_json(to_json(m))), m);
    EXPECT_EQ(to_csv(ex({1, -2})), "index,coefficient\n0,1\n1,-2\n");
    EXPECT_THROW(series_from_json(nlohmann::json{{"domain", {{"kind", "exact"}}}, {"truncation", 2}}), invalid_input);
    // a big coefficient survives the round trip
    const auto big = named_series(named_function::eo, 400, exact_ring{});
    EXPECT_EQ(std::get<exact_series>(series_from_json(to_json(big))), big);
}
