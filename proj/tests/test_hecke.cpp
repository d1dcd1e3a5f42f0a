#include <fstream>

#include <gtest/gtest.h>

#include "json.hpp"

#include "etacong/hecke.hpp"

using namespace etacong;
using namespace etacong::hecke;

namespace {

const etaq::eta_quotient eta8_3z(9, {{3, 8}});

} // namespace

TEST(Hecke, ContextValidation)
{
    EXPECT_THROW(hecke_context::make(4, 1, 4), invalid_input);
    EXPECT_THROW(hecke_context::make(0, 1, 5), invalid_input);
    const auto ctx = hecke_context::for_form(eta8_3z, 5);
    EXPECT_EQ(ctx.weight, 4);
    EXPECT_EQ(ctx.chi, 1);
}

TEST(Hecke, ApplyTp)
{
    const auto f = named_series(named_function::eta8_3z, 50, exact_ring{});
    const auto g = apply_Tp(f, hecke_context::for_form(eta8_3z, 5));
    EXPECT_EQ(g.truncation(), 10U);
    EXPECT_TRUE(g.is_zero());

    const auto f49 = named_series(named_function::eta8_3z, 49, exact_ring{});
    const auto h = apply_Tp(f49, hecke_context::for_form(eta8_3z, 7));
    EXPECT_EQ(h, scale(f49.truncated(7), bigint(20)));

    const exact_series zero(exact_ring{}, 40);
    EXPECT_TRUE(apply_Tp(zero, hecke_context::make(4, 1, 7)).is_zero());

    EXPECT_THROW(apply_Tp(exact_series(exact_ring{}, 3), hecke_context::make(4, 1, 5)), invalid_input);
    const auto m = named_series(named_function::eta8_3z, 50, mod_ring(10));
    EXPECT_THROW(apply_Tp(m, hecke_context::make(4, 1, 5)), domain_mismatch);
    EXPECT_NO_THROW(apply_Tp(m, hecke_context::make(4, 1, 7)));
}

TEST(Hecke, EigenResidual)
{
    const auto f = named_series(named_function::eta8_3z, 1000, exact_ring{});
    const auto r5 = eigen_residual(f, hecke_context::for_form(eta8_3z, 5));
    EXPECT_EQ(r5.lambda, 0);
    EXPECT_EQ(r5.status, eigen_status::exact_match);
    EXPECT_EQ(r5.checked_to, 200U);
    const auto r13 = eigen_residual(f, hecke_context::for_form(eta8_3z, 13));
    EXPECT_EQ(r13.lambda, f[13]);
    EXPECT_EQ(r13.status, eigen_status::exact_match);
    EXPECT_EQ(f[25], -125);

    const auto j = to_json(r13);
    EXPECT_EQ(j["lambda"], "-70");
    EXPECT_EQ(j["status"], "exact-match");
    EXPECT_EQ(j["p"], "13");

    // a non-eigenform is caught
    auto g = f;
    g[26] += 1;
    const auto bad = eigen_residual(g, hecke_context::for_form(eta8_3z, 13));
    EXPECT_EQ(bad.status, eigen_status::mismatch);
    ASSERT_TRUE(bad.mismatch_at.has_value());
    EXPECT_LE(*bad.mismatch_at, 1000U / 13);

    auto unnormalized = scale(f, bigint(2));
    EXPECT_THROW(eigen_residual(unnormalized, hecke_context::for_form(eta8_3z, 5)), invalid_input);
}

TEST(Hecke, Thm2FormEigen)
{
    const etaq::eta_quotient form(2304, {{96, 5}, {24, -1}});
    const auto f = named_series(named_function::thm2_form, 20000, exact_ring{});
    const auto r = eigen_residual(f, hecke_context::for_form(form, 73));
    EXPECT_EQ(r.status, eigen_status::exact_match);
    EXPECT_EQ(r.lambda, f[19 * 73]);
}

TEST(Hecke, VanishingOnP2Progressions)
{
    // a(p^2 n + p r) = 0 for p in {5, 11}, p not dividing r
    const std::size_t T = 6000;
    const auto f = named_series(named_function::eta8_3z, T, exact_ring{});
    for (std::size_t p : {5U, 11U}) {
        for (std::size_t k = p; k <= T; k += p) {
            if ((k / p) % p != 0) {
                EXPECT_TRUE(f[k].is_zero()) << p << " " << k;
            }
        }
    }
}

TEST(Hecke, EobarParityRecurrence)
{
    // EObar(25 n + 8) == EObar(n) (mod 2)
    const std::size_t T = 20000;
    const auto e = named_series(named_function::eobar, T, mod_ring(2));
    for (std::size_t n = 0; 25 * n + 8 <= T; ++n) {
        EXPECT_EQ(e[25 * n + 8], e[n]) << n;
    }
}

TEST(Hecke, FamilyIndices)
{
    const std::vector<std::int64_t> five{5};
    const std::vector<std::int64_t> five_five{5, 5};
    EXPECT_EQ(family_index_thm1(five, 1, 0), 13);
    EXPECT_EQ(family_index_thm1(five, 2, 3), 93);
    EXPECT_EQ(family_index_thm1(five_five, 1, 0), 333);
    const std::vector<std::int64_t> p1009{1009};
    EXPECT_EQ(family_index_thm2(p1009, 1, 0), 6455918);
    EXPECT_EQ(family_index_thm2(p1009, 2, 0), 6463990);
    EXPECT_EQ(family_index_thm2(p1009, 1, 1), bigint(8144648) + 8072 + 6447846);
    EXPECT_THROW(family_index_thm2(p1009, 1009, 0), invalid_input);

    const std::vector<std::int64_t> seven{7}; // 7 == 1 mod 3
    EXPECT_THROW(family_index_thm1(seven, 1, 0), invalid_input);
    EXPECT_THROW(family_index_thm1(five, 5, 0), invalid_input);
    EXPECT_THROW(family_index_thm2(five, 1, 0), invalid_input);
    const std::vector<std::int64_t> three{3};
    EXPECT_THROW(family_index_thm1(three, 1, 0), invalid_input);
}

TEST(Hecke, FamilyThm1)
{
    const auto e = named_series(named_function::eobar, 2000, mod_ring(2));
    const std::vector<std::int64_t> five{5};
    const std::vector<std::int64_t> five_five{5, 5};
    EXPECT_EQ(verify_family_thm1(e, five, 1, 0).verdict, family_verdict::holds);
    EXPECT_EQ(verify_family_thm1(e, five, 2, 3).verdict, family_verdict::holds);
    EXPECT_EQ(verify_family_thm1(e, five_five, 1, 0).verdict, family_verdict::holds);
    EXPECT_EQ(verify_family_thm1(e, five, 1, 100).verdict, family_verdict::out_of_range);
    EXPECT_THROW(check_index(e, 13, 4), domain_mismatch);
}

TEST(Hecke, Eligibility)
{
    EXPECT_TRUE(eligible_prime_search_thm2(20).empty());
    const auto upto1009 = eligible_prime_search_thm2(1009);
    EXPECT_NE(std::find(upto1009.begin(), upto1009.end(), 1009), upto1009.end());
    EXPECT_EQ(eligibility_index(1009), 6390);

    std::ifstream in(ETACONG_FIXTURES "/eligible_primes_5000.json");
    ASSERT_TRUE(in);
    const auto fixture = nlohmann::json::parse(in);
    std::vector<std::int64_t> want;
    for (const auto& p : fixture["eligible"]) {
        want.push_back(std::stoll(p.get<std::string>()));
    }
    EXPECT_EQ(eligible_prime_search_thm2(5000), want);
    EXPECT_THROW(eligible_prime_search_thm2(1), invalid_input);
}

TEST(Hecke, FjStructure)
{
    const auto r = fj_structure_check(1500);
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.forms.size(), 4U);
    const auto f19 = etaq::expand(fj_form(19), 100, exact_ring{});
    EXPECT_EQ(f19.valuation(), std::optional<std::size_t>(19));
    for (std::size_t n = 0; n <= 100; ++n) {
        if (!f19[n].is_zero()) {
            EXPECT_EQ(n % 24, 19U);
        }
    }
    const auto f1 = etaq::expand(fj_form(1), 100, exact_ring{});
    EXPECT_EQ(f1.valuation(), std::optional<std::size_t>(1));
    EXPECT_EQ(f1[1], 1);
    EXPECT_THROW(fj_form(5), invalid_input);
    EXPECT_THROW(fj_structure_check(499), invalid_input);
}
