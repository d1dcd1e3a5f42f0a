#include <gtest/gtest.h>

#include "etacong/generating_functions.hpp"
#include "etacong/oracle.hpp"

using namespace etacong;
using namespace etacong::oracle;

TEST(Oracle, PartitionCounts)
{
    // p(n) for n = 0..12
    const std::vector<int> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (std::size_t n = 0; n < p.size(); ++n) {
        EXPECT_EQ(count_partitions(static_cast<std::int64_t>(n)), p[n]);
    }
    EXPECT_EQ(count_partitions(40), 37338);
}

TEST(Oracle, EO)
{
    EXPECT_EQ(count_EO(8), 12);
    EXPECT_EQ(count_EO(0), 1);
    std::int64_t by_hand = 0;
    for_each_partition(5, [&](const partition& q) {
        if (evens_below_odds(q)) {
            ++by_hand;
        }
    });
    EXPECT_EQ(count_EO(5), by_hand);
    EXPECT_EQ(count_EO(5), 4); // 5, 3+2, 3+1+1, 1+1+1+1+1
}

TEST(Oracle, EObar)
{
    EXPECT_EQ(count_EObar(8), 5);
    EXPECT_EQ(count_EObar(6), 4);
    for (std::int64_t n = 1; n <= 39; n += 2) {
        EXPECT_EQ(count_EObar(n), 0) << n;
    }
}

TEST(Oracle, EOu)
{
    EXPECT_EQ(count_EOu(0), 1);
    EXPECT_EQ(count_EOu(2), 2);
    EXPECT_EQ(count_EOu(4), 3);
    EXPECT_EQ(count_EOu(1), 0);
}

TEST(Oracle, Cap)
{
    EXPECT_THROW(count_EO(61), cap_exceeded);
    EXPECT_NO_THROW(count_EObar(12, 12));
    EXPECT_THROW(count_EObar(13, 12), cap_exceeded);
    EXPECT_THROW(count_partitions(-1), invalid_input);
}

TEST(Oracle, PentagonalParity)
{
    EXPECT_EQ(pentagonal_parity_EObar(0), parity::odd);
    EXPECT_EQ(pentagonal_parity_EObar(8), parity::odd);
    EXPECT_EQ(pentagonal_parity_EObar(4), parity::even);
    EXPECT_EQ(pentagonal_parity_EObar(16), parity::odd);
    EXPECT_EQ(pentagonal_parity_EObar(24), parity::even);
    for (std::int64_t n = 0; n <= 40; ++n) {
        const auto want = count_EObar(n) % 2 == 1 ? parity::odd : parity::even;
        EXPECT_EQ(pentagonal_parity_EObar(n), want) << n;
    }
}

TEST(Oracle, AgreesWithSeries)
{
    const exact_ring zz;
    const auto eobar = named_series(named_function::eobar, 40, zz);
    const auto eo = named_series(named_function::eo, 40, zz);
    const auto eou = named_series(named_function::eou, 40, zz);
    for (std::int64_t n = 0; n <= 40; ++n) {
        const auto k = static_cast<std::size_t>(n);
        EXPECT_EQ(count_EObar(n), eobar[k]) << n;
        EXPECT_EQ(count_EO(n), eo[k]) << n;
        EXPECT_EQ(count_EOu(n), eou[k]) << n;
    }
}

TEST(Oracle, Ordering)
{
    for (std::int64_t n = 0; n <= 35; ++n) {
        const auto p = count_partitions(n);
        const auto eo = count_EO(n);
        const auto eobar = count_EObar(n);
        EXPECT_LE(eobar, eo);
        EXPECT_LE(eo, p);
    }
}
