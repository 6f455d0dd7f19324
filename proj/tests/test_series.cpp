#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <qpart/series.hpp>
#include <qpart/theta.hpp>

#include "test_util.hpp"

using namespace qpart;
using qpart::test::from_ints;
using qpart::test::to_ints;

namespace {

series random_series(std::mt19937_64& rng, std::size_t order, std::int64_t lo = -9, std::int64_t hi = 9) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    std::vector<integer> c(order + 1);
    for (auto& v : c) {
        v = d(rng);
    }
    return series(std::move(c));
}

series random_unit_series(std::mt19937_64& rng, std::size_t order) {
    std::vector<integer> c(order + 1);
    c[0] = (rng() & 1) ? 1 : -1;
    for (std::size_t i = 1; i <= order; ++i) {
        c[i] = static_cast<std::int64_t>(rng() % 41) - 20;
    }
    return series(std::move(c));
}

} // namespace

TEST(SeriesAdd, CancelsOppositeLinearTerms) {
    EXPECT_EQ(to_ints(from_ints({1, 1}) + from_ints({1, -1})), (std::vector<std::int64_t>{2, 0}));
}

TEST(SeriesAdd, ZeroIsIdentity) {
    const series x = from_ints({3, -1, 4, 1});
    EXPECT_EQ(x + series(3), x);
}

TEST(SeriesAdd, PentPlusPentCeil) {
    const series s = theta_series(theta_family::pent, 2) + theta_series(theta_family::pent_ceil, 2);
    EXPECT_EQ(to_ints(s), (std::vector<std::int64_t>{2, 0, -2}));
}

TEST(SeriesAdd, OrderMismatchIsUsageError) {
    EXPECT_THROW(series(2) + series(3), usage_error);
    EXPECT_THROW(series(2) * series(3), usage_error);
    EXPECT_THROW(series(2) - series(3), usage_error);
}

TEST(SeriesMul, DifferenceOfSquares) {
    EXPECT_EQ(to_ints(from_ints({1, 1, 0}) * from_ints({1, -1, 0})), (std::vector<std::int64_t>{1, 0, -1}));
}

TEST(SeriesMul, OneIsIdentity) {
    const series x = from_ints({5, 0, -2, 7});
    EXPECT_EQ(x * series::one(3), x);
}

TEST(SeriesMul, TruncatesAtOrder) {
    // (1+q+q^2)^2 = 1 + 2q + 3q^2 + 2q^3 + q^4
    EXPECT_EQ(to_ints(from_ints({1, 1, 1}) * from_ints({1, 1, 1})), (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(SeriesInverse, GeometricSeries) {
    EXPECT_EQ(to_ints(series_inverse(from_ints({1, -1, 0, 0}))), (std::vector<std::int64_t>{1, 1, 1, 1}));
}

TEST(SeriesInverse, OneIsItsOwnInverse) { EXPECT_EQ(series_inverse(series::one(5)), series::one(5)); }

TEST(SeriesInverse, PentagonalThetaGivesPartitionNumbers) {
    EXPECT_EQ(to_ints(series_inverse(theta_series(theta_family::pent, 5))),
              (std::vector<std::int64_t>{1, 1, 2, 3, 5, 7}));
}

TEST(SeriesInverse, NegativeUnitConstant) {
    // 1/(-1 + q) = -(1 + q + q^2 + ...)
    EXPECT_EQ(to_ints(series_inverse(from_ints({-1, 1, 0}))), (std::vector<std::int64_t>{-1, -1, -1}));
}

TEST(SeriesInverse, NonUnitConstantIsDomainError) {
    EXPECT_THROW(series_inverse(from_ints({2, 1})), domain_error);
    EXPECT_THROW(series_inverse(from_ints({0, 1})), domain_error);
}

TEST(ProgressionExtract, OddCoefficients) {
    EXPECT_EQ(to_ints(progression_extract(from_ints({1, 2, 3, 4}), 2, 1)), (std::vector<std::int64_t>{2, 4}));
}

TEST(ProgressionExtract, ModulusOneIsIdentity) {
    const series x = from_ints({9, 8, 7});
    EXPECT_EQ(progression_extract(x, 1, 0), x);
}

TEST(ProgressionExtract, ResultOrder) {
    EXPECT_EQ(progression_extract(series(10), 3, 2).order(), 2u); // floor((10-2)/3)
    EXPECT_EQ(progression_extract(series(9), 2, 1).order(), 4u);
}

TEST(ProgressionExtract, RejectsBadResidue) {
    EXPECT_THROW(progression_extract(series(5), 2, 2), usage_error);
    EXPECT_THROW(progression_extract(series(5), 0, 0), usage_error);
}

TEST(Binomials, MulThenDivRoundTrips) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const series x = random_series(rng, 30);
        const int sign = (trial % 2) ? 1 : -1;
        const std::size_t e = 1 + static_cast<std::size_t>(trial % 7);
        EXPECT_EQ(div_binomial(mul_binomial(x, sign, e), sign, e), x);
    }
}

TEST(Binomials, MatchGenericMultiplication) {
    std::mt19937_64 rng(8);
    const series x = random_series(rng, 20);
    EXPECT_EQ(mul_binomial(x, 1, 3), x * series::one(20) - series_shift(x, 3));
    EXPECT_EQ(mul_binomial(x, -1, 0), series_scale(x, integer(2)));
}

TEST(SeriesPow, MatchesRepeatedProduct) {
    const series x = from_ints({1, -1, 2, 0, 3});
    EXPECT_EQ(series_pow(x, 3), x * x * x);
    EXPECT_EQ(series_pow(x, 0), series::one(4));
    EXPECT_EQ(series_pow(x, -2) * x * x, series::one(4));
}

TEST(SeriesProperties, RingAxioms) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t order = rng() % 12;
        const series a = random_series(rng, order);
        const series b = random_series(rng, order);
        const series c = random_series(rng, order);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, series(order));
    }
}

TEST(SeriesProperties, InverseTimesSelfIsOne) {
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t order = rng() % 65;
        const series x = random_unit_series(rng, order);
        EXPECT_EQ(series_inverse(x) * x, series::one(order)) << "trial " << trial;
    }
}

TEST(SeriesProperties, NoOverflowAtLargeOrder) {
    // p(1000) has 32 digits; exact arithmetic must carry it through.
    const series p = series_inverse(theta_series(theta_family::pent, 1000));
    EXPECT_EQ(to_string(p[1000]), "24061467864032622473692149727991");
}

TEST(SeriesBasics, TruncateAndAt) {
    const series x = from_ints({1, 2, 3, 4});
    EXPECT_EQ(to_ints(x.truncate(1)), (std::vector<std::int64_t>{1, 2}));
    EXPECT_THROW(x.truncate(4), usage_error);
    EXPECT_EQ(x.at(-1), 0);
    EXPECT_EQ(x.at(9), 0);
    EXPECT_EQ(x.at(3), 4);
}

TEST(SeriesBasics, GenericCoefficientType) {
    // The engine is generic; a 64-bit instantiation agrees at small orders.
    const basic_series<std::int64_t> x{1, -1, -1, 0, 0, 1};
    const auto inv = series_inverse(x);
    EXPECT_EQ(inv[5], 7);
}
