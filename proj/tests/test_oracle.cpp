#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <qpart/oracle.hpp>
#include <qpart/partition_functions.hpp>

using namespace qpart;
using namespace qpart::oracle;

namespace {

std::vector<integer> ints(std::initializer_list<int> xs) {
    std::vector<integer> out;
    for (int x : xs) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST(OracleCount, EightOverpartitionsOfThree) {
    EXPECT_EQ(oracle_count(spec_for(partition_fn::op), 3), 8);
}

TEST(OracleCount, OddOverpartitionsOfFour) {
    EXPECT_EQ(oracle_count(spec_for(partition_fn::po_odd), 4), 6);
}

TEST(OracleCount, OddDistinctEvenFree) {
    // {5}, {4,1}, {3,2}, {2,2,1}
    EXPECT_EQ(oracle_count(spec_for(partition_fn::pood), 5), 4);
}

TEST(OracleCount, NoPartTwoModFour) {
    // {5}, {4,1}, {3,1,1}, {1,1,1,1,1}
    EXPECT_EQ(oracle_count(spec_for(partition_fn::p2), 5), 4);
}

TEST(OracleTable, Unrestricted) {
    EXPECT_EQ(oracle_table(spec_for(partition_fn::p), 5), ints({1, 1, 2, 3, 5, 7}));
}

TEST(OracleTable, EmptyPartitionOnly) {
    EXPECT_EQ(oracle_table(spec_for(partition_fn::pd), 0), ints({1}));
}

TEST(OracleTable, OddOverpartitionsToTen) {
    const auto t = oracle_table(spec_for(partition_fn::po_odd), 10);
    EXPECT_EQ(t, ints({1, 2, 2, 4, 6, 8, 12, 16, 22, 30, 40}));
}

TEST(OracleEnvelope, RefusesLargeN) {
    EXPECT_NO_THROW(oracle_count(spec_for(partition_fn::p), envelope));
    EXPECT_THROW(oracle_count(spec_for(partition_fn::p), envelope + 1), envelope_error);
    EXPECT_THROW(oracle_table(spec_for(partition_fn::op), 61), envelope_error);
    EXPECT_THROW(all_partitions(100), envelope_error);
    EXPECT_THROW(oracle_count(spec_for(partition_fn::p), -1), usage_error);
}

TEST(OracleSpec, MappingIsInjective) {
    std::vector<constraint_spec> seen;
    for (auto id : all_partition_fns) {
        const auto s = spec_for(id);
        for (const auto& other : seen) {
            EXPECT_FALSE(s == other) << tag(id);
        }
        seen.push_back(s);
    }
}

class MasterCrossValidation : public ::testing::TestWithParam<partition_fn> {};

TEST_P(MasterCrossValidation, SeriesEqualsEnumerationUpTo40) {
    const partition_fn id = GetParam();
    const series s = gf_series(id, 40);
    const auto brute = oracle_table(spec_for(id), 40);
    for (std::size_t n = 0; n <= 40; ++n) {
        ASSERT_EQ(s[n], brute[n]) << tag(id) << " n=" << n;
    }
}

INSTANTIATE_TEST_SUITE_P(AllFunctions, MasterCrossValidation, ::testing::ValuesIn(all_partition_fns),
                         [](const auto& info) { return std::string(tag(info.param)); });

TEST(OverpartitionLaw, WeightByDistinctSizes) {
    for (std::int64_t n = 0; n <= 20; ++n) {
        integer total = 0;
        integer odd_total = 0;
        for (const auto& lambda : all_partitions(n)) {
            const std::set<std::int64_t> sizes(lambda.begin(), lambda.end());
            const integer w = integer(1) << sizes.size();
            total += w;
            bool all_odd = true;
            for (auto s : lambda) {
                all_odd = all_odd && (s % 2 == 1);
            }
            if (all_odd) {
                odd_total += w;
            }
        }
        EXPECT_EQ(oracle_count(spec_for(partition_fn::op), n), total) << n;
        EXPECT_EQ(oracle_count(spec_for(partition_fn::po_odd), n), odd_total) << n;
    }
}

TEST(OverpartitionLaw, LiteralOverlineSubsets) {
    // Mark the first occurrence of each chosen size and collect the marked
    // sequences as a set, so duplicates would show up as a shortfall.
    for (std::int64_t n = 0; n <= 8; ++n) {
        std::set<std::vector<std::pair<std::int64_t, bool>>> marked;
        for (const auto& lambda : all_partitions(n)) {
            std::vector<std::int64_t> sizes;
            for (auto s : lambda) {
                if (sizes.empty() || sizes.back() != s) {
                    sizes.push_back(s);
                }
            }
            for (std::uint64_t mask = 0; mask < (1ull << sizes.size()); ++mask) {
                std::vector<std::pair<std::int64_t, bool>> seq;
                std::size_t which = 0;
                for (std::size_t i = 0; i < lambda.size(); ++i) {
                    const bool first = i == 0 || lambda[i] != lambda[i - 1];
                    if (first && i != 0) {
                        ++which;
                    }
                    seq.emplace_back(lambda[i], first && (mask >> which & 1));
                }
                marked.insert(seq);
            }
        }
        EXPECT_EQ(integer(marked.size()), oracle_count(spec_for(partition_fn::op), n)) << n;
    }
}

TEST(AllPartitions, CountsMatchUnrestricted) {
    for (std::int64_t n = 0; n <= 20; ++n) {
        EXPECT_EQ(integer(all_partitions(n).size()), oracle_count(spec_for(partition_fn::p), n));
    }
}
