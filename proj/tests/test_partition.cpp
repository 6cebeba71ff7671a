#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "catorb/partition.hpp"
#include "oracles.hpp"

using namespace catorb;

TEST_CASE("partition construction validates") {
    CHECK_THROWS_AS(Partition(std::vector<int>{}), EmptyPartition);
    CHECK_THROWS_AS(Partition({3, 0}), NonPositivePart);
    CHECK_THROWS_AS(Partition({3, -1}), NonPositivePart);
    CHECK_THROWS_AS(Partition({1, 2}), NonIncreasingViolation);
    CHECK_NOTHROW(Partition({3, 3, 1}));
    Partition p({3, 2, 2});
    CHECK(p.size() == 3);
    CHECK(p.first() == 3);
    CHECK(p.last() == 2);
    CHECK(p.sum() == 7);
    CHECK(p.str() == "3,2,2");
}

TEST_CASE("partition parsing round-trips the text form") {
    CHECK(parse_partition("3,1,1") == Partition({3, 1, 1}));
    CHECK(parse_partition("7") == Partition({7}));
    CHECK(parse_partition(parse_partition("5,4,2").str()) == Partition({5, 4, 2}));
    CHECK_THROWS_AS(parse_partition(""), PartitionError);
    CHECK_THROWS_AS(parse_partition("3,,1"), PartitionError);
    CHECK_THROWS_AS(parse_partition("a,b"), PartitionError);
    CHECK_THROWS_AS(parse_partition("1,2"), NonIncreasingViolation);
}

TEST_CASE("ordering is descending-lex via DescLex") {
    std::vector<Partition> v{Partition({1, 1, 1}), Partition({3, 2, 2}), Partition({2, 2, 1}), Partition({3, 3, 3})};
    std::sort(v.begin(), v.end(), DescLex{});
    CHECK(v[0] == Partition({3, 3, 3}));
    CHECK(v[1] == Partition({3, 2, 2}));
    CHECK(v[2] == Partition({2, 2, 1}));
    CHECK(v[3] == Partition({1, 1, 1}));
}

TEST_CASE("tau complement matches hand values") {
    CHECK(tau_complement(Partition({1}), 1) == Partition({1}));
    CHECK(tau_complement(Partition({2, 1}), 2) == Partition({2, 1}));
    CHECK(tau_complement(Partition({3, 1, 1}), 3) == Partition({3, 3, 1}));
    CHECK(tau_complement(Partition({3, 1, 1}), 4) == Partition({4, 4, 2}));
    CHECK(tau_complement(Partition({2, 2}), 3) == Partition({2, 2}));
    CHECK(tau_complement(Partition({2, 2, 1}), 3) == Partition({3, 2, 2}));
}

TEST_CASE("tau complement is an involution on every box") {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n)
            for (const Partition& p : enumerate_box(n, k)) {
                Partition t = tau_complement(p, k);
                CHECK(t.size() == p.size());
                CHECK(t.first() <= k);
                CHECK(tau_complement(t, k) == p);
            }
}

TEST_CASE("tau complement rejects parts above the box") {
    CHECK_THROWS_AS(tau_complement(Partition({4, 1}), 3), BoundViolation);
    CHECK_THROWS_AS(tau_complement(Partition({1, 1}), 0), BoundViolation);
}

TEST_CASE("append and drop are inverse edge operations") {
    CHECK(append_part(Partition({2, 2}), 1) == Partition({2, 2, 1}));
    CHECK(append_part(Partition({2, 2}), 2) == Partition({2, 2, 2}));
    CHECK_THROWS_AS(append_part(Partition({2, 2}), 3), AppendTooLarge);
    CHECK_THROWS_AS(append_part(Partition({2, 2}), 0), AppendTooLarge);
    CHECK(drop_last(Partition({2, 2, 1})) == Partition({2, 2}));
    CHECK_THROWS_AS(drop_last(Partition({5})), TooShort);
    for (const Partition& p : enumerate_box(4, 4))
        for (int j = 1; j <= p.last(); ++j) CHECK(drop_last(append_part(p, j)) == p);
}

TEST_CASE("square detection") {
    CHECK(is_square(Partition({1}), 1));
    CHECK(is_square(Partition({2, 1}), 2));
    CHECK(is_square(Partition({3, 3, 1}), 3));
    CHECK(is_square(Partition({3, 1, 1}), 3));
    CHECK_FALSE(is_square(Partition({2, 2}), 2));
    CHECK_FALSE(is_square(Partition({1, 1}), 2));
    CHECK_FALSE(is_square(Partition({2, 1}), 3));
    CHECK(is_tau_fixed(Partition({2, 1}), 2));
    CHECK_FALSE(is_tau_fixed(Partition({3, 1, 1}), 3));
}

TEST_CASE("enumerate_box agrees with the odometer oracle") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k) {
            auto lib = enumerate_box(n, k);
            auto ora = oracles::box_partitions(n, k);
            REQUIRE(lib.size() == ora.size());
            std::sort(ora.begin(), ora.end());
            // library promises descending-lex
            for (std::size_t i = 0; i < lib.size(); ++i) {
                CHECK(lib[i].parts() == ora[ora.size() - 1 - i]);
                if (i) CHECK(DescLex{}(lib[i - 1], lib[i]));
            }
        }
    // #P^l = binomial(2l-1, l)
    for (int l = 1; l <= 7; ++l) CHECK(Int(enumerate_box(l, l).size()) == binomial(2 * l - 1, l));
}
