#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mullreg/partition.hpp"
#include "oracles.hpp"

using namespace mullreg;

namespace {
Partition P(const std::string& text) { return parse_partition(text); }
}

TEST_CASE("size and num_parts")
{
    CHECK(Partition{}.size() == 0);
    CHECK(P("10,6^2,4,2").size() == 28);
    CHECK(P("4,3^3,1^5").size() == 18);
    CHECK(Partition{}.num_parts() == 0);
    CHECK(P("9,5,2,1^5").num_parts() == 8);
    CHECK(P("6,4,1").num_parts() == 3);
}

TEST_CASE("part_at extends with zeros and is 1-indexed")
{
    const Partition p = P("6,4,1");
    CHECK(p.part_at(1) == 6);
    CHECK(p.part_at(3) == 1);
    CHECK(p.part_at(4) == 0);
    CHECK(p.part_at(100) == 0);
    CHECK_THROWS_AS(p.part_at(0), std::out_of_range);
}

TEST_CASE("construction rejects non-partitions")
{
    CHECK_THROWS_AS(Partition({3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate golden values")
{
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(P("4,3^3,1^5")) == P("9,4^2,1"));
    CHECK(conjugate(P("11,2^2,1^5")) == P("8,3,1^9"));
    CHECK(conjugate(P("14,10,2^2")) == P("4^2,2^8,1^4"));
}

TEST_CASE("conjugate matches the column-count oracle and is an involution")
{
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            const Partition conj = conjugate(p);
            CHECK(conj == oracle::conjugate_by_columns(p));
            CHECK(conjugate(conj) == p);
            CHECK(conj.size() == p.size());
            if (!p.empty())
                CHECK(conj.num_parts() == p.part_at(1));
        }
}

TEST_CASE("row and column removal")
{
    CHECK(remove_first_row(P("4,3^3,1^5")) == P("3^3,1^5"));
    CHECK(remove_first_row(P("6,4,1")) == P("4,1"));
    CHECK(remove_first_row(Partition{}) == Partition{});
    CHECK(remove_first_column(P("6,4,1")) == P("5,3"));
    CHECK(remove_first_column(P("1^3")) == Partition{});
    CHECK(remove_first_column(P("10,6^2,4,2")) == P("9,5^2,3,1"));
}

TEST_CASE("TR = CT")
{
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(conjugate(remove_first_row(p)) == remove_first_column(conjugate(p)));
}

TEST_CASE("add_column golden values and inversion")
{
    CHECK(add_column(Partition{}, 3) == P("1^3"));
    CHECK(add_column(P("5,3"), 3) == P("6,4,1"));
    CHECK(add_column(P("7,5,4,1"), 4) == P("8,6,5,2"));
    CHECK(add_column(Partition{}, 0) == Partition{});
    CHECK_THROWS_AS(add_column(P("5,3"), 1), std::invalid_argument);

    for (int n = 1; n <= 16; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(add_column(remove_first_column(p), p.num_parts()) == p);
            const Partition taller = add_column(p, p.num_parts() + 2);
            CHECK(taller.num_parts() == p.num_parts() + 2);
            CHECK(remove_first_column(taller) == p);
        }
}

TEST_CASE("e-regularity and e-restriction")
{
    CHECK(is_e_regular(P("5,4,3^2,2,1"), 3));
    CHECK_FALSE(is_e_regular(P("4,3^3,1^5"), 3));
    CHECK(is_e_regular(Partition{}, 2));
    CHECK(is_e_restricted(P("2,1^2"), 3));
    CHECK_FALSE(is_e_restricted(P("9,5,2,1^5"), 3));
    CHECK(is_e_restricted(Partition{}, 2));
    CHECK_THROWS_AS(is_e_regular(P("1"), 1), std::invalid_argument);

    for (int n = 0; n <= 15; ++n)
        for (const Partition& p : enumerate_partitions(n))
            for (int e = 2; e <= 6; ++e)
                CHECK(is_e_restricted(p, e) == is_e_regular(conjugate(p), e));
}

TEST_CASE("enumeration is complete, ordered, and sized by p(n)")
{
    const std::vector<Partition> four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == P("4"));
    CHECK(four[1] == P("3,1"));
    CHECK(four[2] == P("2^2"));
    CHECK(four[3] == P("2,1^2"));
    CHECK(four[4] == P("1^4"));

    const std::vector<Partition> zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition{});

    CHECK(enumerate_partitions(10).size() == 42);

    const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        const std::vector<Partition> all = enumerate_partitions(n);
        CHECK(static_cast<long long>(all.size()) == expected[n]);
        CHECK(static_cast<long long>(all.size()) == oracle::partition_count(n));
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(all[i] > all[i + 1]); // strictly descending, hence distinct
        for (const Partition& p : all)
            CHECK(p.size() == n);
    }
}

TEST_CASE("parse golden values")
{
    CHECK(P("4,3^3,1^5") == Partition({4, 3, 3, 3, 1, 1, 1, 1, 1}));
    CHECK(P("10,6^2,4,2") == Partition({10, 6, 6, 4, 2}));
    CHECK(P("()") == Partition{});
    CHECK(P(" ( ) ") == Partition{});
    CHECK(P(" 4 , 3 ^ 3 , 1 ^ 5 ") == P("4,3^3,1^5"));
    CHECK(P("3^1") == Partition({3}));
}

TEST_CASE("parse rejects malformed input")
{
    CHECK_THROWS_AS(parse_partition("3,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4,,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(",4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3 4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("()x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("(" ), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4,0"), std::invalid_argument);
}

TEST_CASE("format round-trips through parse")
{
    CHECK(format_partition(Partition{}) == "()");
    CHECK(format_partition(P("10,6^2,4,2")) == "10,6^2,4,2");
    CHECK(format_partition(P("5,4,3^2,2,1")) == "5,4,3^2,2,1");
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(parse_partition(format_partition(p)) == p);
}
