#include "oracles.hpp"

#include <formwidth/error.hpp>
#include <formwidth/formations.hpp>

#include <doctest.h>

#include <set>

using namespace formwidth;

TEST_SUITE("formations")
{
    TEST_CASE("binary patterns")
    {
        auto p = BinaryPattern::parse("ADA");
        CHECK(p.to_string() == "ADA");
        CHECK(p.ascents() == 2);
        CHECK(p.swapped().to_string() == "DAD");
        CHECK(BinaryPattern::parse("ada") == p);
        CHECK(BinaryPattern::from_index(3, p.index()) == p);
        CHECK(BinaryPattern::from_index(3, 0).to_string() == "AAA");
        CHECK(BinaryPattern::from_index(3, 4).to_string() == "DAA");
        CHECK_THROWS_AS((void) BinaryPattern::parse("AXD"), ParseError);
    }

    TEST_CASE("binary formations")
    {
        CHECK(binary_formation(3, BinaryPattern::parse("AD")) == Sequence{1, 2, 3, 3, 2, 1});
        CHECK(binary_formation(2, BinaryPattern::parse("DA"), 2) == Sequence{2, 2, 1, 1, 1, 1, 2, 2});
        CHECK(binary_formation(2, BinaryPattern::parse("")).empty());
    }

    TEST_CASE("counts")
    {
        CHECK(formation_count(2, 2) == 4);
        CHECK(formation_count(3, 2) == 36);
        CHECK(formation_count(5, 2) == 14400);
        CHECK(formation_count(2, 1, 2) == 6);
        CHECK(formation_count(2, 2, 2) == 36);
        CHECK(formation_count(1, 4, 3) == 1);
        CHECK(formation_count(3, 0) == 1);
        CHECK(all_permutations(4).size() == 24);
        CHECK(all_fat_permutations(3, 2).size() == 90);
    }

    TEST_CASE("stream matches brute-force enumeration in order")
    {
        for (auto [r, s] : {std::pair{2, 3}, {3, 2}, {3, 3}, {4, 1}}) {
            std::vector<Sequence> expected;
            oracle::for_each_formation(oracle::permutations(r), s, [&](const Sequence & f) {
                expected.push_back(f);
                return true;
            });
            FormationStream stream(r, s);
            REQUIRE(stream.size() == expected.size());
            Formation f;
            std::size_t i = 0;
            while (stream.next(f)) {
                REQUIRE(f.r == r);
                REQUIRE(f.s() == s);
                REQUIRE(f.to_sequence() == expected[i++]);
            }
            CHECK(i == expected.size());
        }
    }

    TEST_CASE("fat stream matches brute-force enumeration")
    {
        std::vector<Sequence> expected;
        oracle::for_each_formation(oracle::fat_permutations(2, 2), 2, [&](const Sequence & f) {
            expected.push_back(f);
            return true;
        });
        FatFormationStream stream(2, 2, 2);
        FatFormation f;
        std::vector<Sequence> got;
        while (stream.next(f))
            got.push_back(f.to_sequence());
        CHECK(got == expected);
    }

    TEST_CASE("seek and reset")
    {
        FormationStream stream(3, 2);
        Formation f;
        std::vector<Sequence> all;
        while (stream.next(f))
            all.push_back(f.to_sequence());
        stream.seek(17);
        REQUIRE(stream.next(f));
        CHECK(f.to_sequence() == all[17]);
        stream.reset();
        REQUIRE(stream.next(f));
        CHECK(f.to_sequence() == all[0]);
    }

    TEST_CASE("guard")
    {
        CHECK_THROWS_AS(FormationStream(8, 2, 1'000'000), GuardExceeded);
        CHECK_NOTHROW(FormationStream(5, 2, 14400));
        CHECK_THROWS_AS(FormationStream(5, 2, 14399), GuardExceeded);
        CHECK_THROWS_AS(FormationStream(0, 2), InvalidArgument);
    }

    TEST_CASE("contains_formation agrees with the literal search")
    {
        std::set<std::vector<Letter>> hosts;
        for (auto & p : oracle::permutations(3))
            for (auto & q : oracle::permutations(3))
                for (auto & r : oracle::permutations(2)) {
                    std::vector<Letter> h = p;
                    h.insert(h.end(), r.begin(), r.end());
                    h.insert(h.end(), q.begin(), q.end());
                    hosts.insert(h);
                }
        for (auto & v : hosts) {
            Sequence host(v);
            for (int r = 1; r <= 3; ++r)
                for (int s = 1; s <= 3; ++s) {
                    bool expected = false;
                    oracle::for_each_formation(oracle::permutations(r), s, [&](const Sequence & f) {
                        expected = oracle::contains_by_search(host, f, false);
                        return ! expected;
                    });
                    REQUIRE(contains_formation(host, r, s) == expected);
                }
        }
        CHECK(contains_formation(parse_sequence("1 1 2 2 2 1 1 2"), 2, 2, 2));
        CHECK_FALSE(contains_formation(parse_sequence("1 1 2 2 2 1 2"), 2, 2, 2));
    }
}
