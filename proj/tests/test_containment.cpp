#include "oracles.hpp"

#include <formwidth/containment.hpp>

#include <doctest.h>

#include <random>

using namespace formwidth;

namespace {

// All sequences of the given length over 1..letters.
auto words(int length, int letters) -> std::vector<Sequence>
{
    std::vector<Sequence> out;
    std::vector<Letter> cur(static_cast<std::size_t>(length), 1);
    while (true) {
        out.emplace_back(cur);
        int i = length - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == letters)
            cur[static_cast<std::size_t>(i--)] = 1;
        if (i < 0)
            return out;
        ++cur[static_cast<std::size_t>(i)];
    }
}

auto random_sequence(std::mt19937 & rng, int length, int letters) -> Sequence
{
    std::uniform_int_distribution<int> pick(1, letters);
    std::vector<Letter> v;
    for (int i = 0; i < length; ++i)
        v.push_back(pick(rng));
    return Sequence(v);
}

} // namespace

TEST_SUITE("containment")
{
    TEST_CASE("examples")
    {
        CHECK(contains_ordered(parse_sequence("12323"), parse_sequence("121")));
        CHECK(contains_unordered(parse_sequence("12323"), parse_sequence("aba")));
        CHECK_FALSE(contains_ordered(parse_sequence("1221"), parse_sequence("1212")));
        CHECK_FALSE(contains_unordered(parse_sequence("1221"), parse_sequence("abab")));
        CHECK(contains_unordered(parse_sequence("2121"), parse_sequence("abab")));
        CHECK_FALSE(contains_ordered(parse_sequence("2121"), parse_sequence("1212")));
        CHECK(contains_unordered(Sequence{1}, Sequence{}));
        CHECK_FALSE(contains_unordered(Sequence{}, Sequence{1}));
    }

    TEST_CASE("oracles agree with each other")
    {
        for (auto & host : words(6, 3))
            for (auto & pat : words(3, 3)) {
                REQUIRE(oracle::contains_by_search(host, pat, false) == oracle::contains_by_subsets(host, pat, false));
                REQUIRE(oracle::contains_by_search(host, pat, true) == oracle::contains_by_subsets(host, pat, true));
            }
    }

    TEST_CASE("exhaustive agreement with subset oracle, short hosts")
    {
        std::vector<Sequence> patterns;
        for (int len = 1; len <= 4; ++len)
            for (auto & p : words(len, std::min(len, 3)))
                patterns.push_back(p);
        for (int len = 0; len <= 6; ++len)
            for (auto & host : words(len, 3))
                for (auto & p : patterns) {
                    bool u = oracle::contains_by_subsets(host, p, false);
                    bool o = oracle::contains_by_subsets(host, p, true);
                    auto eu = find_unordered(host, p);
                    auto eo = find_ordered(host, p);
                    REQUIRE(eu.has_value() == u);
                    REQUIRE(eo.has_value() == o);
                    if (eu)
                        REQUIRE(replay(host, p, *eu, Semantics::Unordered));
                    if (eo)
                        REQUIRE(replay(host, p, *eo, Semantics::Ordered));
                }
    }

    TEST_CASE("random agreement, hosts up to 8 over 4 letters")
    {
        std::mt19937 rng(20240611);
        for (int trial = 0; trial < 4000; ++trial) {
            auto host = random_sequence(rng, 1 + trial % 8, 4);
            auto p = random_sequence(rng, 1 + trial % 4, 1 + trial % 4);
            CHECK(contains_unordered(host, p) == oracle::contains_by_subsets(host, p, false));
            CHECK(contains_ordered(host, p) == oracle::contains_by_subsets(host, p, true));
        }
    }

    TEST_CASE("replay rejects corrupted certificates")
    {
        auto host = parse_sequence("1 2 3 1 2 3");
        auto pat = parse_sequence("1 2 1");
        auto e = find_ordered(host, pat);
        REQUIRE(e);
        CHECK(replay(host, pat, *e, Semantics::Ordered));
        auto bad = *e;
        bad.positions.back() = bad.positions.front();
        CHECK_FALSE(replay(host, pat, bad, Semantics::Ordered));
        auto swapped = *e;
        std::swap(swapped.positions[0], swapped.positions[1]);
        CHECK_FALSE(replay(host, pat, swapped, Semantics::Ordered));
    }

    TEST_CASE("containment is transitive")
    {
        std::mt19937 rng(7);
        int chains = 0;
        for (int trial = 0; trial < 3000; ++trial) {
            auto a = random_sequence(rng, 8, 3);
            auto b = random_sequence(rng, 5, 3);
            auto c = random_sequence(rng, 3, 3);
            for (auto sem : {Semantics::Unordered, Semantics::Ordered})
                if (find_embedding(a, b, sem) && find_embedding(b, c, sem)) {
                    ++chains;
                    CHECK(find_embedding(a, c, sem).has_value());
                }
        }
        CHECK(chains > 100);
    }

    TEST_CASE("family search reports the first containing member")
    {
        PatternFamily f({parse_sequence("1212"), parse_sequence("2121")}, Semantics::Ordered);
        auto hit = find_member(parse_sequence("2 1 2 1"), f);
        REQUIRE(hit);
        CHECK(hit->member == 1);
        CHECK_FALSE(contains_family(parse_sequence("1 2 2 1"), f));
    }
}
