#include "oracles.hpp"

#include <formwidth/containment.hpp>
#include <formwidth/error.hpp>
#include <formwidth/formations.hpp>
#include <formwidth/matrix.hpp>

#include <doctest.h>

#include <random>

using namespace formwidth;

namespace {

auto random_matrix(std::mt19937 & rng, int rows, int cols, double density) -> Matrix01
{
    std::bernoulli_distribution bit(density);
    std::vector<Cell> ones;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (bit(rng))
                ones.push_back({r, c});
    return Matrix01(rows, cols, ones);
}

// Order types over 1..m using every letter, lengths 1..max_length, at most `letters` letters.
auto order_types(int max_length, int letters) -> std::vector<Sequence>
{
    std::vector<Sequence> out;
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Letter> cur(static_cast<std::size_t>(len), 1);
        while (true) {
            Sequence s(cur);
            if (normalize_ordered(s) == s)
                out.push_back(s);
            int i = len - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == letters)
                cur[static_cast<std::size_t>(i--)] = 1;
            if (i < 0)
                break;
            ++cur[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

} // namespace

TEST_SUITE("matrix")
{
    TEST_CASE("construction and queries")
    {
        Matrix01 m(2, 3, {{2, 1}, {1, 3}, {1, 3}});
        CHECK(m.ones_count() == 2);
        CHECK(m.at(2, 1));
        CHECK_FALSE(m.at(1, 1));
        CHECK(m.row_weight(1) == 1);
        CHECK_FALSE(m.one_per_column());
        CHECK_THROWS_AS(Matrix01(2, 2, {{3, 1}}), InvalidArgument);
    }

    TEST_CASE("text format round trip")
    {
        auto m = parse_matrix("100\n001\n\n010\n");
        CHECK(m.rows() == 3);
        CHECK(m.cols() == 3);
        CHECK(format_matrix(m) == "100\n001\n010\n");
        CHECK(parse_matrix(format_matrix(m)) == m);
    }

    TEST_CASE("text format errors")
    {
        CHECK_THROWS_AS((void) parse_matrix("10\n1\n"), ParseError);
        try {
            (void) parse_matrix("10\n1x\n");
            FAIL("expected error");
        }
        catch (const ParseError & e) {
            CHECK(e.position() == 4);
        }
    }

    TEST_CASE("containment agrees with the subset oracle")
    {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 3000; ++trial) {
            auto host = random_matrix(rng, 2 + trial % 3, 3 + trial % 4, 0.5);
            auto pat = random_matrix(rng, 1 + trial % 3, 1 + trial % 3, 0.6);
            bool expected = oracle::contains_matrix_by_subsets(host, pat);
            auto e = find_matrix(host, pat);
            REQUIRE(e.has_value() == expected);
            if (e)
                CHECK(replay_matrix(host, pat, *e));
        }
    }

    TEST_CASE("containment exhaustive on 3 x 3 hosts against 2 x 2 patterns")
    {
        for (std::uint64_t h = 0; h < 512; ++h) {
            auto host = oracle::matrix_from_mask(3, 3, h);
            for (std::uint64_t p = 1; p < 16; ++p) {
                auto pat = oracle::matrix_from_mask(2, 2, p);
                REQUIRE(contains_matrix(host, pat) == oracle::contains_matrix_by_subsets(host, pat));
            }
        }
    }

    TEST_CASE("replay rejects bad embeddings")
    {
        auto host = parse_matrix("110\n011\n");
        auto pat = parse_matrix("10\n01\n");
        auto e = find_matrix(host, pat);
        REQUIRE(e);
        auto bad = *e;
        bad.cols = {3, 1};
        CHECK_FALSE(replay_matrix(host, pat, bad));
    }

    TEST_CASE("chi and its inverse")
    {
        auto m = chi(parse_sequence("1 3 2 1"));
        CHECK(format_matrix(m) == "1001\n0010\n0100\n");
        CHECK(chi_inv(m) == parse_sequence("1 3 2 1"));
        CHECK_THROWS_AS((void) chi(parse_sequence("1 3")), InvalidArgument);
        CHECK_THROWS_AS((void) chi_inv(parse_matrix("11\n11\n")), InvalidArgument);
        for (auto & s : order_types(5, 3))
            CHECK(chi_inv(chi(s)) == s);
    }

    TEST_CASE("chi turns ordered containment into matrix containment")
    {
        auto hosts = order_types(5, 3);
        auto patterns = order_types(3, 3);
        for (auto & a : hosts)
            for (auto & b : patterns)
                REQUIRE(oracle::contains_by_subsets(a, b, true) == oracle::contains_matrix_by_subsets(chi(a), chi(b)));
    }

    TEST_CASE("reductions and reflections")
    {
        auto m = parse_matrix("1100\n0011\n");
        CHECK(format_matrix(red_matrix(m)) == "10\n01\n");
        CHECK(format_matrix(reflect(m)) == "0011\n1100\n");
        CHECK(format_matrix(flip_rows(m)) == "0011\n1100\n");
        CHECK(format_matrix(trim_zero_rows(parse_matrix("10\n00\n01\n"))) == "10\n01\n");
        CHECK(widen_columns(parse_matrix("10\n01\n"), 2) == m);
        CHECK(red_matrix(chi(parse_sequence("1 1 2 2 1"))) == chi(red(parse_sequence("1 1 2 2 1"))));
    }

    TEST_CASE("reflection preserves containment")
    {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 1000; ++trial) {
            auto host = random_matrix(rng, 3, 5, 0.5);
            auto pat = random_matrix(rng, 2, 2 + trial % 2, 0.6);
            CHECK(contains_matrix(host, pat) == contains_matrix(reflect(host), reflect(pat)));
            CHECK(contains_matrix(host, pat) == contains_matrix(flip_rows(host), flip_rows(pat)));
        }
    }

    TEST_CASE("identity concatenations and formations")
    {
        CHECK(format_matrix(build_identity_concat(2, 2, false)) == "1010\n0101\n");
        CHECK(format_matrix(build_identity_concat(2, 2, true)) == "0101\n1010\n");
        CHECK(format_matrix(build_identity_concat(2, 1, false, 2)) == "1100\n0011\n");
        CHECK(chi_inv(binary_matrix_formation(3, BinaryPattern::parse("AD"))) == binary_formation(3, BinaryPattern::parse("AD")));
        std::vector<Permutation> blocks = {{2, 1, 3}, {1, 3, 2}};
        CHECK(chi_inv(matrix_formation(3, blocks)) == parse_sequence("2 1 3 1 3 2"));
        CHECK(matrix_formation(2, std::vector<Permutation>{{1, 2}}, 2) == parse_matrix("1100\n0011\n"));
        CHECK_THROWS_AS((void) matrix_formation(3, std::vector<Permutation>{{1, 1, 2}}), InvalidArgument);
    }
}
