#include "oracles.hpp"

#include <formwidth/error.hpp>
#include <formwidth/fw.hpp>
#include <formwidth/mfw.hpp>

#include <doctest.h>

using namespace formwidth;

TEST_SUITE("mfw")
{
    TEST_CASE("family validation")
    {
        CHECK_THROWS_AS(MatrixFamily({}), InvalidArgument);
        CHECK_THROWS_AS(MatrixFamily({parse_matrix("11\n11\n")}), InvalidArgument);
        CHECK_THROWS_AS(MatrixFamily({parse_matrix("10\n00\n")}), InvalidArgument);
        CHECK(MatrixFamily({parse_matrix("10\n01\n"), parse_matrix("1\n0\n0\n")}).max_rows() == 3);
    }

    TEST_CASE("identity pair widths")
    {
        for (int k = 2; k <= 3; ++k)
            for (int t = 2; t <= 3; ++t) {
                auto f = identity_pair(k, t);
                auto answer = mfw(f);
                CHECK(answer.width == 2 * t - 1);
                CHECK(replay_answer(f, answer));
                std::vector<Sequence> seqs;
                for (auto & m : f.members())
                    seqs.push_back(chi_inv(m));
                CHECK(fw(PatternFamily(seqs, Semantics::Ordered)).width == answer.width);
            }
    }

    TEST_CASE("avoider verified by the subset oracle")
    {
        auto f = identity_pair(2, 2);
        auto answer = mfw(f);
        REQUIRE(answer.avoider);
        auto host = binary_matrix_formation(answer.host_size, *answer.avoider);
        for (auto & m : f.members())
            CHECK_FALSE(oracle::contains_matrix_by_subsets(host, m));
    }

    TEST_CASE("matrix width equals ordered width through chi")
    {
        for (auto text : {"1 2 1", "1 3 2", "2 1 2 1", "1 2 3 1 2 3"}) {
            auto s = parse_sequence(text);
            CHECK(mfw(MatrixFamily({chi(s)})).width == fw(PatternFamily({s}, Semantics::Ordered)).width);
        }
    }

    TEST_CASE("reflection symmetry")
    {
        for (auto text : {"1 3 2", "2 1 2 1", "1 2 3 1"}) {
            auto m = chi(parse_sequence(text));
            CHECK(mfw(MatrixFamily({m})).width == mfw(MatrixFamily({reflect(m)})).width);
            CHECK(mfw(MatrixFamily({m})).width == mfw(MatrixFamily({flip_rows(m)})).width);
        }
    }

    TEST_CASE("zero rows do not change the width")
    {
        CHECK(mfw(MatrixFamily({parse_matrix("10\n00\n01\n")})).width == mfw(MatrixFamily({parse_matrix("10\n01\n")})).width);
        auto tall = parse_matrix("100\n000\n011\n");
        CHECK(mfw(MatrixFamily({tall})).width == mfw(MatrixFamily({parse_matrix("100\n011\n")})).width);
        CHECK(trimmed(MatrixFamily({tall}))[0].rows() == 2);
    }

    TEST_CASE("dmfw")
    {
        for (int t = 2; t <= 3; ++t) {
            auto f = identity_pair(2, t, 2);
            CHECK(dmfw(f).width == 2 * t - 1);
        }
        auto f = identity_pair(2, 2, 2);
        CHECK(dmfw_direct_check(f, 2, 3, 2));
        CHECK_FALSE(dmfw_direct_check(f, 2, 2, 2));
    }

    TEST_CASE("lower-bound witness matrices")
    {
        for (int k = 2; k <= 3; ++k)
            for (int t = 2; t <= 4; ++t)
                CHECK(verify_pair_lower_bound(k, t));
        CHECK_THROWS_AS((void) verify_pair_lower_bound(2, 1), InvalidArgument);
        auto asc_first = binary_matrix_formation(2, BinaryPattern::parse("AADD"));
        CHECK(oracle::contains_matrix_by_subsets(asc_first, build_identity_concat(2, 3, false)));
    }
}
