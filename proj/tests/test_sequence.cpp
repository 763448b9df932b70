#include <formwidth/error.hpp>
#include <formwidth/sequence.hpp>

#include <doctest.h>

using namespace formwidth;

TEST_SUITE("sequence")
{
    TEST_CASE("letters must be positive")
    {
        CHECK_THROWS_AS(Sequence({1, 0, 2}), InvalidArgument);
        CHECK_THROWS_AS(Sequence({-3}), InvalidArgument);
        CHECK(Sequence().empty());
    }

    TEST_CASE("parse integers, words and powers")
    {
        CHECK(parse_sequence("1 2 3 2 1") == Sequence{1, 2, 3, 2, 1});
        CHECK(parse_sequence("1,2, 10") == Sequence{1, 2, 10});
        CHECK(parse_sequence("abcba") == Sequence{1, 2, 3, 2, 1});
        CHECK(parse_sequence("(ab)^2") == Sequence{1, 2, 1, 2});
        CHECK(parse_sequence("(1 2 3)^2") == Sequence{1, 2, 3, 1, 2, 3});
        CHECK(parse_sequence("a(bc)^2a") == Sequence{1, 2, 3, 2, 3, 1});
        CHECK(parse_sequence("((ab)^2c)^2").size() == 10);
        CHECK(parse_sequence("") == Sequence{});
    }

    TEST_CASE("compact literals read one digit per letter")
    {
        CHECK(parse_sequence("12323") == Sequence{1, 2, 3, 2, 3});
        CHECK(parse_sequence("(12)^3") == Sequence{1, 2, 1, 2, 1, 2});
        CHECK(parse_sequence("12 3") == Sequence{12, 3});
    }

    TEST_CASE("parse errors carry the offset")
    {
        auto offset = [](const char * text) -> std::size_t {
            try {
                (void) parse_sequence(text);
            }
            catch (const ParseError & e) {
                return e.position();
            }
            FAIL("no error for " << text);
            return 0;
        };
        CHECK(offset("(ab") == 0);
        CHECK(offset("ab)") == 2);
        CHECK(offset("1 2 x?") == 5);
        CHECK(offset("1 0 2") == 2);
        CHECK(offset("ab^2") == 2);
    }

    TEST_CASE("normal forms")
    {
        CHECK(normalize(Sequence{3, 1, 3, 2}) == Sequence{1, 2, 1, 3});
        CHECK(normalize_ordered(Sequence{3, 1, 3, 7}) == Sequence{2, 1, 2, 3});
        CHECK(red(Sequence{1, 1, 2, 2, 2, 1, 3, 3}) == Sequence{1, 2, 1, 3});
        CHECK(complement(Sequence{1, 2, 3, 1}) == Sequence{3, 2, 1, 3});
        CHECK(complement(Sequence{2, 5}) == Sequence{2, 1});
        CHECK(inflate(Sequence{1, 2}, 3) == Sequence{1, 1, 1, 2, 2, 2});
        CHECK(repeat(Sequence{1, 2}, 2) == Sequence{1, 2, 1, 2});
        CHECK(concat(Sequence{1}, Sequence{2, 3}) == Sequence{1, 2, 3});
    }

    TEST_CASE("red is idempotent and inverts inflate")
    {
        for (auto text : {"", "1", "11", "1 2 2 1", "(aab)^3", "abcabcaab", "1 1 1 2 2 3 3 3 1"}) {
            auto s = parse_sequence(text);
            CHECK(red(red(s)) == red(s));
            for (std::size_t j = 1; j <= 3; ++j)
                CHECK(red(inflate(s, j)) == red(s));
        }
    }

    TEST_CASE("sparsity")
    {
        CHECK(is_sparse(Sequence{1, 2, 1, 2}, 2));
        CHECK_FALSE(is_sparse(Sequence{1, 2, 2}, 2));
        CHECK(is_sparse(Sequence{1, 2, 3, 1}, 3));
        CHECK_FALSE(is_sparse(Sequence{1, 2, 1}, 3));
        CHECK(is_sparse(Sequence{1, 1}, 1));
    }

    TEST_CASE("pattern family normalizes per semantics")
    {
        PatternFamily u({Sequence{3, 1, 3}, Sequence{2, 2}}, Semantics::Unordered);
        CHECK(u[0] == Sequence{1, 2, 1});
        CHECK(u[1] == Sequence{1, 1});
        CHECK(u.max_distinct() == 2);
        CHECK_FALSE(u.common_distinct().has_value());

        PatternFamily o({Sequence{3, 1, 3}}, Semantics::Ordered);
        CHECK(o[0] == Sequence{2, 1, 2});
        CHECK(o.common_distinct() == 2);

        CHECK_THROWS_AS(PatternFamily({}, Semantics::Ordered), InvalidArgument);
        CHECK(red(PatternFamily({Sequence{1, 1, 2}}, Semantics::Unordered))[0] == Sequence{1, 2});
    }
}
