#pragma once

#include <formwidth/sequence.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace formwidth {

/// Certificate that a pattern occurs in a host: the host position matched by
/// each pattern position (strictly increasing) and the injective letter map,
/// as (pattern letter, host letter) pairs sorted by pattern letter.
struct Embedding
{
    std::vector<std::size_t> positions;
    std::vector<std::pair<Letter, Letter>> letter_map;

    friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
};

/// Finds an embedding of `pattern` into `host` under an arbitrary injective
/// letter map. The first embedding in search order is returned.
[[nodiscard]] auto find_unordered(const Sequence & host, const Sequence & pattern) -> std::optional<Embedding>;

/// As find_unordered, but the letter map must be strictly increasing.
[[nodiscard]] auto find_ordered(const Sequence & host, const Sequence & pattern) -> std::optional<Embedding>;

[[nodiscard]] auto find_embedding(const Sequence & host, const Sequence & pattern, Semantics semantics)
    -> std::optional<Embedding>;

[[nodiscard]] inline auto contains_unordered(const Sequence & host, const Sequence & pattern) -> bool
{
    return find_unordered(host, pattern).has_value();
}

[[nodiscard]] inline auto contains_ordered(const Sequence & host, const Sequence & pattern) -> bool
{
    return find_ordered(host, pattern).has_value();
}

/// Independently re-checks a certificate letter by letter.
[[nodiscard]] auto replay(const Sequence & host, const Sequence & pattern, const Embedding & embedding,
    Semantics semantics) -> bool;

struct MemberEmbedding
{
    std::size_t member;
    Embedding embedding;
};

/// The embedding of the first family member (in member order) that occurs in host.
[[nodiscard]] auto find_member(const Sequence & host, const PatternFamily & family) -> std::optional<MemberEmbedding>;

[[nodiscard]] inline auto contains_family(const Sequence & host, const PatternFamily & family) -> bool
{
    return find_member(host, family).has_value();
}

} // namespace formwidth
