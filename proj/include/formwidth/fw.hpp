#pragma once

#include <formwidth/containment.hpp>
#include <formwidth/formations.hpp>
#include <formwidth/sequence.hpp>
#include <formwidth/width.hpp>

#include <cstdint>

namespace formwidth {

using FwAnswer = WidthAnswer<Embedding>;

/// Formation width of a family.
///
/// Tests every binary formation on r* = max ||u|| letters for s = 0, 1, ...
/// and returns the least s at which each one contains some member, with an
/// avoiding pattern at s - 1 and one containment certificate per pattern at s.
[[nodiscard]] auto fw(const PatternFamily & family, const EngineOptions & options = {}) -> FwAnswer;

/// fw of the red() image of the family.
[[nodiscard]] auto dfw(const PatternFamily & family, const EngineOptions & options = {}) -> FwAnswer;

/// True iff every j-tuple (r, s)-formation contains some member.
[[nodiscard]] auto dfw_direct_check(const PatternFamily & family, int r, int s, int j,
    std::uint64_t cap = default_enumeration_cap, unsigned threads = 1) -> bool;

/// (r - 1)^(2^(s - 1)) + 1. Throws InvalidArgument on overflow.
[[nodiscard]] auto es_gamma(int r, int s) -> std::uint64_t;

/// Exhaustively checks that every (es_gamma(r, s), s)-formation contains a
/// binary (r, s)-formation.
///
/// Sequence (unordered) containment is the default: the first block can then be
/// relabelled to the identity and each later block needs one Erdos-Szekeres
/// step. Under order-preserving (matrix) containment the bound is too small
/// already at r = 3, s = 2; e.g. 1 2 3 5 4 2 1 4 5 3 avoids every binary
/// (3, 2)-formation.
[[nodiscard]] auto check_es_lemma(int r, int s, std::uint64_t cap = default_enumeration_cap, unsigned threads = 1,
    Semantics semantics = Semantics::Unordered) -> bool;

/// First (es_gamma(r, s), s)-formation in enumeration order that contains no
/// binary (r, s)-formation, if any.
[[nodiscard]] auto find_es_counterexample(int r, int s, Semantics semantics,
    std::uint64_t cap = default_enumeration_cap) -> std::optional<Sequence>;

/// t - 1 Asc and t - 1 Desc blocks, alternating and starting with Asc. Its
/// binary formation on k letters is re-checked to avoid (1..k)^t and (k..1)^t
/// before returning. Putting all Asc blocks first does not work in general:
/// 1 2 1 2 2 1 2 1 contains 1 2 1 2 1 2.
[[nodiscard]] auto avoidance_witness_pair(int k, int t, bool ordered) -> BinaryPattern;

/// {(1..k)^t, (k..1)^t}, with every letter repeated j times when j > 1.
[[nodiscard]] auto monotone_pair(int k, int t, int j = 1, Semantics semantics = Semantics::Ordered) -> PatternFamily;

/// Re-checks every certificate of an answer against the family.
[[nodiscard]] auto replay_answer(const PatternFamily & family, const FwAnswer & answer) -> bool;

} // namespace formwidth
