#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace formwidth {

using Letter = int;

/// A finite word over positive-integer letters. Positions are 0-based in the API.
class Sequence
{
public:
    Sequence() = default;
    explicit Sequence(std::vector<Letter> letters);
    Sequence(std::initializer_list<Letter> letters);

    [[nodiscard]] auto letters() const noexcept -> std::span<const Letter> { return _letters; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _letters.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return _letters.empty(); }
    [[nodiscard]] auto operator[](std::size_t i) const -> Letter { return _letters[i]; }
    [[nodiscard]] auto begin() const noexcept { return _letters.begin(); }
    [[nodiscard]] auto end() const noexcept { return _letters.end(); }

    /// Number of distinct letters, ||S||.
    [[nodiscard]] auto distinct() const -> std::size_t;
    [[nodiscard]] auto max_letter() const noexcept -> Letter;

    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(const Sequence &, const Sequence &) -> bool = default;
    friend auto operator<=>(const Sequence &, const Sequence &) = default;

private:
    std::vector<Letter> _letters;
};

auto operator<<(std::ostream & os, const Sequence & s) -> std::ostream &;

/// Relabels letters 1, 2, ... by order of first occurrence.
[[nodiscard]] auto normalize(const Sequence & s) -> Sequence;

/// Relabels letters 1, 2, ... preserving their relative order (order type).
[[nodiscard]] auto normalize_ordered(const Sequence & s) -> Sequence;

/// Collapses every maximal run of equal adjacent letters to one occurrence.
[[nodiscard]] auto red(const Sequence & s) -> Sequence;

/// True iff every `window` consecutive entries are pairwise distinct.
[[nodiscard]] auto is_sparse(const Sequence & s, std::size_t window) -> bool;

[[nodiscard]] auto concat(const Sequence & a, const Sequence & b) -> Sequence;
[[nodiscard]] auto repeat(const Sequence & s, std::size_t times) -> Sequence;

/// Replaces every letter with `copies` adjacent copies of itself.
[[nodiscard]] auto inflate(const Sequence & s, std::size_t copies) -> Sequence;

/// Order-reversing relabel x -> m + 1 - x applied to the order type of s.
[[nodiscard]] auto complement(const Sequence & s) -> Sequence;

/// Parses the sequence literal grammar.
///
/// Accepted forms: whitespace/comma separated positive integers ("1 2 3 2 1"),
/// lowercase words with a = 1 ... z = 26 ("abcba"), and parenthesised powers
/// ("(1 2 3)^2", "(ab)^3"). When the literal contains no whitespace or comma
/// at all, digit runs are read one digit per letter, so "12323" is 1 2 3 2 3.
/// Throws ParseError with the offending offset.
[[nodiscard]] auto parse_sequence(std::string_view text) -> Sequence;

enum class Semantics
{
    Unordered,
    Ordered
};

[[nodiscard]] auto to_string(Semantics s) -> std::string_view;

/// A non-empty list of patterns with a shared containment semantics.
/// Members are stored normalized (first-occurrence for unordered, order type
/// for ordered). Duplicates are kept so member indices stay stable.
class PatternFamily
{
public:
    PatternFamily(std::vector<Sequence> members, Semantics semantics);

    [[nodiscard]] auto members() const noexcept -> const std::vector<Sequence> & { return _members; }
    [[nodiscard]] auto semantics() const noexcept -> Semantics { return _semantics; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _members.size(); }
    [[nodiscard]] auto operator[](std::size_t i) const -> const Sequence & { return _members[i]; }

    [[nodiscard]] auto max_distinct() const -> std::size_t;

    /// The shared ||v|| when every member has the same distinct-letter count.
    [[nodiscard]] auto common_distinct() const -> std::optional<std::size_t>;

private:
    std::vector<Sequence> _members;
    Semantics _semantics;
};

/// red() applied member-wise.
[[nodiscard]] auto red(const PatternFamily & f) -> PatternFamily;

} // namespace formwidth
