#pragma once

#include <formwidth/sequence.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace formwidth {

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

enum class Block : char
{
    Asc,
    Desc
};

/// A word over {Asc, Desc}; the canonical representative of a binary formation.
class BinaryPattern
{
public:
    BinaryPattern() = default;
    explicit BinaryPattern(std::vector<Block> blocks) :
        _blocks(std::move(blocks))
    {
    }

    /// The pattern at position `index` of the length-`length` enumeration:
    /// lexicographic with Asc < Desc, so block 0 is the most significant bit.
    [[nodiscard]] static auto from_index(std::size_t length, std::uint64_t index) -> BinaryPattern;

    /// Parses a word over {A, D}.
    [[nodiscard]] static auto parse(std::string_view text) -> BinaryPattern;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return _blocks.size(); }
    [[nodiscard]] auto blocks() const noexcept -> const std::vector<Block> & { return _blocks; }
    [[nodiscard]] auto operator[](std::size_t i) const -> Block { return _blocks[i]; }
    [[nodiscard]] auto index() const -> std::uint64_t;
    [[nodiscard]] auto ascents() const -> std::size_t;

    /// Every Asc turned into Desc and vice versa.
    [[nodiscard]] auto swapped() const -> BinaryPattern;

    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(const BinaryPattern &, const BinaryPattern &) -> bool = default;

private:
    std::vector<Block> _blocks;
};

/// Asc Desc Asc Desc ..., pairs copies of each.
[[nodiscard]] auto alternating_blocks(int pairs) -> std::vector<Block>;

/// Concatenation of 1 2 ... r for Asc blocks and r ... 2 1 for Desc blocks.
/// With fat_j, each letter of each block is written j times adjacently.
[[nodiscard]] auto binary_formation(int r, const BinaryPattern & pattern, std::optional<int> fat_j = std::nullopt)
    -> Sequence;

using Permutation = std::vector<Letter>;

/// s permutations of {1..r}.
struct Formation
{
    int r = 0;
    std::vector<Permutation> blocks;

    [[nodiscard]] auto s() const noexcept -> int { return static_cast<int>(blocks.size()); }
    [[nodiscard]] auto to_sequence() const -> Sequence;
};

/// s j-fat permutations of {1..r}: each block holds every letter exactly j times.
struct FatFormation
{
    int r = 0;
    int j = 0;
    std::vector<Permutation> blocks;

    [[nodiscard]] auto s() const noexcept -> int { return static_cast<int>(blocks.size()); }
    [[nodiscard]] auto to_sequence() const -> Sequence;
};

/// All permutations of {1..r} in lexicographic order.
[[nodiscard]] auto all_permutations(int r) -> std::vector<Permutation>;

/// All arrangements of the multiset {1^j, ..., r^j} in lexicographic order.
[[nodiscard]] auto all_fat_permutations(int r, int j) -> std::vector<Permutation>;

/// (count of blocks)^s, saturating at UINT64_MAX.
[[nodiscard]] auto formation_count(int r, int s, int j = 1) -> std::uint64_t;

/// Deterministic, restartable enumeration of every formation over a fixed block
/// list. Order is lexicographic over blocks: the last block varies fastest.
class BlockStream
{
public:
    BlockStream(std::vector<Permutation> blocks, int s, std::uint64_t cap);

    [[nodiscard]] auto size() const noexcept -> std::uint64_t { return _size; }

    /// Positions the stream so the next call to next() yields item `index`.
    void seek(std::uint64_t index);
    void reset() { seek(0); }

    /// Writes the next formation's blocks; false at the end.
    auto next(std::vector<Permutation> & out) -> bool;

private:
    std::vector<Permutation> _choices;
    int _s;
    std::uint64_t _size;
    std::uint64_t _position = 0;
    std::vector<std::size_t> _digits;
};

class FormationStream
{
public:
    FormationStream(int r, int s, std::uint64_t cap = default_enumeration_cap);

    [[nodiscard]] auto size() const noexcept -> std::uint64_t { return _blocks.size(); }
    void seek(std::uint64_t index) { _blocks.seek(index); }
    void reset() { _blocks.reset(); }
    auto next(Formation & out) -> bool;

private:
    int _r;
    BlockStream _blocks;
};

class FatFormationStream
{
public:
    FatFormationStream(int r, int s, int j, std::uint64_t cap = default_enumeration_cap);

    [[nodiscard]] auto size() const noexcept -> std::uint64_t { return _blocks.size(); }
    void seek(std::uint64_t index) { _blocks.seek(index); }
    void reset() { _blocks.reset(); }
    auto next(FatFormation & out) -> bool;

private:
    int _r;
    int _j;
    BlockStream _blocks;
};

/// True iff host contains some (r, s)-formation (or j-tuple (r, s)-formation
/// when fat_j is set) as an unordered pattern.
///
/// For each r-subset of host letters the restricted host is cut greedily into
/// blocks, closing a block as soon as every chosen letter has been seen (j times).
/// Earliest closing is optimal, so the subset admits s blocks iff the greedy cut does.
[[nodiscard]] auto contains_formation(const Sequence & host, int r, int s, std::optional<int> fat_j = std::nullopt)
    -> bool;

} // namespace formwidth
