#include <formwidth/formations.hpp>

#include <formwidth/error.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace formwidth {

auto BinaryPattern::from_index(std::size_t length, std::uint64_t index) -> BinaryPattern
{
    std::vector<Block> blocks(length, Block::Asc);
    for (std::size_t i = 0; i < length; ++i)
        if ((index >> (length - 1 - i)) & 1U)
            blocks[i] = Block::Desc;
    return BinaryPattern(std::move(blocks));
}

auto BinaryPattern::parse(std::string_view text) -> BinaryPattern
{
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'A':
        case 'a': blocks.push_back(Block::Asc); break;
        case 'D':
        case 'd': blocks.push_back(Block::Desc); break;
        default: throw ParseError(std::string("expected 'A' or 'D', got '") + text[i] + "'", i);
        }
    }
    return BinaryPattern(std::move(blocks));
}

auto BinaryPattern::index() const -> std::uint64_t
{
    std::uint64_t out = 0;
    for (auto b : _blocks)
        out = (out << 1) | (b == Block::Desc ? 1U : 0U);
    return out;
}

auto BinaryPattern::ascents() const -> std::size_t
{
    return static_cast<std::size_t>(std::count(_blocks.begin(), _blocks.end(), Block::Asc));
}

auto BinaryPattern::swapped() const -> BinaryPattern
{
    std::vector<Block> out;
    out.reserve(_blocks.size());
    for (auto b : _blocks)
        out.push_back(b == Block::Asc ? Block::Desc : Block::Asc);
    return BinaryPattern(std::move(out));
}

auto BinaryPattern::to_string() const -> std::string
{
    std::string out;
    for (auto b : _blocks)
        out += b == Block::Asc ? 'A' : 'D';
    return out;
}

auto alternating_blocks(int pairs) -> std::vector<Block>
{
    std::vector<Block> blocks;
    for (int i = 0; i < pairs; ++i) {
        blocks.push_back(Block::Asc);
        blocks.push_back(Block::Desc);
    }
    return blocks;
}

auto binary_formation(int r, const BinaryPattern & pattern, std::optional<int> fat_j) -> Sequence
{
    if (r < 1)
        throw InvalidArgument("binary formation needs r >= 1, got " + std::to_string(r));
    auto j = fat_j.value_or(1);
    if (j < 1)
        throw InvalidArgument("fat multiplicity must be >= 1, got " + std::to_string(j));

    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(r) * j * pattern.size());
    for (auto b : pattern.blocks())
        for (int i = 1; i <= r; ++i)
            out.insert(out.end(), static_cast<std::size_t>(j), b == Block::Asc ? i : r + 1 - i);
    return Sequence(std::move(out));
}

namespace {

auto concat_blocks(const std::vector<Permutation> & blocks) -> Sequence
{
    std::vector<Letter> out;
    for (auto & b : blocks)
        out.insert(out.end(), b.begin(), b.end());
    return Sequence(std::move(out));
}

auto saturating_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        return std::numeric_limits<std::uint64_t>::max();
    return out;
}

auto saturating_pow(std::uint64_t base, int exponent) -> std::uint64_t
{
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i)
        out = saturating_mul(out, base);
    return out;
}

auto block_count(int r, int j) -> std::uint64_t
{
    // (jr)! / (j!)^r as a product of binomials C(j*i, j).
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        std::uint64_t binom = 1;
        for (int k = 1; k <= j; ++k) {
            binom = saturating_mul(binom, static_cast<std::uint64_t>(j * (i - 1) + k));
            binom /= static_cast<std::uint64_t>(k);
        }
        out = saturating_mul(out, binom);
    }
    return out;
}

} // namespace

auto Formation::to_sequence() const -> Sequence
{
    return concat_blocks(blocks);
}

auto FatFormation::to_sequence() const -> Sequence
{
    return concat_blocks(blocks);
}

auto all_permutations(int r) -> std::vector<Permutation>
{
    return all_fat_permutations(r, 1);
}

auto all_fat_permutations(int r, int j) -> std::vector<Permutation>
{
    if (r < 1 || j < 1)
        throw InvalidArgument("permutations need r >= 1 and j >= 1");
    if (block_count(r, j) > default_enumeration_cap)
        throw GuardExceeded("too many blocks for r=" + std::to_string(r) + ", j=" + std::to_string(j));
    Permutation p;
    for (int x = 1; x <= r; ++x)
        p.insert(p.end(), static_cast<std::size_t>(j), x);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

auto formation_count(int r, int s, int j) -> std::uint64_t
{
    return saturating_pow(block_count(r, j), s);
}

BlockStream::BlockStream(std::vector<Permutation> blocks, int s, std::uint64_t cap) :
    _choices(std::move(blocks)),
    _s(s),
    _size(saturating_pow(_choices.size(), s)),
    _digits(static_cast<std::size_t>(s), 0)
{
    if (s < 0)
        throw InvalidArgument("block count s must be >= 0");
    if (_size > cap)
        throw GuardExceeded("enumeration of " + (_size == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64") : std::to_string(_size))
            + " formations exceeds guard " + std::to_string(cap));
}

void BlockStream::seek(std::uint64_t index)
{
    _position = index;
    auto base = _choices.size();
    for (int i = _s; i-- > 0;) {
        _digits[static_cast<std::size_t>(i)] = static_cast<std::size_t>(index % base);
        index /= base;
    }
}

auto BlockStream::next(std::vector<Permutation> & out) -> bool
{
    if (_position >= _size)
        return false;
    out.resize(static_cast<std::size_t>(_s));
    for (std::size_t i = 0; i < _digits.size(); ++i)
        out[i] = _choices[_digits[i]];
    ++_position;
    for (std::size_t i = _digits.size(); i-- > 0;) {
        if (++_digits[i] < _choices.size())
            break;
        _digits[i] = 0;
    }
    return true;
}

FormationStream::FormationStream(int r, int s, std::uint64_t cap) :
    _r(r),
    _blocks((formation_count(r, s) > cap ? throw GuardExceeded("enumeration of (" + std::to_string(r) + "," + std::to_string(s)
                 + ")-formations exceeds guard " + std::to_string(cap))
                                         : all_permutations(r)),
        s, cap)
{
}

auto FormationStream::next(Formation & out) -> bool
{
    out.r = _r;
    return _blocks.next(out.blocks);
}

FatFormationStream::FatFormationStream(int r, int s, int j, std::uint64_t cap) :
    _r(r),
    _j(j),
    _blocks((formation_count(r, s, j) > cap ? throw GuardExceeded("enumeration of " + std::to_string(j) + "-tuple (" + std::to_string(r) + ","
                 + std::to_string(s) + ")-formations exceeds guard " + std::to_string(cap))
                                            : all_fat_permutations(r, j)),
        s, cap)
{
}

auto FatFormationStream::next(FatFormation & out) -> bool
{
    out.r = _r;
    out.j = _j;
    return _blocks.next(out.blocks);
}

namespace {

auto greedy_block_count(const Sequence & host, const std::vector<Letter> & chosen, int j, int needed) -> int
{
    // chosen is sorted; counts indexed by position in chosen.
    std::vector<int> seen(chosen.size(), 0);
    std::size_t complete = 0;
    int blocks = 0;
    for (auto x : host) {
        auto it = std::lower_bound(chosen.begin(), chosen.end(), x);
        if (it == chosen.end() || *it != x)
            continue;
        auto & c = seen[static_cast<std::size_t>(it - chosen.begin())];
        if (++c == j && ++complete == chosen.size()) {
            if (++blocks >= needed)
                return blocks;
            std::fill(seen.begin(), seen.end(), 0);
            complete = 0;
        }
    }
    return blocks;
}

} // namespace

auto contains_formation(const Sequence & host, int r, int s, std::optional<int> fat_j) -> bool
{
    if (r < 1 || s < 0)
        throw InvalidArgument("contains_formation needs r >= 1 and s >= 0");
    auto j = fat_j.value_or(1);
    if (j < 1)
        throw InvalidArgument("fat multiplicity must be >= 1");
    if (s == 0)
        return true;
    if (host.size() < static_cast<std::size_t>(r) * j * s)
        return false;

    std::set<Letter> alphabet_set(host.begin(), host.end());
    std::vector<Letter> alphabet(alphabet_set.begin(), alphabet_set.end());
    auto n = alphabet.size();
    if (n < static_cast<std::size_t>(r))
        return false;

    // Walk r-subsets of the alphabet in lexicographic order.
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<Letter> chosen(static_cast<std::size_t>(r));
    while (true) {
        for (std::size_t i = 0; i < pick.size(); ++i)
            chosen[i] = alphabet[pick[i]];
        if (greedy_block_count(host, chosen, j, s) >= s)
            return true;

        std::size_t i = pick.size();
        while (i-- > 0 && pick[i] == n - pick.size() + i) {
        }
        if (i == static_cast<std::size_t>(-1))
            return false;
        ++pick[i];
        for (auto k = i + 1; k < pick.size(); ++k)
            pick[k] = pick[k - 1] + 1;
    }
}

} // namespace formwidth
