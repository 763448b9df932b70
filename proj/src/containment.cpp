#include <formwidth/containment.hpp>

#include <algorithm>
#include <map>

namespace formwidth {

namespace {

// Backtracking over the letter map. Positions are matched greedily leftmost:
// once the full map is fixed, leftmost matching finds an occurrence iff one
// exists, and the map is only fixed lazily at each letter's first occurrence.
class Matcher
{
public:
    Matcher(const Sequence & host, const Sequence & pattern, bool ordered) :
        _ordered(ordered)
    {
        // Host alphabet compressed to ranks 0..h-1 (rank order = letter order).
        _host_alphabet.assign(host.begin(), host.end());
        std::sort(_host_alphabet.begin(), _host_alphabet.end());
        _host_alphabet.erase(std::unique(_host_alphabet.begin(), _host_alphabet.end()), _host_alphabet.end());
        for (auto x : host)
            _host.push_back(rank_of(_host_alphabet, x));

        // Pattern alphabet: ordered uses rank order, unordered first occurrence.
        auto pat_norm = ordered ? normalize_ordered(pattern) : normalize(pattern);
        for (auto x : pat_norm)
            _pattern.push_back(x - 1);
        _pattern_letters.resize(pat_norm.max_letter());
        for (std::size_t i = 0; i < pattern.size(); ++i)
            _pattern_letters[_pattern[i]] = pattern[i];

        auto h = _host_alphabet.size();
        auto n = _host.size();
        _next.assign((n + 1) * h, npos);
        _suffix_count.assign((n + 1) * h, 0);
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t a = 0; a < h; ++a) {
                _next[i * h + a] = _next[(i + 1) * h + a];
                _suffix_count[i * h + a] = _suffix_count[(i + 1) * h + a];
            }
            _next[i * h + _host[i]] = i;
            ++_suffix_count[i * h + _host[i]];
        }

        auto m = _pattern_letters.size();
        _pattern_suffix_count.assign((_pattern.size() + 1) * m, 0);
        for (std::size_t i = _pattern.size(); i-- > 0;) {
            for (std::size_t a = 0; a < m; ++a)
                _pattern_suffix_count[i * m + a] = _pattern_suffix_count[(i + 1) * m + a];
            ++_pattern_suffix_count[i * m + _pattern[i]];
        }

        _map.assign(m, unmapped);
        _used.assign(h, false);
        _positions.resize(_pattern.size());
    }

    auto run() -> std::optional<Embedding>
    {
        if (_pattern_letters.size() > _host_alphabet.size() || _pattern.size() > _host.size())
            return std::nullopt;
        if (! match(0, 0))
            return std::nullopt;
        Embedding e;
        e.positions = _positions;
        for (std::size_t p = 0; p < _map.size(); ++p)
            e.letter_map.emplace_back(_pattern_letters[p], _host_alphabet[_map[p]]);
        std::sort(e.letter_map.begin(), e.letter_map.end());
        return e;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr int unmapped = -1;

    static auto rank_of(const std::vector<Letter> & alphabet, Letter x) -> int
    {
        return static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), x) - alphabet.begin());
    }

    auto match(std::size_t i, std::size_t pos) -> bool
    {
        if (i == _pattern.size())
            return true;
        if (_pattern.size() - i > _host.size() - pos)
            return false;

        auto h = _host_alphabet.size();
        auto p = static_cast<std::size_t>(_pattern[i]);
        if (_map[p] != unmapped) {
            auto q = _next[pos * h + _map[p]];
            if (q == npos)
                return false;
            _positions[i] = q;
            return match(i + 1, q + 1);
        }

        auto [lo, hi] = admissible_range(p);
        auto m = _pattern_letters.size();
        auto need = _pattern_suffix_count[i * m + p];
        for (int a = lo; a <= hi; ++a) {
            if (_used[a])
                continue;
            auto q = _next[pos * h + a];
            if (q == npos || _suffix_count[q * h + a] < need)
                continue;
            _map[p] = a;
            _used[a] = true;
            _positions[i] = q;
            if (match(i + 1, q + 1))
                return true;
            _map[p] = unmapped;
            _used[a] = false;
        }
        return false;
    }

    // Host ranks a new pattern letter may take. Ordered maps must keep enough
    // room between mapped neighbours for the pattern letters in between.
    auto admissible_range(std::size_t p) const -> std::pair<int, int>
    {
        int lo = 0, hi = static_cast<int>(_host_alphabet.size()) - 1;
        if (! _ordered)
            return {lo, hi};
        auto m = static_cast<int>(_pattern_letters.size());
        lo = static_cast<int>(p);
        hi -= m - 1 - static_cast<int>(p);
        for (int q = 0; q < m; ++q) {
            if (_map[q] == unmapped)
                continue;
            auto gap = static_cast<int>(p) - q;
            if (q < static_cast<int>(p))
                lo = std::max(lo, _map[q] + gap);
            else
                hi = std::min(hi, _map[q] + gap);
        }
        return {lo, hi};
    }

    bool _ordered;
    std::vector<Letter> _host_alphabet;
    std::vector<int> _host;
    std::vector<int> _pattern;
    std::vector<Letter> _pattern_letters;
    std::vector<std::size_t> _next;
    std::vector<std::size_t> _suffix_count;
    std::vector<std::size_t> _pattern_suffix_count;
    std::vector<int> _map;
    std::vector<bool> _used;
    std::vector<std::size_t> _positions;
};

} // namespace

auto find_unordered(const Sequence & host, const Sequence & pattern) -> std::optional<Embedding>
{
    return Matcher(host, pattern, false).run();
}

auto find_ordered(const Sequence & host, const Sequence & pattern) -> std::optional<Embedding>
{
    return Matcher(host, pattern, true).run();
}

auto find_embedding(const Sequence & host, const Sequence & pattern, Semantics semantics) -> std::optional<Embedding>
{
    return semantics == Semantics::Ordered ? find_ordered(host, pattern) : find_unordered(host, pattern);
}

auto replay(const Sequence & host, const Sequence & pattern, const Embedding & embedding, Semantics semantics) -> bool
{
    if (embedding.positions.size() != pattern.size())
        return false;

    std::map<Letter, Letter> forward;
    std::map<Letter, Letter> backward;
    for (auto [from, to] : embedding.letter_map) {
        if (! forward.emplace(from, to).second || ! backward.emplace(to, from).second)
            return false;
    }
    if (semantics == Semantics::Ordered) {
        Letter last = 0;
        for (auto & [from, to] : forward) {
            if (to <= last)
                return false;
            last = to;
        }
    }

    for (std::size_t i = 0; i < pattern.size(); ++i) {
        auto pos = embedding.positions[i];
        if (pos >= host.size() || (i > 0 && pos <= embedding.positions[i - 1]))
            return false;
        auto it = forward.find(pattern[i]);
        if (it == forward.end() || host[pos] != it->second)
            return false;
    }
    return true;
}

auto find_member(const Sequence & host, const PatternFamily & family) -> std::optional<MemberEmbedding>
{
    for (std::size_t i = 0; i < family.size(); ++i)
        if (auto e = find_embedding(host, family[i], family.semantics()))
            return MemberEmbedding{i, std::move(*e)};
    return std::nullopt;
}

} // namespace formwidth
