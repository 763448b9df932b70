#include <formwidth/extremal.hpp>

#include <formwidth/containment.hpp>
#include <formwidth/error.hpp>
#include <formwidth/formations.hpp>
#include <formwidth/parallel.hpp>

#include <algorithm>
#include <functional>

namespace formwidth {

namespace {

using SequencePredicate = std::function<bool(const Sequence &)>;

struct SequenceTarget
{
    SequencePredicate contains;
    std::size_t window;
};

auto sequence_target(const ExtremalQuery & query) -> SequenceTarget
{
    auto semantics = query.mode == ExtremalMode::OrderedSequence ? Semantics::Ordered : Semantics::Unordered;
    if (auto * family = std::get_if<PatternFamily>(&query.target)) {
        auto shared = family->common_distinct();
        if (! shared)
            throw InvalidArgument("extremal query needs every family member to have the same number of distinct letters");
        if (family->semantics() != semantics)
            throw InvalidArgument("pattern family semantics does not match the extremal mode");
        auto members = *family;
        return {[members](const Sequence & s) { return contains_family(s, members); }, *shared};
    }
    if (auto * formation = std::get_if<FormationTarget>(&query.target)) {
        auto t = *formation;
        if (t.r < 1 || t.s < 0)
            throw InvalidArgument("formation target needs r >= 1 and s >= 0");
        return {[t](const Sequence & s) { return contains_formation(s, t.r, t.s, t.fat_j); }, static_cast<std::size_t>(t.r)};
    }
    throw InvalidArgument("sequence extremal query cannot take a matrix family");
}

class SequenceSearch
{
public:
    SequenceSearch(SequenceTarget target, int n, bool canonical, std::size_t max_length) :
        _target(std::move(target)),
        _n(n),
        _canonical(canonical),
        _max_length(max_length)
    {
    }

    auto run() -> ExtremalResult
    {
        extend(0);
        return {static_cast<int>(_best.size()), Sequence(_best), _nodes};
    }

private:
    void extend(Letter used)
    {
        auto limit = _canonical ? std::min<Letter>(used + 1, _n) : _n;
        for (Letter x = 1; x <= limit; ++x) {
            if (! sparse_with(x))
                continue;
            _current.push_back(x);
            ++_nodes;
            if (! _target.contains(Sequence(_current))) {
                if (_current.size() >= _max_length)
                    throw GuardExceeded("avoiding sequence reached the length guard " + std::to_string(_max_length));
                if (_current.size() > _best.size())
                    _best = _current;
                extend(std::max(used, x));
            }
            _current.pop_back();
        }
    }

    auto sparse_with(Letter x) const -> bool
    {
        if (_target.window <= 1)
            return true;
        auto back = std::min(_current.size(), _target.window - 1);
        return std::find(_current.end() - static_cast<std::ptrdiff_t>(back), _current.end(), x) == _current.end();
    }

    SequenceTarget _target;
    Letter _n;
    bool _canonical;
    std::size_t _max_length;
    std::vector<Letter> _current;
    std::vector<Letter> _best;
    std::uint64_t _nodes = 0;
};

auto matrix_target(const ExtremalQuery & query, const OracleLimits & limits) -> MatrixFamily
{
    if (auto * family = std::get_if<MatrixFamily>(&query.target))
        return *family;
    if (auto * formation = std::get_if<FormationTarget>(&query.target))
        return permutation_matrix_formations(formation->r, formation->s, formation->fat_j, limits.enumeration_cap);
    auto & family = std::get<PatternFamily>(query.target);
    std::vector<Matrix01> members;
    for (auto & m : family.members())
        members.push_back(chi(normalize_ordered(m)));
    return MatrixFamily(std::move(members));
}

// One independent branch-and-bound over the cells after a fixed prefix.
// Pruning only depends on the shared seed and the subtree's own progress, so
// the explored tree is the same whatever the schedule.
class MatrixSearch
{
public:
    MatrixSearch(const MatrixFamily & family, int n, int seed) :
        _family(family),
        _n(n),
        _cells(n * n),
        _threshold(seed - 1)
    {
    }

    auto contains_any(const std::vector<Cell> & ones) const -> bool
    {
        Matrix01 host(_n, _n, ones);
        return std::any_of(_family.members().begin(), _family.members().end(),
            [&](const Matrix01 & m) { return contains_matrix(host, m); });
    }

    void run(std::vector<Cell> prefix, int start)
    {
        _ones = std::move(prefix);
        consider();
        descend(start);
    }

    [[nodiscard]] auto best() const -> const std::optional<std::vector<Cell>> & { return _best; }
    [[nodiscard]] auto nodes() const noexcept -> std::uint64_t { return _nodes; }

private:
    void consider()
    {
        if (static_cast<int>(_ones.size()) > _threshold) {
            _threshold = static_cast<int>(_ones.size());
            _best = _ones;
        }
    }

    void descend(int index)
    {
        if (index == _cells)
            return;
        if (static_cast<int>(_ones.size()) + (_cells - index) <= _threshold)
            return;
        ++_nodes;

        _ones.push_back({index / _n + 1, index % _n + 1});
        if (! contains_any(_ones)) {
            consider();
            descend(index + 1);
        }
        _ones.pop_back();

        descend(index + 1);
    }

    const MatrixFamily & _family;
    int _n;
    int _cells;
    int _threshold;
    std::vector<Cell> _ones;
    std::optional<std::vector<Cell>> _best;
    std::uint64_t _nodes = 0;
};

} // namespace

auto ex_sequence(const ExtremalQuery & query, const OracleLimits & limits) -> ExtremalResult
{
    if (query.mode == ExtremalMode::Matrix)
        throw InvalidArgument("ex_sequence needs a sequence mode");
    if (query.n < 1)
        throw InvalidArgument("extremal query needs n >= 1");
    if (query.n > limits.max_n_sequence)
        throw GuardExceeded("n = " + std::to_string(query.n) + " exceeds the sequence guard " + std::to_string(limits.max_n_sequence));

    auto canonical = query.mode == ExtremalMode::UnorderedSequence;
    return SequenceSearch(sequence_target(query), query.n, canonical, limits.max_length).run();
}

auto ex_matrix(const ExtremalQuery & query, const OracleLimits & limits) -> ExtremalResult
{
    if (query.mode != ExtremalMode::Matrix)
        throw InvalidArgument("ex_matrix needs matrix mode");
    if (query.n < 1)
        throw InvalidArgument("extremal query needs n >= 1");
    if (query.n > limits.max_n_matrix)
        throw GuardExceeded("n = " + std::to_string(query.n) + " exceeds the matrix guard " + std::to_string(limits.max_n_matrix));

    auto family = matrix_target(query, limits);
    auto n = query.n;
    auto cells = n * n;

    // Seed: the greedy leaf of the one-first order.
    MatrixSearch probe(family, n, 0);
    std::vector<Cell> greedy;
    for (int i = 0; i < cells; ++i) {
        greedy.push_back({i / n + 1, i % n + 1});
        if (probe.contains_any(greedy))
            greedy.pop_back();
    }
    auto seed = static_cast<int>(greedy.size());

    // Subtrees fixed by the first `depth` cells, enumerated one-first.
    auto depth = std::min(cells, 4);
    std::vector<std::vector<Cell>> prefixes;
    std::uint64_t nodes = 0;
    for (int mask = (1 << depth) - 1; mask >= 0; --mask) {
        std::vector<Cell> prefix;
        for (int i = 0; i < depth; ++i)
            if ((mask >> (depth - 1 - i)) & 1)
                prefix.push_back({i / n + 1, i % n + 1});
        ++nodes;
        if (! probe.contains_any(prefix))
            prefixes.push_back(std::move(prefix));
    }

    std::vector<MatrixSearch> searches;
    searches.reserve(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i)
        searches.emplace_back(family, n, seed);
    parallel_for(prefixes.size(), limits.threads, [&](std::size_t i) { searches[i].run(prefixes[i], depth); });

    std::vector<Cell> witness;
    int value = -1;
    for (auto & s : searches) {
        nodes += s.nodes();
        if (s.best() && static_cast<int>(s.best()->size()) > value) {
            value = static_cast<int>(s.best()->size());
            witness = *s.best();
        }
    }
    if (value < 0)
        throw Inconsistency("matrix search lost the greedy seed");
    return {value, Matrix01(n, n, std::move(witness)), nodes};
}

auto permutation_matrix_formations(int r, int s, std::optional<int> fat_B, std::uint64_t cap) -> MatrixFamily
{
    FormationStream stream(r, s, cap);
    std::vector<Matrix01> members;
    Formation f;
    while (stream.next(f))
        members.push_back(matrix_formation(r, f.blocks, fat_B));
    return MatrixFamily(std::move(members));
}

auto general_bound(const Sequence & u, int n, const OracleLimits & limits) -> GeneralBound
{
    if (u.empty())
        throw InvalidArgument("general bound needs a non-empty sequence");
    auto r = static_cast<int>(u.distinct());
    auto s = static_cast<int>(u.size());
    GeneralBound out;
    out.lhs = ex_sequence({PatternFamily({u}, Semantics::Unordered), n, ExtremalMode::UnorderedSequence}, limits).value;
    out.rhs = ex_sequence({FormationTarget{r, s - r + 1, std::nullopt}, n, ExtremalMode::UnorderedSequence}, limits).value;
    return out;
}

auto linearity_probe(const MatrixFamily & family, int n_max, const OracleLimits & limits) -> LinearityProbe
{
    LinearityProbe out;
    int previous = 0;
    for (int n = 1; n <= n_max; ++n) {
        auto value = ex_matrix({family, n, ExtremalMode::Matrix}, limits).value;
        out.rows.push_back({n, value, value - previous});
        out.max_difference = std::max(out.max_difference, value - previous);
        out.monotone = out.monotone && value >= previous;
        previous = value;
    }
    return out;
}

} // namespace formwidth
