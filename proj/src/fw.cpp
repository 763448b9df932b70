#include <formwidth/fw.hpp>

#include <formwidth/error.hpp>
#include <formwidth/parallel.hpp>

#include "width_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace formwidth {

namespace {

using Mirror = std::function<std::pair<std::size_t, Embedding>(std::size_t, const Embedding &)>;

// Swapping every block of a binary formation on r letters is the relabel
// x -> r + 1 - x of the host. A hit for member u therefore carries over to the
// complement of u, which must be in the family for the swap to be free.
auto make_mirror(const PatternFamily & family, int host_size) -> std::optional<Mirror>
{
    auto flip = [host_size](Letter x) { return host_size + 1 - x; };

    if (family.semantics() == Semantics::Unordered) {
        return Mirror([flip](std::size_t member, const Embedding & e) {
            Embedding out{e.positions, {}};
            for (auto [from, to] : e.letter_map)
                out.letter_map.emplace_back(from, flip(to));
            return std::pair{member, std::move(out)};
        });
    }

    std::map<Sequence, std::size_t> index;
    for (std::size_t i = 0; i < family.size(); ++i)
        index.try_emplace(family[i], i);
    std::vector<std::size_t> partner(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto it = index.find(complement(family[i]));
        if (it == index.end())
            return std::nullopt;
        partner[i] = it->second;
    }

    return Mirror([flip, partner, &family](std::size_t member, const Embedding & e) {
        auto m = family[member].max_letter();
        Embedding out{e.positions, {}};
        for (auto [from, to] : e.letter_map)
            out.letter_map.emplace_back(m + 1 - from, flip(to));
        std::sort(out.letter_map.begin(), out.letter_map.end());
        return std::pair{partner[member], std::move(out)};
    });
}

} // namespace

auto fw(const PatternFamily & family, const EngineOptions & options) -> FwAnswer
{
    for (auto & m : family.members())
        if (m.empty())
            throw InvalidArgument("fw needs non-empty family members");

    auto host_size = static_cast<int>(family.max_distinct());
    auto test = [&](const BinaryPattern & pattern) -> std::optional<std::pair<std::size_t, Embedding>> {
        if (auto hit = find_member(binary_formation(host_size, pattern), family))
            return std::pair{hit->member, std::move(hit->embedding)};
        return std::nullopt;
    };
    return detail::search_width<Embedding>(host_size, test, make_mirror(family, host_size), options);
}

auto dfw(const PatternFamily & family, const EngineOptions & options) -> FwAnswer
{
    return fw(red(family), options);
}

auto dfw_direct_check(const PatternFamily & family, int r, int s, int j, std::uint64_t cap, unsigned threads) -> bool
{
    FatFormationStream stream(r, s, j, cap);
    auto total = stream.size();

    // Chunked so each worker owns a restartable stream.
    constexpr std::uint64_t chunk = 4096;
    auto chunks = (total + chunk - 1) / chunk;
    std::atomic<bool> all{true};
    parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
        FatFormationStream local(r, s, j, cap);
        local.seek(c * chunk);
        FatFormation f;
        for (std::uint64_t i = 0; i < chunk && all.load(std::memory_order_relaxed) && local.next(f); ++i)
            if (! contains_family(f.to_sequence(), family))
                all = false;
    });
    return all;
}

auto es_gamma(int r, int s) -> std::uint64_t
{
    if (r < 1 || s < 1)
        throw InvalidArgument("es_gamma needs r >= 1 and s >= 1");
    if (s - 1 >= 64)
        throw InvalidArgument("es_gamma overflow: exponent 2^" + std::to_string(s - 1) + " too large");
    auto base = static_cast<std::uint64_t>(r - 1);
    auto exponent = std::uint64_t{1} << (s - 1);
    std::uint64_t out = 1;
    if (base >= 2) {
        for (std::uint64_t i = 0; i < exponent; ++i)
            if (__builtin_mul_overflow(out, base, &out))
                throw InvalidArgument("es_gamma overflow for r=" + std::to_string(r) + ", s=" + std::to_string(s));
    }
    else {
        out = base;
    }
    if (out == std::numeric_limits<std::uint64_t>::max())
        throw InvalidArgument("es_gamma overflow for r=" + std::to_string(r) + ", s=" + std::to_string(s));
    return out + 1;
}

namespace {

auto es_binaries(int r, int s) -> std::vector<Sequence>
{
    std::vector<Sequence> out;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << s); ++i)
        out.push_back(binary_formation(r, BinaryPattern::from_index(static_cast<std::size_t>(s), i)));
    return out;
}

auto es_letters(int r, int s) -> int
{
    auto gamma = es_gamma(r, s);
    if (gamma > 20)
        throw GuardExceeded("es_gamma(" + std::to_string(r) + "," + std::to_string(s) + ") = " + std::to_string(gamma)
            + " letters is beyond exhaustive reach");
    return static_cast<int>(gamma);
}

} // namespace

auto check_es_lemma(int r, int s, std::uint64_t cap, unsigned threads, Semantics semantics) -> bool
{
    auto g = es_letters(r, s);
    auto binaries = es_binaries(r, s);

    FormationStream stream(g, s, cap);
    auto total = stream.size();
    constexpr std::uint64_t chunk = 1024;
    auto chunks = (total + chunk - 1) / chunk;
    std::atomic<bool> all{true};
    parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
        FormationStream local(g, s, cap);
        local.seek(c * chunk);
        Formation f;
        for (std::uint64_t i = 0; i < chunk && all.load(std::memory_order_relaxed) && local.next(f); ++i) {
            auto host = f.to_sequence();
            auto found = std::any_of(binaries.begin(), binaries.end(),
                [&](const Sequence & b) { return find_embedding(host, b, semantics).has_value(); });
            if (! found)
                all = false;
        }
    });
    return all;
}

auto find_es_counterexample(int r, int s, Semantics semantics, std::uint64_t cap) -> std::optional<Sequence>
{
    auto g = es_letters(r, s);
    auto binaries = es_binaries(r, s);
    FormationStream stream(g, s, cap);
    Formation f;
    while (stream.next(f)) {
        auto host = f.to_sequence();
        if (std::none_of(binaries.begin(), binaries.end(), [&](const Sequence & b) { return find_embedding(host, b, semantics).has_value(); }))
            return host;
    }
    return std::nullopt;
}

auto monotone_pair(int k, int t, int j, Semantics semantics) -> PatternFamily
{
    if (k < 1 || t < 1 || j < 1)
        throw InvalidArgument("monotone pair needs k, t, j >= 1");
    std::vector<Letter> up(static_cast<std::size_t>(k));
    std::iota(up.begin(), up.end(), 1);
    std::vector<Letter> down(up.rbegin(), up.rend());
    auto sigma1 = inflate(repeat(Sequence(up), static_cast<std::size_t>(t)), static_cast<std::size_t>(j));
    auto sigma2 = inflate(repeat(Sequence(down), static_cast<std::size_t>(t)), static_cast<std::size_t>(j));
    return PatternFamily({sigma1, sigma2}, semantics);
}

auto avoidance_witness_pair(int k, int t, bool ordered) -> BinaryPattern
{
    if (k < 2)
        throw InvalidArgument("avoidance witness needs k >= 2, got " + std::to_string(k));
    if (t < 1)
        throw InvalidArgument("avoidance witness needs t >= 1, got " + std::to_string(t));

    BinaryPattern pattern(alternating_blocks(t - 1));

    auto family = monotone_pair(k, t, 1, ordered ? Semantics::Ordered : Semantics::Unordered);
    if (contains_family(binary_formation(k, pattern), family))
        throw Inconsistency("binary formation " + pattern.to_string() + " on " + std::to_string(k)
            + " letters does not avoid the monotone pair");
    return pattern;
}

auto replay_answer(const PatternFamily & family, const FwAnswer & answer) -> bool
{
    if (answer.width > 0) {
        if (! answer.avoider || answer.avoider->size() != static_cast<std::size_t>(answer.width - 1))
            return false;
        if (contains_family(binary_formation(answer.host_size, *answer.avoider), family))
            return false;
    }
    if (answer.embeddings.size() != (std::size_t{1} << answer.width))
        return false;
    for (std::size_t i = 0; i < answer.embeddings.size(); ++i) {
        auto & cert = answer.embeddings[i];
        if (cert.pattern != BinaryPattern::from_index(static_cast<std::size_t>(answer.width), i) || cert.member >= family.size())
            return false;
        auto host = binary_formation(answer.host_size, cert.pattern);
        if (! replay(host, family[cert.member], cert.embedding, family.semantics()))
            return false;
    }
    return true;
}

} // namespace formwidth
