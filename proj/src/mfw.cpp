#include <formwidth/mfw.hpp>

#include <formwidth/error.hpp>
#include <formwidth/fw.hpp>

#include "width_search.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace formwidth {

MatrixFamily::MatrixFamily(std::vector<Matrix01> members) :
    _members(std::move(members))
{
    if (_members.empty())
        throw InvalidArgument("matrix family must have at least one member");
    for (std::size_t i = 0; i < _members.size(); ++i) {
        auto & m = _members[i];
        if (m.cols() == 0)
            throw InvalidArgument("matrix family member " + std::to_string(i) + " has no columns");
        if (! m.one_per_column())
            throw InvalidArgument("matrix family member " + std::to_string(i) + " has a column without exactly one 1");
    }
}

auto MatrixFamily::max_rows() const -> int
{
    int best = 0;
    for (auto & m : _members)
        best = std::max(best, m.rows());
    return best;
}

auto trimmed(const MatrixFamily & family) -> MatrixFamily
{
    std::vector<Matrix01> out;
    out.reserve(family.size());
    for (auto & m : family.members())
        out.push_back(trim_zero_rows(m));
    return MatrixFamily(std::move(out));
}

auto identity_pair(int k, int t, int j) -> MatrixFamily
{
    return MatrixFamily({build_identity_concat(k, t, false, j), build_identity_concat(k, t, true, j)});
}

namespace {

using Mirror = std::function<std::pair<std::size_t, MatrixEmbedding>(std::size_t, const MatrixEmbedding &)>;

// Swapping every block of a binary permutation matrix formation flips its rows.
auto make_mirror(const MatrixFamily & family, int host_rows) -> std::optional<Mirror>
{
    std::vector<std::size_t> partner(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto flipped = flip_rows(family[i]);
        auto it = std::find(family.members().begin(), family.members().end(), flipped);
        if (it == family.members().end())
            return std::nullopt;
        partner[i] = static_cast<std::size_t>(it - family.members().begin());
    }
    return Mirror([partner, host_rows](std::size_t member, const MatrixEmbedding & e) {
        MatrixEmbedding out{{}, e.cols};
        for (auto it = e.rows.rbegin(); it != e.rows.rend(); ++it)
            out.rows.push_back(host_rows + 1 - *it);
        return std::pair{partner[member], std::move(out)};
    });
}

} // namespace

auto mfw(const MatrixFamily & family, const EngineOptions & options) -> MfwAnswer
{
    auto members = trimmed(family);
    auto host_rows = members.max_rows();

    auto test = [&](const BinaryPattern & pattern) -> std::optional<std::pair<std::size_t, MatrixEmbedding>> {
        auto host = binary_matrix_formation(host_rows, pattern);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (auto e = find_matrix(host, members[i]))
                return std::pair{i, std::move(*e)};
        return std::nullopt;
    };
    auto native = detail::search_width<MatrixEmbedding>(host_rows, test, make_mirror(members, host_rows), options);

    std::vector<Sequence> sequences;
    for (auto & m : members.members())
        sequences.push_back(chi_inv(m));
    auto via_chi = fw(PatternFamily(std::move(sequences), Semantics::Ordered), options);

    if (native.width != via_chi.width || native.host_size != via_chi.host_size || native.avoider != via_chi.avoider)
        throw Inconsistency("mfw paths disagree: native width " + std::to_string(native.width) + ", chi path width "
            + std::to_string(via_chi.width));
    return native;
}

auto dmfw(const MatrixFamily & family, const EngineOptions & options) -> MfwAnswer
{
    std::vector<Matrix01> reduced;
    for (auto & m : family.members())
        reduced.push_back(red_matrix(m));
    return mfw(MatrixFamily(std::move(reduced)), options);
}

auto verify_pair_lower_bound(int k, int t) -> bool
{
    if (k < 2 || t < 2)
        throw InvalidArgument("pair lower bound needs k >= 2 and t >= 2");
    auto host = binary_matrix_formation(k, BinaryPattern(alternating_blocks(t - 1)));
    return ! contains_matrix(host, build_identity_concat(k, t, false)) && ! contains_matrix(host, build_identity_concat(k, t, true));
}

auto dmfw_direct_check(const MatrixFamily & family, int r, int s, int fat_B, std::uint64_t cap) -> bool
{
    FormationStream stream(r, s, cap);
    Formation f;
    while (stream.next(f)) {
        auto host = matrix_formation(r, f.blocks, fat_B);
        auto hit = std::any_of(family.members().begin(), family.members().end(), [&](const Matrix01 & m) { return contains_matrix(host, m); });
        if (! hit)
            return false;
    }
    return true;
}

auto replay_answer(const MatrixFamily & family, const MfwAnswer & answer) -> bool
{
    auto members = trimmed(family);
    auto contains_any = [&](const Matrix01 & host) {
        return std::any_of(members.members().begin(), members.members().end(), [&](const Matrix01 & m) { return contains_matrix(host, m); });
    };
    if (answer.width > 0) {
        if (! answer.avoider || answer.avoider->size() != static_cast<std::size_t>(answer.width - 1))
            return false;
        if (contains_any(binary_matrix_formation(answer.host_size, *answer.avoider)))
            return false;
    }
    if (answer.embeddings.size() != (std::size_t{1} << answer.width))
        return false;
    for (std::size_t i = 0; i < answer.embeddings.size(); ++i) {
        auto & cert = answer.embeddings[i];
        if (cert.pattern != BinaryPattern::from_index(static_cast<std::size_t>(answer.width), i) || cert.member >= members.size())
            return false;
        if (! replay_matrix(binary_matrix_formation(answer.host_size, cert.pattern), members[cert.member], cert.embedding))
            return false;
    }
    return true;
}

} // namespace formwidth
