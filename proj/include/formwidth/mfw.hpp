#pragma once

#include <formwidth/matrix.hpp>
#include <formwidth/width.hpp>

#include <cstdint>
#include <vector>

namespace formwidth {

/// Non-empty list of 0-1 matrices, each with exactly one 1 per column.
class MatrixFamily
{
public:
    explicit MatrixFamily(std::vector<Matrix01> members);

    [[nodiscard]] auto members() const noexcept -> const std::vector<Matrix01> & { return _members; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _members.size(); }
    [[nodiscard]] auto operator[](std::size_t i) const -> const Matrix01 & { return _members[i]; }
    [[nodiscard]] auto max_rows() const -> int;

private:
    std::vector<Matrix01> _members;
};

using MfwAnswer = WidthAnswer<MatrixEmbedding>;

/// Matrix formation width.
///
/// Members are first stripped of all-zero rows; r* is then the largest row
/// count. The width is computed twice, natively over binary permutation matrix
/// formations and through chi_inv + ordered fw, and Inconsistency is thrown
/// unless both paths give the same width and avoider. Certificates refer to the
/// stripped members.
[[nodiscard]] auto mfw(const MatrixFamily & family, const EngineOptions & options = {}) -> MfwAnswer;

/// mfw of the red_matrix image of the family.
[[nodiscard]] auto dmfw(const MatrixFamily & family, const EngineOptions & options = {}) -> MfwAnswer;

/// Checks that the binary permutation matrix (k, 2t-2)-formation alternating
/// t-1 identities with t-1 reflections avoids A_{k,t} and B_{k,t}.
[[nodiscard]] auto verify_pair_lower_bound(int k, int t) -> bool;

/// True iff every B-fat permutation matrix (r, s)-formation contains a member.
[[nodiscard]] auto dmfw_direct_check(const MatrixFamily & family, int r, int s, int fat_B,
    std::uint64_t cap = default_enumeration_cap) -> bool;

/// {A_{k,t}, B_{k,t}}, with j-fat identities when j > 1.
[[nodiscard]] auto identity_pair(int k, int t, int j = 1) -> MatrixFamily;

/// Members with zero rows removed, as used by mfw certificates.
[[nodiscard]] auto trimmed(const MatrixFamily & family) -> MatrixFamily;

[[nodiscard]] auto replay_answer(const MatrixFamily & family, const MfwAnswer & answer) -> bool;

} // namespace formwidth
