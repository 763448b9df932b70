#pragma once

#include <formwidth/matrix.hpp>
#include <formwidth/mfw.hpp>
#include <formwidth/sequence.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace formwidth {

/// The family of all (r, s)-formations, or of all j-tuple ones when fat_j is
/// set. In matrix mode it stands for all permutation matrix (r, s)-formations
/// (fat_j-fat when set).
struct FormationTarget
{
    int r = 1;
    int s = 1;
    std::optional<int> fat_j;
};

enum class ExtremalMode
{
    UnorderedSequence,
    OrderedSequence,
    Matrix
};

using ExtremalTarget = std::variant<PatternFamily, MatrixFamily, FormationTarget>;

struct ExtremalQuery
{
    ExtremalTarget target;
    int n = 1;
    ExtremalMode mode = ExtremalMode::UnorderedSequence;
};

struct OracleLimits
{
    int max_n_sequence = 6;
    int max_n_matrix = 5;
    std::size_t max_length = 64;
    std::uint64_t enumeration_cap = 10'000'000;
    unsigned threads = 1;
};

struct ExtremalResult
{
    int value = 0;
    std::variant<Sequence, Matrix01> witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact maximum length of a w-sparse sequence on at most n letters avoiding
/// the target, w being the shared distinct-letter count of the target (r for
/// formation targets). Depth-first extension search; unordered mode extends
/// normalized sequences only. The witness is the lexicographically least
/// sequence of maximum length.
[[nodiscard]] auto ex_sequence(const ExtremalQuery & query, const OracleLimits & limits = {}) -> ExtremalResult;

/// Exact maximum number of ones in an n x n matrix avoiding the target.
/// Branch and bound over cells in row-major order, "one" before "zero". The
/// witness is the maximum whose one-cell list is lexicographically least.
[[nodiscard]] auto ex_matrix(const ExtremalQuery & query, const OracleLimits & limits = {}) -> ExtremalResult;

/// All permutation matrix (r, s)-formations (B-fat with fat_B).
[[nodiscard]] auto permutation_matrix_formations(int r, int s, std::optional<int> fat_B, std::uint64_t cap)
    -> MatrixFamily;

struct GeneralBound
{
    int lhs = 0; ///< ex_u(u, n)
    int rhs = 0; ///< zeta_{r, s - r + 1}(n) with r = ||u||, s = |u|
    [[nodiscard]] auto holds() const noexcept -> bool { return lhs <= rhs; }
};

[[nodiscard]] auto general_bound(const Sequence & u, int n, const OracleLimits & limits = {}) -> GeneralBound;

/// ex_u(u, n) <= zeta_{||u||, |u| - ||u|| + 1}(n), both sides computed exactly.
[[nodiscard]] inline auto check_general_bound(const Sequence & u, int n, const OracleLimits & limits = {}) -> bool
{
    return general_bound(u, n, limits).holds();
}

struct ProbeRow
{
    int n = 0;
    int value = 0;
    /// value(n) - value(n - 1), with value(0) = 0.
    int difference = 0;
};

struct LinearityProbe
{
    std::vector<ProbeRow> rows;
    int max_difference = 0;
    bool monotone = true;
};

/// ex(family, n) for n = 1..n_max with first differences.
[[nodiscard]] auto linearity_probe(const MatrixFamily & family, int n_max, const OracleLimits & limits = {})
    -> LinearityProbe;

} // namespace formwidth
