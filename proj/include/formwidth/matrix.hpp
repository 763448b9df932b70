#pragma once

#include <formwidth/formations.hpp>
#include <formwidth/sequence.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace formwidth {

/// A one-cell of a 0-1 matrix, 1-indexed.
struct Cell
{
    int row;
    int col;

    friend auto operator<=>(const Cell &, const Cell &) = default;
};

/// A 0-1 matrix stored as its set of one-cells with per-column and per-row indexes.
class Matrix01
{
public:
    Matrix01() = default;
    Matrix01(int rows, int cols, std::vector<Cell> ones);

    [[nodiscard]] auto rows() const noexcept -> int { return _rows; }
    [[nodiscard]] auto cols() const noexcept -> int { return _cols; }
    /// Row-major sorted, duplicate free.
    [[nodiscard]] auto ones() const noexcept -> std::span<const Cell> { return _ones; }
    [[nodiscard]] auto ones_count() const noexcept -> std::size_t { return _ones.size(); }
    [[nodiscard]] auto at(int row, int col) const -> bool;
    /// Rows holding a one in column `col`, ascending.
    [[nodiscard]] auto column(int col) const -> std::span<const int>;
    [[nodiscard]] auto row_weight(int row) const -> int;
    [[nodiscard]] auto one_per_column() const -> bool;

    friend auto operator==(const Matrix01 & a, const Matrix01 & b) -> bool
    {
        return a._rows == b._rows && a._cols == b._cols && a._ones == b._ones;
    }

private:
    int _rows = 0;
    int _cols = 0;
    std::vector<Cell> _ones;
    std::vector<char> _dense;
    std::vector<std::vector<int>> _columns;
    std::vector<int> _row_weight;
};

/// Lines of '0'/'1', one per row, uniform length. Blank lines are ignored.
[[nodiscard]] auto parse_matrix(std::string_view text) -> Matrix01;
[[nodiscard]] auto format_matrix(const Matrix01 & m) -> std::string;

/// Host row / column chosen for each pattern row / column, 1-indexed and strictly increasing.
struct MatrixEmbedding
{
    std::vector<int> rows;
    std::vector<int> cols;

    friend auto operator==(const MatrixEmbedding &, const MatrixEmbedding &) -> bool = default;
};

/// Finds increasing row and column selections under which host has a one
/// wherever pattern does. Columns are matched left to right; rows are bound
/// lazily when a pattern row first meets a one.
[[nodiscard]] auto find_matrix(const Matrix01 & host, const Matrix01 & pattern) -> std::optional<MatrixEmbedding>;

[[nodiscard]] inline auto contains_matrix(const Matrix01 & host, const Matrix01 & pattern) -> bool
{
    return find_matrix(host, pattern).has_value();
}

[[nodiscard]] auto replay_matrix(const Matrix01 & host, const Matrix01 & pattern, const MatrixEmbedding & e) -> bool;

/// ||s|| x |s| matrix with the one of column c in row s[c]. Letters must be exactly 1..||s||.
[[nodiscard]] auto chi(const Sequence & s) -> Matrix01;

/// Row index of the single one of each column. Throws if a column has 0 or >= 2 ones.
[[nodiscard]] auto chi_inv(const Matrix01 & m) -> Sequence;

/// Collapses runs of adjacent columns whose one sits in the same row.
[[nodiscard]] auto red_matrix(const Matrix01 & m) -> Matrix01;

/// Reverses the column order (horizontal reflection).
[[nodiscard]] auto reflect(const Matrix01 & m) -> Matrix01;

/// Reverses the row order.
[[nodiscard]] auto flip_rows(const Matrix01 & m) -> Matrix01;

/// Deletes all-zero rows.
[[nodiscard]] auto trim_zero_rows(const Matrix01 & m) -> Matrix01;

/// Replaces every column by `copies` adjacent copies.
[[nodiscard]] auto widen_columns(const Matrix01 & m, int copies) -> Matrix01;

/// t horizontally concatenated k x k identities (A_{k,t}), its reflection
/// (B_{k,t}), and with fat_j the j-fat identities.
[[nodiscard]] auto build_identity_concat(int k, int t, bool reflected, std::optional<int> fat_j = std::nullopt)
    -> Matrix01;

/// Horizontal concatenation of the permutation matrices of `blocks`. A B-fat
/// block is r x (B r) with each permutation column repeated B times adjacently.
[[nodiscard]] auto matrix_formation(int r, std::span<const Permutation> blocks, std::optional<int> fat_B = std::nullopt)
    -> Matrix01;

/// Identity for Asc blocks, its reflection for Desc blocks.
[[nodiscard]] auto binary_matrix_formation(int r, const BinaryPattern & pattern, std::optional<int> fat_B = std::nullopt)
    -> Matrix01;

} // namespace formwidth
