#include <formwidth/matrix.hpp>

#include <formwidth/error.hpp>

#include <algorithm>
#include <numeric>

namespace formwidth {

Matrix01::Matrix01(int rows, int cols, std::vector<Cell> ones) :
    _rows(rows),
    _cols(cols),
    _ones(std::move(ones))
{
    if (rows < 0 || cols < 0)
        throw InvalidArgument("matrix dimensions must be non-negative");
    std::sort(_ones.begin(), _ones.end());
    _ones.erase(std::unique(_ones.begin(), _ones.end()), _ones.end());

    _dense.assign(static_cast<std::size_t>(rows) * cols, 0);
    _columns.assign(static_cast<std::size_t>(cols), {});
    _row_weight.assign(static_cast<std::size_t>(rows), 0);
    for (auto [r, c] : _ones) {
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw InvalidArgument("cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside "
                + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
        _dense[static_cast<std::size_t>(r - 1) * cols + (c - 1)] = 1;
        _columns[static_cast<std::size_t>(c - 1)].push_back(r);
        ++_row_weight[static_cast<std::size_t>(r - 1)];
    }
    for (auto & col : _columns)
        std::sort(col.begin(), col.end());
}

auto Matrix01::at(int row, int col) const -> bool
{
    return _dense[static_cast<std::size_t>(row - 1) * _cols + (col - 1)] != 0;
}

auto Matrix01::column(int col) const -> std::span<const int>
{
    return _columns[static_cast<std::size_t>(col - 1)];
}

auto Matrix01::row_weight(int row) const -> int
{
    return _row_weight[static_cast<std::size_t>(row - 1)];
}

auto Matrix01::one_per_column() const -> bool
{
    return std::all_of(_columns.begin(), _columns.end(), [](const auto & c) { return c.size() == 1; });
}

auto parse_matrix(std::string_view text) -> Matrix01
{
    std::vector<Cell> ones;
    int rows = 0;
    int cols = -1;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        auto line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = text.size();
        auto line = text.substr(line_start, line_end - line_start);
        while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);

        if (! line.empty()) {
            ++rows;
            int width = 0;
            for (std::size_t i = 0; i < line.size(); ++i) {
                char c = line[i];
                if (c == '1')
                    ones.push_back({rows, width + 1});
                else if (c != '0')
                    throw ParseError(std::string("matrix cell must be '0' or '1', got '") + c + "'", line_start + i);
                ++width;
            }
            if (cols >= 0 && width != cols)
                throw ParseError("matrix row " + std::to_string(rows) + " has length " + std::to_string(width)
                        + ", expected " + std::to_string(cols),
                    line_start);
            cols = width;
        }
        line_start = line_end + 1;
    }
    return Matrix01(rows, std::max(cols, 0), std::move(ones));
}

auto format_matrix(const Matrix01 & m) -> std::string
{
    std::string out;
    for (int r = 1; r <= m.rows(); ++r) {
        for (int c = 1; c <= m.cols(); ++c)
            out += m.at(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

namespace {

class MatrixMatcher
{
public:
    MatrixMatcher(const Matrix01 & host, const Matrix01 & pattern) :
        _host(host),
        _pattern(pattern),
        _row_map(static_cast<std::size_t>(pattern.rows()) + 1, 0),
        _col_map(static_cast<std::size_t>(pattern.cols()) + 1, 0)
    {
    }

    auto run() -> std::optional<MatrixEmbedding>
    {
        if (_pattern.rows() > _host.rows() || _pattern.cols() > _host.cols()
            || _pattern.ones_count() > _host.ones_count())
            return std::nullopt;
        if (! match_column(1, 0))
            return std::nullopt;

        MatrixEmbedding e;
        int last = 0;
        for (int i = 1; i <= _pattern.rows(); ++i) {
            auto & f = _row_map[static_cast<std::size_t>(i)];
            if (f == 0)
                f = last + 1;
            last = f;
            e.rows.push_back(f);
        }
        e.cols.assign(_col_map.begin() + 1, _col_map.end());
        return e;
    }

private:
    auto match_column(int j, int prev) -> bool
    {
        auto q = _pattern.cols();
        if (j > q)
            return true;
        auto last_candidate = _host.cols() - (q - j);
        auto pattern_rows = _pattern.column(j);

        std::vector<int> fresh;
        for (auto i : pattern_rows)
            if (_row_map[static_cast<std::size_t>(i)] == 0)
                fresh.push_back(i);

        for (int c = prev + 1; c <= last_candidate; ++c) {
            bool fits = std::all_of(pattern_rows.begin(), pattern_rows.end(), [&](int i) {
                auto f = _row_map[static_cast<std::size_t>(i)];
                return f == 0 || _host.at(f, c);
            });
            if (! fits)
                continue;
            _col_map[static_cast<std::size_t>(j)] = c;
            if (fresh.empty())
                // The row map is already fixed for this column, so leftmost wins.
                return match_column(j + 1, c);
            if (bind_rows(fresh, 0, c, j))
                return true;
        }
        return false;
    }

    auto bind_rows(const std::vector<int> & fresh, std::size_t k, int c, int j) -> bool
    {
        if (k == fresh.size())
            return match_column(j + 1, c);
        auto i = fresh[k];
        for (auto h : _host.column(c)) {
            if (! admissible(i, h))
                continue;
            _row_map[static_cast<std::size_t>(i)] = h;
            if (bind_rows(fresh, k + 1, c, j))
                return true;
            _row_map[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    }

    // Row maps are strictly increasing and must leave room for every pattern
    // row between bound neighbours, including all-zero pattern rows.
    auto admissible(int i, int h) const -> bool
    {
        if (h < i || _host.rows() - h < _pattern.rows() - i)
            return false;
        if (_host.row_weight(h) < _pattern.row_weight(i))
            return false;
        for (int other = 1; other <= _pattern.rows(); ++other) {
            auto f = _row_map[static_cast<std::size_t>(other)];
            if (f == 0 || other == i)
                continue;
            if (other < i && h - f < i - other)
                return false;
            if (other > i && f - h < other - i)
                return false;
        }
        return true;
    }

    const Matrix01 & _host;
    const Matrix01 & _pattern;
    std::vector<int> _row_map;
    std::vector<int> _col_map;
};

auto column_matrix(int rows, const std::vector<Letter> & column_rows) -> Matrix01
{
    std::vector<Cell> ones;
    ones.reserve(column_rows.size());
    for (std::size_t c = 0; c < column_rows.size(); ++c)
        ones.push_back({column_rows[c], static_cast<int>(c) + 1});
    return Matrix01(rows, static_cast<int>(column_rows.size()), std::move(ones));
}

void require_one_per_column(const Matrix01 & m, const char * what)
{
    for (int c = 1; c <= m.cols(); ++c)
        if (m.column(c).size() != 1)
            throw InvalidArgument(std::string(what) + ": column " + std::to_string(c) + " has "
                + std::to_string(m.column(c).size()) + " ones, expected exactly one");
}

} // namespace

auto find_matrix(const Matrix01 & host, const Matrix01 & pattern) -> std::optional<MatrixEmbedding>
{
    return MatrixMatcher(host, pattern).run();
}

auto replay_matrix(const Matrix01 & host, const Matrix01 & pattern, const MatrixEmbedding & e) -> bool
{
    if (e.rows.size() != static_cast<std::size_t>(pattern.rows()) || e.cols.size() != static_cast<std::size_t>(pattern.cols()))
        return false;
    auto increasing_within = [](const std::vector<int> & v, int bound) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < 1 || v[i] > bound || (i > 0 && v[i] <= v[i - 1]))
                return false;
        return true;
    };
    if (! increasing_within(e.rows, host.rows()) || ! increasing_within(e.cols, host.cols()))
        return false;
    return std::all_of(pattern.ones().begin(), pattern.ones().end(), [&](Cell cell) {
        return host.at(e.rows[static_cast<std::size_t>(cell.row - 1)], e.cols[static_cast<std::size_t>(cell.col - 1)]);
    });
}

auto chi(const Sequence & s) -> Matrix01
{
    auto rows = s.max_letter();
    if (s.distinct() != static_cast<std::size_t>(rows))
        throw InvalidArgument("chi needs letters exactly 1.." + std::to_string(rows) + "; normalize first");
    return column_matrix(rows, std::vector<Letter>(s.begin(), s.end()));
}

auto chi_inv(const Matrix01 & m) -> Sequence
{
    require_one_per_column(m, "chi_inv");
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(m.cols()));
    for (int c = 1; c <= m.cols(); ++c)
        out.push_back(m.column(c).front());
    return Sequence(std::move(out));
}

auto red_matrix(const Matrix01 & m) -> Matrix01
{
    require_one_per_column(m, "red_matrix");
    std::vector<Letter> kept;
    for (int c = 1; c <= m.cols(); ++c) {
        auto r = m.column(c).front();
        if (kept.empty() || kept.back() != r)
            kept.push_back(r);
    }
    return column_matrix(m.rows(), kept);
}

auto reflect(const Matrix01 & m) -> Matrix01
{
    std::vector<Cell> ones;
    for (auto [r, c] : m.ones())
        ones.push_back({r, m.cols() + 1 - c});
    return Matrix01(m.rows(), m.cols(), std::move(ones));
}

auto flip_rows(const Matrix01 & m) -> Matrix01
{
    std::vector<Cell> ones;
    for (auto [r, c] : m.ones())
        ones.push_back({m.rows() + 1 - r, c});
    return Matrix01(m.rows(), m.cols(), std::move(ones));
}

auto trim_zero_rows(const Matrix01 & m) -> Matrix01
{
    std::vector<int> new_index(static_cast<std::size_t>(m.rows()) + 1, 0);
    int rows = 0;
    for (int r = 1; r <= m.rows(); ++r)
        if (m.row_weight(r) > 0)
            new_index[static_cast<std::size_t>(r)] = ++rows;
    std::vector<Cell> ones;
    for (auto [r, c] : m.ones())
        ones.push_back({new_index[static_cast<std::size_t>(r)], c});
    return Matrix01(rows, m.cols(), std::move(ones));
}

auto widen_columns(const Matrix01 & m, int copies) -> Matrix01
{
    if (copies < 1)
        throw InvalidArgument("column copies must be >= 1");
    std::vector<Cell> ones;
    for (auto [r, c] : m.ones())
        for (int k = 0; k < copies; ++k)
            ones.push_back({r, (c - 1) * copies + k + 1});
    return Matrix01(m.rows(), m.cols() * copies, std::move(ones));
}

auto build_identity_concat(int k, int t, bool reflected, std::optional<int> fat_j) -> Matrix01
{
    if (k < 1 || t < 1)
        throw InvalidArgument("identity concatenation needs k >= 1 and t >= 1");
    std::vector<Letter> up(static_cast<std::size_t>(k));
    std::iota(up.begin(), up.end(), 1);
    auto m = widen_columns(chi(repeat(Sequence(up), static_cast<std::size_t>(t))), fat_j.value_or(1));
    return reflected ? reflect(m) : m;
}

auto matrix_formation(int r, std::span<const Permutation> blocks, std::optional<int> fat_B) -> Matrix01
{
    if (r < 1)
        throw InvalidArgument("matrix formation needs r >= 1");
    std::vector<Letter> column_rows;
    for (auto & b : blocks) {
        auto sorted = b;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < r; ++i)
            if (sorted.size() != static_cast<std::size_t>(r) || sorted[static_cast<std::size_t>(i)] != i + 1)
                throw InvalidArgument("matrix formation block is not a permutation of 1.." + std::to_string(r));
        column_rows.insert(column_rows.end(), b.begin(), b.end());
    }
    return widen_columns(column_matrix(r, column_rows), fat_B.value_or(1));
}

auto binary_matrix_formation(int r, const BinaryPattern & pattern, std::optional<int> fat_B) -> Matrix01
{
    auto seq = binary_formation(r, pattern, fat_B);
    return column_matrix(r, std::vector<Letter>(seq.begin(), seq.end()));
}

} // namespace formwidth
