#include "vcs/matrix.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace vcs {

std::string cell_token(Cell c)
{
    if (c.is_white())
        return "0";
    if (c.is_black())
        return "k";
    return std::to_string(c.color_id());
}

Cell cell_from_token(const std::string& token, int palette_size)
{
    if (token == "k")
        return Cell::black();
    if (token == "0")
        return Cell::white();
    int id = 0;
    try {
        size_t used = 0;
        id = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument(token);
    } catch (const std::exception&) {
        throw ParseError("bad cell token '" + token + "'");
    }
    if (id < 1 || id > palette_size)
        throw ParseError("color id " + token + " outside palette of size "
                         + std::to_string(palette_size));
    return Cell::color(id);
}

SymbolMatrix::SymbolMatrix(int rows, int cols, Cell fill)
{
    if (rows < 1 || cols < 0)
        throw DimensionError("matrix needs rows >= 1 and cols >= 0");
    rows_ = rows;
    cols_ = cols;
    cells_.assign(static_cast<size_t>(rows) * cols, fill);
}

SymbolMatrix::SymbolMatrix(const std::vector<CellRow>& rows)
{
    if (rows.empty())
        throw DimensionError("matrix needs at least one row");
    rows_ = static_cast<int>(rows.size());
    cols_ = static_cast<int>(rows.front().size());
    cells_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const CellRow& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged rows in matrix literal");
        cells_.insert(cells_.end(), r.begin(), r.end());
    }
}

CellRow SymbolMatrix::row(int r) const
{
    CellRow out(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
        out[static_cast<size_t>(c)] = at(r, c);
    return out;
}

CellRow SymbolMatrix::column(int c) const
{
    CellRow out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        out[static_cast<size_t>(r)] = at(r, c);
    return out;
}

int WeightReport::color_total() const
{
    int t = 0;
    for (const auto& [id, count] : per_color)
        t += count;
    return t;
}

CellRow stack_or(const CellRow& a, const CellRow& b)
{
    if (a.size() != b.size())
        throw DimensionError("stacked rows differ in length");
    CellRow out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = stack(a[i], b[i]);
    return out;
}

CellRow stack_or(std::span<const CellRow> rows)
{
    if (rows.empty())
        throw DimensionError("stack_or needs at least one row");
    CellRow acc = rows.front();
    for (size_t i = 1; i < rows.size(); ++i)
        acc = stack_or(acc, rows[i]);
    return acc;
}

CellRow stack_rows(const SymbolMatrix& m, std::span<const int> row_indices)
{
    if (row_indices.empty())
        throw DimensionError("stack_rows needs at least one row index");
    CellRow acc = m.row(row_indices.front());
    for (size_t i = 1; i < row_indices.size(); ++i)
        acc = stack_or(acc, m.row(row_indices[i]));
    return acc;
}

WeightReport weight(const CellRow& row)
{
    WeightReport rep;
    for (Cell c : row) {
        if (c.is_white())
            continue;
        ++rep.nonwhite;
        if (c.is_color())
            ++rep.per_color[c.color_id()];
    }
    return rep;
}

SymbolMatrix concat(const SymbolMatrix& a, const SymbolMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("concat operands differ in row count");
    SymbolMatrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c)
            out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c)
            out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

SymbolMatrix permute_columns(const SymbolMatrix& m, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != m.cols())
        throw ParameterError("permutation length does not match column count");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= m.cols() || seen[static_cast<size_t>(p)])
            throw ParameterError("column permutation is not a bijection");
        seen[static_cast<size_t>(p)] = 1;
    }
    SymbolMatrix out(m.rows(), m.cols());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            out.at(r, c) = m.at(r, perm[static_cast<size_t>(c)]);
    return out;
}

bool same_column_multiset(const SymbolMatrix& a, const SymbolMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    std::vector<CellRow> ca, cb;
    ca.reserve(static_cast<size_t>(a.cols()));
    cb.reserve(static_cast<size_t>(b.cols()));
    for (int c = 0; c < a.cols(); ++c) {
        ca.push_back(a.column(c));
        cb.push_back(b.column(c));
    }
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

std::string matrix_to_text(const SymbolMatrix& m, int palette_size)
{
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << ' ' << palette_size << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c)
                out << ' ';
            out << cell_token(m.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

SymbolMatrix matrix_from_stream(std::istream& in, int* palette_size_out)
{
    int rows = 0, cols = 0, palette = 0;
    if (!(in >> rows >> cols >> palette))
        throw ParseError("matrix header must be 'rows cols palette_size'");
    if (rows < 1 || cols < 0 || palette < 0)
        throw ParseError("matrix header values out of range");
    SymbolMatrix m(rows, cols);
    std::string token;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (!(in >> token))
                throw ParseError("matrix body ended early");
            m.at(r, c) = cell_from_token(token, palette);
        }
    if (palette_size_out)
        *palette_size_out = palette;
    return m;
}

SymbolMatrix matrix_from_text(const std::string& text, int* palette_size_out)
{
    std::istringstream in(text);
    SymbolMatrix m = matrix_from_stream(in, palette_size_out);
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing content after matrix body: '" + rest + "'");
    return m;
}

int max_color_id(const SymbolMatrix& m)
{
    int top = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c).is_color())
                top = std::max(top, m.at(r, c).color_id());
    return top;
}

} // namespace vcs
