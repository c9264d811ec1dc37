#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vcs/cell.hpp"

namespace vcs {

using CellRow = std::vector<Cell>;

// Rectangular grid of cells, stored row-major. Rows must be >= 1; zero
// columns are allowed so an empty matrix can act as the identity of concat.
class SymbolMatrix {
public:
    SymbolMatrix() = default;
    SymbolMatrix(int rows, int cols, Cell fill = Cell::white());
    explicit SymbolMatrix(const std::vector<CellRow>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cell& at(int r, int c) { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    Cell at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }

    CellRow row(int r) const;
    CellRow column(int c) const;

    friend bool operator==(const SymbolMatrix& a, const SymbolMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cell> cells_;
};

// Count summary of a stacked row: nonwhite = Black count + every color count.
struct WeightReport {
    int nonwhite = 0;
    std::map<int, int> per_color; // palette id -> count; Black not included

    int color_total() const;
    friend bool operator==(const WeightReport&, const WeightReport&) = default;
};

// Cellwise stacking of rows of equal length; at least one row required.
CellRow stack_or(std::span<const CellRow> rows);
CellRow stack_or(const CellRow& a, const CellRow& b);

// Stack the given rows of a matrix (0-based indices).
CellRow stack_rows(const SymbolMatrix& m, std::span<const int> row_indices);

WeightReport weight(const CellRow& row);

// Side-by-side concatenation; both operands need the same row count.
SymbolMatrix concat(const SymbolMatrix& a, const SymbolMatrix& b);

// Column j of the result is column perm[j] of the input. perm must be a
// bijection on [0, cols).
SymbolMatrix permute_columns(const SymbolMatrix& m, std::span<const int> perm);

// Order-insensitive column comparison, the equality used by security checks.
bool same_column_multiset(const SymbolMatrix& a, const SymbolMatrix& b);

// Shared text form: header "rows cols palette_size", then one line per row
// of space-separated cell tokens. parse/print round-trip byte-exactly.
std::string matrix_to_text(const SymbolMatrix& m, int palette_size);
SymbolMatrix matrix_from_stream(std::istream& in, int* palette_size_out = nullptr);
SymbolMatrix matrix_from_text(const std::string& text, int* palette_size_out = nullptr);

// Largest color id present, 0 if the matrix is only black and white.
int max_color_id(const SymbolMatrix& m);

} // namespace vcs
