#include <doctest.h>

#include <algorithm>

#include "vcs/matrix.hpp"
#include "vcs/rng.hpp"

using namespace vcs;

namespace {

Cell random_cell(Splitmix64& rng)
{
    switch (rng.bounded(5)) {
    case 0: return Cell::white();
    case 1: return Cell::black();
    default: return Cell::color(static_cast<int>(rng.bounded(3)) + 1);
    }
}

CellRow random_row(Splitmix64& rng, int len)
{
    CellRow row(static_cast<size_t>(len));
    for (Cell& c : row)
        c = random_cell(rng);
    return row;
}

} // namespace

TEST_CASE("cell construction and classification")
{
    CHECK(Cell::white().is_white());
    CHECK(Cell::black().is_black());
    CHECK(Cell::color(2).is_color());
    CHECK(Cell::color(2).color_id() == 2);
    CHECK(Cell::white().color_id() == -1);
    CHECK(Cell::black().color_id() == -1);
    CHECK_THROWS_AS(Cell::color(0), ParameterError);
    CHECK_THROWS_AS(Cell::color(-3), ParameterError);
    CHECK_THROWS_AS(Cell::color(0xFFFF), ParameterError);
    CHECK(Cell() == Cell::white());
}

TEST_CASE("stacking keeps equal cells and blackens mixtures")
{
    const Cell w = Cell::white(), b = Cell::black();
    const Cell c1 = Cell::color(1), c2 = Cell::color(2);
    CHECK(stack(w, w) == w);
    CHECK(stack(b, b) == b);
    CHECK(stack(c1, c1) == c1);
    CHECK(stack(w, b) == b);
    CHECK(stack(b, w) == b);
    CHECK(stack(c1, c2) == b);
    CHECK(stack(w, c1) == b);
    CHECK(stack(c2, b) == b);
}

TEST_CASE("stacking is commutative, associative, idempotent, black-absorbing")
{
    Splitmix64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Cell a = random_cell(rng), b = random_cell(rng), c = random_cell(rng);
        CHECK(stack(a, b) == stack(b, a));
        CHECK(stack(stack(a, b), c) == stack(a, stack(b, c)));
        CHECK(stack(a, a) == a);
        CHECK(stack(a, Cell::black()) == Cell::black());
        CHECK(stack(a, Cell::white()) == (a.is_white() ? a : Cell::black()));
    }
}

TEST_CASE("cell tokens round-trip and reject junk")
{
    CHECK(cell_token(Cell::white()) == "0");
    CHECK(cell_token(Cell::black()) == "k");
    CHECK(cell_token(Cell::color(3)) == "3");
    CHECK(cell_from_token("0", 0) == Cell::white());
    CHECK(cell_from_token("k", 0) == Cell::black());
    CHECK(cell_from_token("2", 3) == Cell::color(2));
    CHECK_THROWS_AS(cell_from_token("2", 1), ParseError);
    CHECK_THROWS_AS(cell_from_token("x", 3), ParseError);
    CHECK_THROWS_AS(cell_from_token("1x", 3), ParseError);
    CHECK_THROWS_AS(cell_from_token("-1", 3), ParseError);
}

TEST_CASE("matrix shape rules")
{
    const SymbolMatrix m(2, 3, Cell::black());
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(1, 2) == Cell::black());
    CHECK_THROWS_AS(SymbolMatrix(0, 2), DimensionError);
    CHECK_THROWS_AS(SymbolMatrix(1, -1), DimensionError);
    const SymbolMatrix empty(2, 0);
    CHECK(empty.cols() == 0);
    CHECK_THROWS_AS(SymbolMatrix(std::vector<CellRow>{}), DimensionError);
    CHECK_THROWS_AS(SymbolMatrix(std::vector<CellRow>{{Cell::white()}, {}}), DimensionError);
}

TEST_CASE("weight counts blacks and colors separately")
{
    const CellRow row = {Cell::white(), Cell::black(), Cell::color(1), Cell::color(1),
                         Cell::color(3)};
    const WeightReport rep = weight(row);
    CHECK(rep.nonwhite == 4);
    CHECK(rep.color_total() == 3);
    CHECK(rep.per_color.at(1) == 2);
    CHECK(rep.per_color.at(3) == 1);
    CHECK(rep.per_color.count(2) == 0);
}

TEST_CASE("stack_or over spans and matrix rows")
{
    const SymbolMatrix m = matrix_from_text("2 3 0\n0 k 0\n0 0 k\n");
    const std::vector<int> both = {0, 1};
    const CellRow stacked = stack_rows(m, both);
    CHECK(stacked == CellRow{Cell::white(), Cell::black(), Cell::black()});
    CHECK_THROWS_AS(stack_or(CellRow{Cell::white()}, CellRow{}), DimensionError);
    CHECK_THROWS_AS(stack_or(std::span<const CellRow>{}), DimensionError);
    CHECK_THROWS_AS(stack_rows(m, std::vector<int>{}), DimensionError);
}

TEST_CASE("concat widths add and the empty matrix is an identity")
{
    const SymbolMatrix a = matrix_from_text("2 2 0\n0 k\n0 k\n");
    const SymbolMatrix b = matrix_from_text("2 1 0\nk\n0\n");
    const SymbolMatrix ab = concat(a, b);
    CHECK(ab.cols() == 3);
    CHECK(ab.at(0, 2) == Cell::black());
    CHECK(ab.at(1, 2) == Cell::white());
    CHECK(concat(a, SymbolMatrix(2, 0)) == a);
    CHECK(concat(SymbolMatrix(2, 0), a) == a);
    CHECK_THROWS_AS(concat(a, SymbolMatrix(3, 1)), DimensionError);
}

TEST_CASE("stacking commutes with concatenation")
{
    Splitmix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const SymbolMatrix a(std::vector<CellRow>{random_row(rng, 4), random_row(rng, 4)});
        const SymbolMatrix b(std::vector<CellRow>{random_row(rng, 3), random_row(rng, 3)});
        const std::vector<int> rows = {0, 1};
        CellRow lhs = stack_rows(concat(a, b), rows);
        CellRow rhs = stack_rows(a, rows);
        const CellRow tail = stack_rows(b, rows);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("column permutation moves cells and validates the mapping")
{
    const SymbolMatrix m = matrix_from_text("2 3 2\n1 2 k\n1 k 2\n");
    const std::vector<int> rot = {2, 0, 1}; // out column j = in column rot[j]
    const SymbolMatrix p = permute_columns(m, rot);
    CHECK(p.at(0, 0) == Cell::black());
    CHECK(p.at(0, 1) == Cell::color(1));
    CHECK(p.at(0, 2) == Cell::color(2));
    CHECK(p.at(1, 0) == Cell::color(2));
    CHECK_THROWS_AS(permute_columns(m, std::vector<int>{0, 1}), ParameterError);
    CHECK_THROWS_AS(permute_columns(m, std::vector<int>{0, 0, 1}), ParameterError);
    CHECK_THROWS_AS(permute_columns(m, std::vector<int>{0, 1, 3}), ParameterError);
}

TEST_CASE("stacked weights are invariant under column permutation")
{
    Splitmix64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const SymbolMatrix m(std::vector<CellRow>{random_row(rng, 6), random_row(rng, 6),
                                                  random_row(rng, 6)});
        const std::vector<int> perm = random_permutation(6, rng);
        const SymbolMatrix p = permute_columns(m, perm);
        const std::vector<int> rows = {0, 2};
        CHECK(weight(stack_rows(m, rows)) == weight(stack_rows(p, rows)));
        CHECK(same_column_multiset(m, p));
    }
}

TEST_CASE("column multiset comparison ignores order only")
{
    const SymbolMatrix a = matrix_from_text("2 2 0\n0 k\n0 k\n");
    const SymbolMatrix b = matrix_from_text("2 2 0\nk 0\nk 0\n");
    const SymbolMatrix c = matrix_from_text("2 2 0\nk 0\n0 k\n");
    CHECK(same_column_multiset(a, b));
    CHECK_FALSE(same_column_multiset(a, c));
    CHECK_FALSE(same_column_multiset(a, matrix_from_text("2 1 0\n0\n0\n")));
}

TEST_CASE("matrix text round-trips byte for byte")
{
    const std::string text = "3 5 3\n1 2 k 3 k\n1 k 2 k 3\nk k k k k\n";
    int palette = 0;
    const SymbolMatrix m = matrix_from_text(text, &palette);
    CHECK(palette == 3);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 5);
    CHECK(m.at(0, 0) == Cell::color(1));
    CHECK(m.at(2, 4) == Cell::black());
    CHECK(matrix_to_text(m, palette) == text);

    const SymbolMatrix bw = matrix_from_text("1 2 0\n0 k\n");
    CHECK(matrix_to_text(bw, 0) == "1 2 0\n0 k\n");
}

TEST_CASE("matrix parsing rejects malformed input")
{
    CHECK_THROWS_AS(matrix_from_text(""), ParseError);
    CHECK_THROWS_AS(matrix_from_text("1 2 0\n0\n"), ParseError);        // short row
    CHECK_THROWS_AS(matrix_from_text("1 1 0\n0\nk\n"), ParseError);     // trailing cells
    CHECK_THROWS_AS(matrix_from_text("1 1 0\n2\n"), ParseError);        // id above palette
    CHECK_THROWS_AS(matrix_from_text("1 1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(matrix_from_text("0 1 0\n"), ParseError);
}

TEST_CASE("max_color_id scans every cell")
{
    CHECK(max_color_id(matrix_from_text("2 2 0\n0 k\nk 0\n")) == 0);
    CHECK(max_color_id(matrix_from_text("2 2 3\n1 k\nk 3\n")) == 3);
}
