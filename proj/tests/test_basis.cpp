#include <doctest.h>

#include <sstream>

#include "vcs/basis.hpp"

using namespace vcs;

TEST_CASE("parity pair (2,2)")
{
    const BasisMatrixSet b = naor_shamir_kk(2);
    CHECK(b.k == 2);
    CHECK(b.n == 2);
    CHECK(b.m == 2);
    CHECK(b.alpha_times_m == 1);
    CHECK(b.d == 2);
    CHECK(matrix_to_text(b.variants[0], 0) == "2 2 0\n0 k\n0 k\n");
    CHECK(matrix_to_text(b.variants[1], 0) == "2 2 0\nk 0\n0 k\n");
}

TEST_CASE("parity pair (3,3)")
{
    const BasisMatrixSet b = naor_shamir_kk(3);
    CHECK(b.m == 4);
    CHECK(b.alpha_times_m == 1);
    CHECK(b.d == 4);
    CHECK(matrix_to_text(b.variants[0], 0) == "3 4 0\n0 k k 0\n0 k 0 k\n0 0 k k\n");
    CHECK(matrix_to_text(b.variants[1], 0) == "3 4 0\nk 0 0 k\n0 k 0 k\n0 0 k k\n");
}

TEST_CASE("parity pair (4,4) metrics")
{
    const BasisMatrixSet b = naor_shamir_kk(4);
    CHECK(b.m == 8);
    CHECK(b.alpha_times_m == 1);
    CHECK(b.d == 8);
    // every 3-bit pattern extends to exactly one column of each variant
    CHECK(same_column_multiset(b.variants[0], b.variants[0]));
    CHECK_FALSE(same_column_multiset(b.variants[0], b.variants[1]));
    CHECK_THROWS_AS(naor_shamir_kk(0), ParameterError);
    CHECK_THROWS_AS(naor_shamir_kk(21), ParameterError);
}

TEST_CASE("built-in small sets and the any-2-of-p family")
{
    const BasisMatrixSet b22 = builtin_basis("2-2");
    CHECK(b22.m == 2);
    CHECK(matrix_to_text(b22.variants[0], 0) == "2 2 0\nk 0\nk 0\n");
    CHECK(matrix_to_text(b22.variants[1], 0) == "2 2 0\nk 0\n0 k\n");
    CHECK_THROWS_AS(builtin_basis("9-9"), ParameterError);

    const BasisMatrixSet t3 = two_of_p(3);
    const BasisMatrixSet b23 = builtin_basis("2-3");
    CHECK(t3.variants[0] == b23.variants[0]);
    CHECK(t3.variants[1] == b23.variants[1]);
    CHECK(matrix_to_text(t3.variants[0], 0) == "3 3 0\n0 k k\n0 k k\n0 k k\n");
    CHECK(matrix_to_text(t3.variants[1], 0) == "3 3 0\n0 k k\nk 0 k\nk k 0\n");

    const BasisMatrixSet t5 = two_of_p(5);
    CHECK(t5.k == 2);
    CHECK(t5.n == 5);
    CHECK(t5.m == 5);
    CHECK(t5.alpha_times_m == 1);
    CHECK(t5.d == 5);
}

TEST_CASE("gray ladder over the (2,2) pair")
{
    const GrayLadder ladder = gray_ladder(naor_shamir_kk(2), 3);
    CHECK(ladder.levels == 3);
    REQUIRE(ladder.matrices.size() == 3);
    for (const SymbolMatrix& m : ladder.matrices)
        CHECK(m.cols() == 4);
    // level j stacks to weight 1 + j when both rows overlap
    const std::vector<int> both = {0, 1};
    CHECK(weight(stack_rows(ladder.matrices[0], both)).nonwhite == 2);
    CHECK(weight(stack_rows(ladder.matrices[1], both)).nonwhite == 3);
    CHECK(weight(stack_rows(ladder.matrices[2], both)).nonwhite == 4);
    // level j = (j-1) dark copies then (g-j) light copies
    CHECK(matrix_to_text(ladder.matrices[1], 0) == "2 4 0\nk 0 0 k\n0 k 0 k\n");

    const BasisMatrixSet set = gray_ladder_set(naor_shamir_kk(2), 3);
    CHECK(set.m == 4);
    CHECK(set.alpha_times_m == 1);
    CHECK(set.d == 4);
    CHECK_THROWS_AS(gray_ladder(naor_shamir_kk(2), 1), ParameterError);
}

TEST_CASE("three-color variants over the any-2-of-3 pair")
{
    const BasisMatrixSet c = color_basis(3, builtin_basis("2-3"));
    CHECK(c.palette_size == 3);
    CHECK(c.m == 7);
    CHECK(c.alpha_times_m == 1);
    CHECK(c.d == 1);
    REQUIRE(c.variants.size() == 3);
    CHECK(matrix_to_text(c.variants[0], 3)
          == "3 7 3\n1 2 3 k k k k\n1 k k 2 3 k k\n1 k k k k 2 3\n");
    CHECK(matrix_to_text(c.variants[1], 3)
          == "3 7 3\n2 1 3 k k k k\n2 k k 1 3 k k\n2 k k k k 1 3\n");
    CHECK(matrix_to_text(c.variants[2], 3)
          == "3 7 3\n3 1 2 k k k k\n3 k k 1 2 k k\n3 k k k k 1 2\n");
}

TEST_CASE("color variant stacking properties")
{
    for (int colors = 2; colors <= 3; ++colors) {
        const BasisMatrixSet c = color_basis(colors, builtin_basis("2-3"));
        for (int v = 0; v < colors; ++v) {
            const SymbolMatrix& m = c.variants[static_cast<size_t>(v)];
            // a single row shows every color exactly once
            for (int r = 0; r < m.rows(); ++r) {
                const WeightReport rep = weight(m.row(r));
                for (int col = 1; col <= colors; ++col)
                    CHECK(rep.per_color.at(col) == 1);
            }
            // any two stacked rows show the own color once and rivals never
            for (int r1 = 0; r1 < m.rows(); ++r1)
                for (int r2 = r1 + 1; r2 < m.rows(); ++r2) {
                    const std::vector<int> rows = {r1, r2};
                    const WeightReport rep = weight(stack_rows(m, rows));
                    CHECK(rep.color_total() == 1);
                    CHECK(rep.per_color.at(v + 1) == 1);
                }
        }
    }
    CHECK_THROWS_AS(color_basis(0, builtin_basis("2-3")), ParameterError);
    CHECK_THROWS_AS(color_basis(3, color_basis(2, builtin_basis("2-2"))), ParameterError);
}

TEST_CASE("basis files round-trip and validate shapes")
{
    const BasisMatrixSet b = color_basis(3, builtin_basis("2-3"));
    const std::string text = basis_to_text(b);
    std::istringstream in(text);
    const BasisMatrixSet back = load_basis(in);
    CHECK(back.k == b.k);
    CHECK(back.n == b.n);
    CHECK(back.m == b.m);
    CHECK(back.palette_size == b.palette_size);
    CHECK(back.alpha_times_m == b.alpha_times_m);
    CHECK(back.d == b.d);
    for (size_t i = 0; i < b.variants.size(); ++i)
        CHECK(back.variants[i] == b.variants[i]);

    CHECK_THROWS_AS(load_basis_file("/nonexistent/basis.txt"), IoError);
    std::istringstream bad("2 2 2 2\n2 2 0\n0 k\n0 k\n2 3 0\nk 0 0\n0 k 0\n");
    CHECK_THROWS_AS(load_basis(bad), DimensionError);
    std::istringstream junk("not a basis");
    CHECK_THROWS_AS(load_basis(junk), ParseError);
}

TEST_CASE("metrics recompute from the matrices")
{
    BasisMatrixSet b = naor_shamir_kk(2);
    b.m = 0;
    b.alpha_times_m = 0;
    b.d = 0;
    refresh_metrics(b);
    CHECK(b.m == 2);
    CHECK(b.alpha_times_m == 1);
    CHECK(b.d == 2);
}
