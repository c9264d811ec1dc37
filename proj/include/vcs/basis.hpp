#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcs/matrix.hpp"

namespace vcs {

// One basis matrix per secret symbol. For black/white sets (palette_size 0)
// variant 0 encodes white and variant 1 black; for color sets variant i
// encodes palette color i+1. All variants share the width m. alpha_times_m
// is the guaranteed count gap between adjacent symbols when any k rows are
// stacked, and d the darkest stacked count (own-color count for color sets).
struct BasisMatrixSet {
    int k = 0;
    int n = 0;
    int palette_size = 0;
    std::vector<SymbolMatrix> variants;
    int m = 0;
    int alpha_times_m = 0;
    int d = 0;
};

// Gray ladder: matrices[j] encodes level j+1, level 1 being the lightest.
struct GrayLadder {
    int levels = 0;
    std::vector<SymbolMatrix> matrices;
};

// (k,k) threshold pair built from subset parity: columns of variant 0 are
// the characteristic vectors of even-cardinality subsets of {1..k}, variant
// 1 the odd ones, both in ascending bitmask order. m = 2^(k-1), gap 1.
BasisMatrixSet naor_shamir_kk(int k);

// Hand-picked small sets: "2-2" is ((k 0),(k 0)) / ((k 0),(0 k)), "2-3" the
// width-3 any-2-of-3 pair. Unknown names raise ParameterError.
BasisMatrixSet builtin_basis(const std::string& name);

// Any-2-of-p pair of width p: variant 0 repeats (0 k ... k); variant 1 puts
// the white cell on the diagonal. two_of_p(3) equals builtin "2-3".
BasisMatrixSet two_of_p(int p);

// Level j is the concatenation of (j-1) copies of variant 1 followed by
// (g-j) copies of variant 0; consecutive levels keep the base gap.
GrayLadder gray_ladder(const BasisMatrixSet& base, int g);
BasisMatrixSet gray_ladder_set(const BasisMatrixSet& base, int g);

// Color variants over a binary base (S_0, S_1): variant c substitutes c for
// white in S_0, then for every column of S_1 in order and every other color
// in ascending order substitutes that color for white, dropping columns that
// come out all black. Any k stacked rows of variant c show exactly one
// subpixel of color c; a single row shows one subpixel of every color.
BasisMatrixSet color_basis(int colors, const BasisMatrixSet& base);

// File format: header "k n variants m", then one matrix block per variant in
// the shared text format. Definition checks are the verifier's job, not the
// loader's; only shape consistency is enforced here.
BasisMatrixSet load_basis(std::istream& in);
BasisMatrixSet load_basis_file(const std::string& path);
std::string basis_to_text(const BasisMatrixSet& set);
void save_basis_file(const BasisMatrixSet& set, const std::string& path);

// Recompute m / alpha_times_m / d from the variant matrices by stacking the
// first k rows. Used after construction and after loading.
void refresh_metrics(BasisMatrixSet& set);

} // namespace vcs
