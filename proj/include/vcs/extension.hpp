#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcs/matrix.hpp"

namespace vcs {

// Cover-carrying columns prepended to every pixel's matrix. Cells are Black
// except for starred positions, which a cover assignment later turns into
// White cells (gray covers) or palette colors (color covers). Invariants:
// row i holds exactly level(i)-1 stars in distinct columns, and no column
// holds more than k-1 stars, so any k stacked rows come out all Black.
struct StarCollection {
    int k = 0;
    int n_rows = 0;
    int n_cols = 0;                      // m0
    std::vector<std::vector<int>> stars; // per row, ascending column indexes

    int level(int row) const { return static_cast<int>(stars[static_cast<size_t>(row)].size()) + 1; }
    std::vector<int> row_levels() const;
    bool starred(int row, int col) const;
};

// Greedy placement over m0 = ceil(sum(levels[i]-1) / (k-1)) columns: rows in
// input order, each star on the least-filled admissible column, ties to the
// lowest index. A row needing more stars than columns is a parameter error.
StarCollection build_extension(int k, int n, const std::vector<int>& levels);

// Concatenate g-1 copies of a 2-level collection, giving every row g levels.
StarCollection replicate_gray(const StarCollection& a2, int g);

struct ChannelExtensions {
    StarCollection red, green, blue;
    int m0_total = 0;
};

// One collection per additive channel; combined width is the sum.
ChannelExtensions build_color_extension(int k, int n,
                                        const std::array<std::vector<int>, 3>& channel_levels);

struct CoverAssignment {
    enum class Mode { gray, color };
    Mode mode = Mode::gray;
    std::vector<int> values; // per row: gray level, 1 = lightest, or palette id
};

// Fill in the stars for one pixel's covers. Gray level t in a g-level row
// turns its first g-t stars (left to right) White and leaves the rest Black,
// so the row weight m0 - (g-t) descends as covers lighten and every level is
// distinguishable on a single share. Color covers paint every star of the
// row with the row's palette id.
SymbolMatrix instantiate(const StarCollection& a, const CoverAssignment& cover);

// Serialized as a "k n m0" header, a levels line, then the star matrix in
// the shared text format with '*' marking stars.
std::string extension_to_text(const StarCollection& a);
StarCollection extension_from_stream(std::istream& in);
StarCollection extension_from_text(const std::string& text);

} // namespace vcs
