#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcs/rng.hpp"
#include "vcs/scheme.hpp"

namespace vcs {

// Secret or cover pixels as symbol indexes: gray levels (1 = lightest) or
// palette color ids, both 1-based.
struct IndexedImage {
    int width = 0;
    int height = 0;
    std::vector<int> pixels;

    int at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    int& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
};

// Subpixel block replacing one source pixel. pad = h*w - m_E Black filler
// cells appended behind the permuted matrix columns, identically placed in
// every share.
struct TileShape {
    int h = 0;
    int w = 0;
    int pad = 0;
    int cells() const { return h * w; }
    friend bool operator==(const TileShape&, const TileShape&) = default;
};

// Most balanced tile admitting m_E cells: minimize |h-w| + pad, break ties
// toward less padding, then toward h >= w. Exact factorizations win when
// they are no more lopsided than padding up to a square would be.
TileShape plan_tile(int m_e);

struct CellImage {
    int width = 0;
    int height = 0;
    std::vector<Cell> cells;

    Cell at(int x, int y) const { return cells[static_cast<size_t>(y) * width + x]; }
    Cell& at(int x, int y) { return cells[static_cast<size_t>(y) * width + x]; }
    friend bool operator==(const CellImage&, const CellImage&) = default;
};

struct ShareImage {
    CellImage image;
    TileShape tile;
    int share_index = 0; // 1-based
    std::string scheme_id;
    std::uint64_t seed = 0;
};

// One meaningful share per participant. Every pixel's matrix gets its own
// column permutation drawn from pixel_stream(seed, x, y), so the output is
// reproducible cell-for-cell from the seed alone and pixels are independent.
std::vector<ShareImage> encode(const SchemeBundle& scheme,
                               const std::vector<IndexedImage>& secrets,
                               const std::vector<IndexedImage>& covers, std::uint64_t seed);

// Cellwise stacking of transparencies laid on top of each other.
CellImage stack_cells(const std::vector<CellImage>& images);

struct MeasureGrid {
    int tiles_x = 0;
    int tiles_y = 0;
    std::vector<WeightReport> reports;

    const WeightReport& at(int x, int y) const
    {
        return reports[static_cast<size_t>(y) * tiles_x + x];
    }
};

// Per-tile counts; image dimensions must be multiples of the tile shape.
MeasureGrid measure(const CellImage& image, const TileShape& tile);

} // namespace vcs
