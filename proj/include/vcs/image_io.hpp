#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcs/codec.hpp"
#include "vcs/palette.hpp"

namespace vcs {

// 8-bit image as stored in a plain portable text file. Gray images keep one
// sample per pixel, color images keep three (r, g, b order).
struct RawImage {
    int width = 0;
    int height = 0;
    bool color = false;
    std::vector<unsigned char> samples;

    int channels() const { return color ? 3 : 1; }
    unsigned char& sample(int x, int y, int c)
    {
        return samples[(static_cast<size_t>(y) * width + x) * channels() + c];
    }
    unsigned char sample(int x, int y, int c) const
    {
        return samples[(static_cast<size_t>(y) * width + x) * channels() + c];
    }
    bool operator==(const RawImage&) const = default;
};

// Reads plain "P2" (gray) or "P3" (color) text. Comments run from '#' to end
// of line and may appear wherever whitespace may. The sample depth must be
// 255 and content after the final sample is rejected. Comment text (without
// the leading '#') is appended to *comments when it is non-null.
RawImage raw_from_stream(std::istream& in, std::vector<std::string>* comments = nullptr);
RawImage raw_from_text(const std::string& text, std::vector<std::string>* comments = nullptr);
RawImage read_raw_file(const std::string& path, std::vector<std::string>* comments = nullptr);

// Canonical text form: magic line, one line per comment, "width height" line,
// "255" line, then one image row per line.
std::string raw_to_text(const RawImage& image,
                        const std::vector<std::string>& comments = {});
void write_raw_file(const std::string& path, const RawImage& image,
                    const std::vector<std::string>& comments = {});

// Quantizes a sample into [1..levels]; 255 maps to level 1 (the lightest) and
// 0 maps to the deepest level. Bin t covers samples up to 255*t/levels.
int quantize_gray(int value, int levels);

// Canonical sample for a level, spacing levels evenly with level 1 at 255 and
// the deepest level at 0.
int gray_level_value(int level, int levels);

// Converts a gray file to 1-based levels, or a color file to palette ids.
// Color samples must match a palette entry exactly.
IndexedImage index_gray(const RawImage& image, int levels);
IndexedImage index_color(const RawImage& image, const Palette& palette);

// Renders indexed pixels back to samples.
RawImage render_gray_levels(const IndexedImage& image, int levels);
RawImage render_palette_ids(const IndexedImage& image, const Palette& palette);

// Renders cells to samples: White 255, Black 0, palette ids via their rgb
// entries. Output is color exactly when the palette is non-empty.
RawImage render_cells(const CellImage& image, const Palette& palette);

// Inverse of render_cells; unknown samples raise ParseError naming the pixel.
CellImage cells_from_raw(const RawImage& image, const Palette& palette);

// Share files are ordinary image files carrying one metadata comment:
//   #vcshare scheme=<id> share=<index> seed=<seed> tile=<h>x<w>
std::string share_comment(const ShareImage& share);
void write_share_file(const std::string& path, const ShareImage& share,
                      const Palette& palette);
ShareImage read_share_file(const std::string& path, const Palette& palette);

// Stacks raw images without consulting a scheme: pixels that agree persist,
// pixels that differ turn black. Gray inputs are promoted to color when the
// inputs are mixed.
RawImage stack_raw(const std::vector<RawImage>& images);

} // namespace vcs
