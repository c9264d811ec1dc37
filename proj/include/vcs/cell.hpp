#pragma once

#include <cstdint>
#include <string>

#include "vcs/errors.hpp"

namespace vcs {

// One subpixel of a share. White is treated as palette id 0 so that binary
// and color schemes share a single stacking rule; Black is a reserved id
// that absorbs everything stacked onto it.
class Cell {
public:
    static constexpr std::uint16_t white_id = 0;
    static constexpr std::uint16_t black_id = 0xFFFF;

    constexpr Cell() = default;

    static constexpr Cell white() { return Cell(white_id); }
    static constexpr Cell black() { return Cell(black_id); }

    // palette ids are 1-based; 0 and the reserved Black id are rejected
    static Cell color(int palette_id)
    {
        if (palette_id < 1 || palette_id >= static_cast<int>(black_id))
            throw ParameterError("palette id out of range: " + std::to_string(palette_id));
        return Cell(static_cast<std::uint16_t>(palette_id));
    }

    constexpr bool is_white() const { return id_ == white_id; }
    constexpr bool is_black() const { return id_ == black_id; }
    constexpr bool is_color() const { return !is_white() && !is_black(); }

    constexpr int color_id() const { return is_color() ? static_cast<int>(id_) : -1; }
    constexpr std::uint16_t raw() const { return id_; }

    friend constexpr bool operator==(Cell a, Cell b) { return a.id_ == b.id_; }
    friend constexpr bool operator!=(Cell a, Cell b) { return a.id_ != b.id_; }
    friend constexpr bool operator<(Cell a, Cell b) { return a.id_ < b.id_; }

private:
    constexpr explicit Cell(std::uint16_t id) : id_(id) {}
    std::uint16_t id_ = white_id;
};

// Stacking two subpixels: identical cells stay as they are, any mixture goes
// black. This one rule yields Boolean OR on {White, Black}, keeps same-color
// overlays, and blacks out color-on-color and color-on-white mixtures.
constexpr Cell stack(Cell a, Cell b) { return a == b ? a : Cell::black(); }

// Text token as used by the matrix file format: "0" White, "k" Black,
// decimal palette id otherwise.
std::string cell_token(Cell c);
Cell cell_from_token(const std::string& token, int palette_size);

} // namespace vcs
