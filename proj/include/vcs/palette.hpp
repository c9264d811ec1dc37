#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vcs {

struct PaletteEntry {
    int id = 0; // 1-based, dense
    int r = 0, g = 0, b = 0;
    friend bool operator==(const PaletteEntry&, const PaletteEntry&) = default;
};

// Declared share colors. Entries must be distinct and must avoid pure black
// and pure white, which are reserved for Black and White cells. Subtractive
// palettes relate to additive ones channel-wise by x -> 255 - x.
struct Palette {
    enum class Model { additive, subtractive };
    Model model = Model::additive;
    std::vector<PaletteEntry> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const PaletteEntry& entry(int id) const;
    std::optional<int> id_for(int r, int g, int b) const;
    Palette converted() const;

    friend bool operator==(const Palette&, const Palette&) = default;
};

void validate(const Palette& p);

// Red, green, blue for c <= 3; larger palettes must come from a file.
Palette default_palette(int colors);

// Text form: "model additive|subtractive" line, then "id R G B" lines.
std::string palette_to_text(const Palette& p);
Palette palette_from_stream(std::istream& in, int expected_colors);
Palette read_palette_file(const std::string& path, int expected_colors);
void write_palette_file(const Palette& p, const std::string& path);

} // namespace vcs
