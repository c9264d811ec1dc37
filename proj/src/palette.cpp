#include "vcs/palette.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "vcs/errors.hpp"

namespace vcs {

const PaletteEntry& Palette::entry(int id) const
{
    if (id < 1 || id > size())
        throw ParameterError("palette id out of range: " + std::to_string(id));
    return entries[static_cast<size_t>(id - 1)];
}

std::optional<int> Palette::id_for(int r, int g, int b) const
{
    for (const PaletteEntry& e : entries)
        if (e.r == r && e.g == g && e.b == b)
            return e.id;
    return std::nullopt;
}

Palette Palette::converted() const
{
    Palette out = *this;
    out.model = model == Model::additive ? Model::subtractive : Model::additive;
    for (PaletteEntry& e : out.entries) {
        e.r = 255 - e.r;
        e.g = 255 - e.g;
        e.b = 255 - e.b;
    }
    return out;
}

void validate(const Palette& p)
{
    for (size_t i = 0; i < p.entries.size(); ++i) {
        const PaletteEntry& e = p.entries[i];
        if (e.id != static_cast<int>(i) + 1)
            throw ParameterError("palette ids must be dense starting at 1");
        for (int v : {e.r, e.g, e.b})
            if (v < 0 || v > 255)
                throw ParameterError("palette component out of range");
        if ((e.r == 0 && e.g == 0 && e.b == 0) || (e.r == 255 && e.g == 255 && e.b == 255))
            throw ParameterError("palette entries may not be pure black or pure white");
        for (size_t j = 0; j < i; ++j) {
            const PaletteEntry& o = p.entries[j];
            if (o.r == e.r && o.g == e.g && o.b == e.b)
                throw ParameterError("palette entries must be distinct");
        }
    }
}

Palette default_palette(int colors)
{
    if (colors < 1 || colors > 3)
        throw ParameterError("default palette exists only for 1 to 3 colors; supply a palette file");
    Palette p;
    const PaletteEntry rgb[3] = {{1, 255, 0, 0}, {2, 0, 255, 0}, {3, 0, 0, 255}};
    for (int i = 0; i < colors; ++i)
        p.entries.push_back(rgb[i]);
    return p;
}

std::string palette_to_text(const Palette& p)
{
    std::ostringstream out;
    out << "model " << (p.model == Palette::Model::additive ? "additive" : "subtractive") << '\n';
    for (const PaletteEntry& e : p.entries)
        out << e.id << ' ' << e.r << ' ' << e.g << ' ' << e.b << '\n';
    return out.str();
}

Palette palette_from_stream(std::istream& in, int expected_colors)
{
    Palette p;
    std::string key, model;
    if (!(in >> key >> model) || key != "model")
        throw ParseError("palette must start with a 'model' line");
    if (model == "additive")
        p.model = Palette::Model::additive;
    else if (model == "subtractive")
        p.model = Palette::Model::subtractive;
    else
        throw ParseError("palette model must be additive or subtractive");
    for (int i = 0; i < expected_colors; ++i) {
        PaletteEntry e;
        if (!(in >> e.id >> e.r >> e.g >> e.b))
            throw ParseError("palette entry must be 'id R G B'");
        p.entries.push_back(e);
    }
    validate(p);
    return p;
}

Palette read_palette_file(const std::string& path, int expected_colors)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open palette file: " + path);
    Palette p = palette_from_stream(in, expected_colors);
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing content in palette file: " + path);
    return p;
}

void write_palette_file(const Palette& p, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write palette file: " + path);
    out << palette_to_text(p);
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace vcs
