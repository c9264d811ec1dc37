#include "vcs/image_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vcs {

namespace {

std::string pixel_name(int x, int y)
{
    return "pixel (" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

// Consumes whitespace and '#' comments, collecting comment text.
void skip_separators(std::istream& in, std::vector<std::string>* comments)
{
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            if (comments)
                comments->push_back(line.substr(1));
        } else if (c != std::char_traits<char>::eof() && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

int read_value(std::istream& in, std::vector<std::string>* comments, const char* what)
{
    skip_separators(in, comments);
    int value = 0;
    if (!(in >> value))
        throw ParseError(std::string("expected ") + what);
    return value;
}

RawImage promoted(const RawImage& image)
{
    if (image.color)
        return image;
    RawImage out;
    out.width = image.width;
    out.height = image.height;
    out.color = true;
    out.samples.reserve(image.samples.size() * 3);
    for (unsigned char s : image.samples) {
        out.samples.push_back(s);
        out.samples.push_back(s);
        out.samples.push_back(s);
    }
    return out;
}

} // namespace

RawImage raw_from_stream(std::istream& in, std::vector<std::string>* comments)
{
    skip_separators(in, comments);
    std::string magic;
    if (!(in >> magic))
        throw ParseError("empty image file");
    RawImage image;
    if (magic == "P2")
        image.color = false;
    else if (magic == "P3")
        image.color = true;
    else
        throw ParseError("unsupported image magic '" + magic + "', expected P2 or P3");
    image.width = read_value(in, comments, "image width");
    image.height = read_value(in, comments, "image height");
    if (image.width < 0 || image.height < 0)
        throw ParseError("image dimensions must be non-negative");
    const int depth = read_value(in, comments, "sample depth");
    if (depth != 255)
        throw ParseError("sample depth must be 255, got " + std::to_string(depth));
    const size_t total = static_cast<size_t>(image.width) * image.height * image.channels();
    image.samples.reserve(total);
    for (size_t i = 0; i < total; ++i) {
        const int value = read_value(in, comments, "image sample");
        if (value < 0 || value > 255)
            throw ParseError("sample " + std::to_string(value) + " outside [0, 255]");
        image.samples.push_back(static_cast<unsigned char>(value));
    }
    skip_separators(in, comments);
    if (in.peek() != std::char_traits<char>::eof())
        throw ParseError("trailing content after image samples");
    return image;
}

RawImage raw_from_text(const std::string& text, std::vector<std::string>* comments)
{
    std::istringstream in(text);
    return raw_from_stream(in, comments);
}

RawImage read_raw_file(const std::string& path, std::vector<std::string>* comments)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path + " for reading");
    try {
        return raw_from_stream(in, comments);
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

std::string raw_to_text(const RawImage& image, const std::vector<std::string>& comments)
{
    if (image.samples.size()
        != static_cast<size_t>(image.width) * image.height * image.channels())
        throw DimensionError("image sample buffer disagrees with its dimensions");
    std::ostringstream out;
    out << (image.color ? "P3" : "P2") << '\n';
    for (const std::string& comment : comments)
        out << '#' << comment << '\n';
    out << image.width << ' ' << image.height << '\n' << 255 << '\n';
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x)
            for (int c = 0; c < image.channels(); ++c) {
                if (x != 0 || c != 0)
                    out << ' ';
                out << static_cast<int>(image.sample(x, y, c));
            }
        out << '\n';
    }
    return out.str();
}

void write_raw_file(const std::string& path, const RawImage& image,
                    const std::vector<std::string>& comments)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out << raw_to_text(image, comments);
    if (!out)
        throw IoError("failed writing " + path);
}

int quantize_gray(int value, int levels)
{
    if (levels < 2)
        throw ParameterError("quantization needs at least two levels");
    if (value < 0 || value > 255)
        throw ParameterError("sample " + std::to_string(value) + " outside [0, 255]");
    for (int t = 1; t <= levels; ++t)
        if (value <= 255 * t / levels)
            return levels - t + 1;
    return 1;
}

int gray_level_value(int level, int levels)
{
    if (levels < 2)
        throw ParameterError("gray rendering needs at least two levels");
    if (level < 1 || level > levels)
        throw ParameterError("level " + std::to_string(level) + " outside [1, "
                             + std::to_string(levels) + "]");
    return 255 * (levels - level) / (levels - 1);
}

IndexedImage index_gray(const RawImage& image, int levels)
{
    if (image.color)
        throw ParameterError("gray image expected");
    IndexedImage out;
    out.width = image.width;
    out.height = image.height;
    out.pixels.reserve(image.samples.size());
    for (unsigned char s : image.samples)
        out.pixels.push_back(quantize_gray(s, levels));
    return out;
}

IndexedImage index_color(const RawImage& image, const Palette& palette)
{
    if (!image.color)
        throw ParameterError("color image expected");
    IndexedImage out;
    out.width = image.width;
    out.height = image.height;
    out.pixels.reserve(static_cast<size_t>(image.width) * image.height);
    for (int y = 0; y < image.height; ++y)
        for (int x = 0; x < image.width; ++x) {
            const int r = image.sample(x, y, 0);
            const int g = image.sample(x, y, 1);
            const int b = image.sample(x, y, 2);
            const std::optional<int> id = palette.id_for(r, g, b);
            if (!id)
                throw ParseError(pixel_name(x, y) + " color (" + std::to_string(r) + ", "
                                 + std::to_string(g) + ", " + std::to_string(b)
                                 + ") is not in the palette");
            out.pixels.push_back(*id);
        }
    return out;
}

RawImage render_gray_levels(const IndexedImage& image, int levels)
{
    RawImage out;
    out.width = image.width;
    out.height = image.height;
    out.samples.reserve(image.pixels.size());
    for (int level : image.pixels)
        out.samples.push_back(static_cast<unsigned char>(gray_level_value(level, levels)));
    return out;
}

RawImage render_palette_ids(const IndexedImage& image, const Palette& palette)
{
    RawImage out;
    out.width = image.width;
    out.height = image.height;
    out.color = true;
    out.samples.reserve(image.pixels.size() * 3);
    for (int id : image.pixels) {
        const PaletteEntry& entry = palette.entry(id);
        out.samples.push_back(static_cast<unsigned char>(entry.r));
        out.samples.push_back(static_cast<unsigned char>(entry.g));
        out.samples.push_back(static_cast<unsigned char>(entry.b));
    }
    return out;
}

RawImage render_cells(const CellImage& image, const Palette& palette)
{
    RawImage out;
    out.width = image.width;
    out.height = image.height;
    out.color = palette.size() > 0;
    out.samples.reserve(image.cells.size() * out.channels());
    for (const Cell cell : image.cells) {
        int r = 0, g = 0, b = 0;
        if (cell.is_white())
            r = g = b = 255;
        else if (cell.is_color()) {
            const PaletteEntry& entry = palette.entry(cell.color_id());
            r = entry.r;
            g = entry.g;
            b = entry.b;
        }
        if (out.color) {
            out.samples.push_back(static_cast<unsigned char>(r));
            out.samples.push_back(static_cast<unsigned char>(g));
            out.samples.push_back(static_cast<unsigned char>(b));
        } else {
            if (cell.is_color())
                throw ParameterError("colored cells need a palette to render");
            out.samples.push_back(static_cast<unsigned char>(r));
        }
    }
    return out;
}

CellImage cells_from_raw(const RawImage& image, const Palette& palette)
{
    CellImage out;
    out.width = image.width;
    out.height = image.height;
    out.cells.reserve(static_cast<size_t>(image.width) * image.height);
    for (int y = 0; y < image.height; ++y)
        for (int x = 0; x < image.width; ++x) {
            const int r = image.sample(x, y, 0);
            const int g = image.color ? image.sample(x, y, 1) : r;
            const int b = image.color ? image.sample(x, y, 2) : r;
            if (r == 0 && g == 0 && b == 0) {
                out.cells.push_back(Cell::black());
            } else if (r == 255 && g == 255 && b == 255) {
                out.cells.push_back(Cell::white());
            } else {
                const std::optional<int> id = palette.id_for(r, g, b);
                if (!id)
                    throw ParseError(pixel_name(x, y) + " sample is neither black, white, nor a"
                                     " palette color");
                out.cells.push_back(Cell::color(*id));
            }
        }
    return out;
}

std::string share_comment(const ShareImage& share)
{
    std::ostringstream out;
    out << "vcshare scheme=" << share.scheme_id << " share=" << share.share_index
        << " seed=" << share.seed << " tile=" << share.tile.h << 'x' << share.tile.w;
    return out.str();
}

void write_share_file(const std::string& path, const ShareImage& share,
                      const Palette& palette)
{
    write_raw_file(path, render_cells(share.image, palette), {share_comment(share)});
}

ShareImage read_share_file(const std::string& path, const Palette& palette)
{
    std::vector<std::string> comments;
    const RawImage raw = read_raw_file(path, &comments);
    const std::string* meta = nullptr;
    for (const std::string& comment : comments)
        if (comment.rfind("vcshare ", 0) == 0) {
            if (meta)
                throw ParseError(path + ": multiple share metadata comments");
            meta = &comment;
        }
    if (!meta)
        throw ParseError(path + ": missing '#vcshare' metadata comment");

    ShareImage share;
    bool have_share = false, have_seed = false, have_tile = false;
    std::istringstream fields(meta->substr(8));
    std::string field;
    while (fields >> field) {
        const size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ": malformed share metadata field '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        try {
            if (key == "scheme") {
                share.scheme_id = value;
            } else if (key == "share") {
                share.share_index = std::stoi(value);
                have_share = true;
            } else if (key == "seed") {
                share.seed = std::stoull(value);
                have_seed = true;
            } else if (key == "tile") {
                const size_t x = value.find('x');
                if (x == std::string::npos)
                    throw ParseError("tile needs the form <h>x<w>");
                share.tile.h = std::stoi(value.substr(0, x));
                share.tile.w = std::stoi(value.substr(x + 1));
                have_tile = true;
            } else {
                throw ParseError("unknown share metadata key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw ParseError(path + ": malformed share metadata value '" + value + "'");
        } catch (const std::out_of_range&) {
            throw ParseError(path + ": share metadata value '" + value + "' out of range");
        }
    }
    if (share.scheme_id.empty() || !have_share || !have_seed || !have_tile)
        throw ParseError(path + ": share metadata must carry scheme, share, seed and tile");
    if (share.tile.h < 1 || share.tile.w < 1)
        throw ParseError(path + ": share tile shape must be positive");
    share.image = cells_from_raw(raw, palette);
    if (share.image.width % share.tile.w != 0 || share.image.height % share.tile.h != 0)
        throw DimensionError(path + ": image dimensions are not multiples of the tile shape");
    return share;
}

RawImage stack_raw(const std::vector<RawImage>& images)
{
    if (images.empty())
        throw ParameterError("stacking needs at least one image");
    bool color = false;
    for (const RawImage& image : images) {
        if (image.width != images.front().width || image.height != images.front().height)
            throw DimensionError("stacked images must share dimensions");
        color = color || image.color;
    }
    RawImage out = color ? promoted(images.front()) : images.front();
    for (size_t i = 1; i < images.size(); ++i) {
        const RawImage layer = color ? promoted(images[i]) : images[i];
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x) {
                bool equal = true;
                for (int c = 0; c < out.channels(); ++c)
                    equal = equal && out.sample(x, y, c) == layer.sample(x, y, c);
                if (!equal)
                    for (int c = 0; c < out.channels(); ++c)
                        out.sample(x, y, c) = 0;
            }
    }
    return out;
}

} // namespace vcs
