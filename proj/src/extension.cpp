#include "vcs/extension.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace vcs {

std::vector<int> StarCollection::row_levels() const
{
    std::vector<int> levels;
    levels.reserve(stars.size());
    for (const auto& s : stars)
        levels.push_back(static_cast<int>(s.size()) + 1);
    return levels;
}

bool StarCollection::starred(int row, int col) const
{
    const auto& s = stars[static_cast<size_t>(row)];
    return std::find(s.begin(), s.end(), col) != s.end();
}

StarCollection build_extension(int k, int n, const std::vector<int>& levels)
{
    if (k < 2)
        throw ParameterError("extension needs k >= 2");
    if (n < k)
        throw ParameterError("extension needs n >= k");
    if (static_cast<int>(levels.size()) != n)
        throw ParameterError("need one cover level per row");

    long long total = 0;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 1)
            throw ParameterError("cover level of row " + std::to_string(i + 1) + " must be >= 1");
        total += levels[i] - 1;
    }
    const int m0 = static_cast<int>((total + k - 2) / (k - 1));
    for (size_t i = 0; i < levels.size(); ++i)
        if (levels[i] - 1 > m0)
            throw ParameterError("row " + std::to_string(i + 1) + " needs " + std::to_string(levels[i] - 1)
                                 + " stars but only " + std::to_string(m0) + " columns exist");

    StarCollection a;
    a.k = k;
    a.n_rows = n;
    a.n_cols = m0;
    a.stars.assign(static_cast<size_t>(n), {});

    std::vector<int> fill(static_cast<size_t>(m0), 0);
    for (int row = 0; row < n; ++row) {
        auto& placed = a.stars[static_cast<size_t>(row)];
        for (int s = 0; s < levels[static_cast<size_t>(row)] - 1; ++s) {
            int best = -1;
            for (int col = 0; col < m0; ++col) {
                if (fill[static_cast<size_t>(col)] >= k - 1)
                    continue;
                if (std::find(placed.begin(), placed.end(), col) != placed.end())
                    continue;
                if (best < 0 || fill[static_cast<size_t>(col)] < fill[static_cast<size_t>(best)])
                    best = col;
            }
            if (best < 0)
                throw ParameterError("no admissible column left for a star of row "
                                     + std::to_string(row + 1));
            placed.push_back(best);
            ++fill[static_cast<size_t>(best)];
        }
        std::sort(placed.begin(), placed.end());
    }
    return a;
}

StarCollection replicate_gray(const StarCollection& a2, int g)
{
    if (g < 2)
        throw ParameterError("replicate_gray needs g >= 2");
    for (const auto& s : a2.stars)
        if (s.size() != 1)
            throw ParameterError("replicate_gray needs a collection with one star per row");
    StarCollection out;
    out.k = a2.k;
    out.n_rows = a2.n_rows;
    out.n_cols = (g - 1) * a2.n_cols;
    out.stars.assign(a2.stars.size(), {});
    for (size_t row = 0; row < a2.stars.size(); ++row)
        for (int copy = 0; copy < g - 1; ++copy)
            out.stars[row].push_back(a2.stars[row][0] + copy * a2.n_cols);
    return out;
}

ChannelExtensions build_color_extension(int k, int n,
                                        const std::array<std::vector<int>, 3>& channel_levels)
{
    ChannelExtensions ext;
    ext.red = build_extension(k, n, channel_levels[0]);
    ext.green = build_extension(k, n, channel_levels[1]);
    ext.blue = build_extension(k, n, channel_levels[2]);
    ext.m0_total = ext.red.n_cols + ext.green.n_cols + ext.blue.n_cols;
    return ext;
}

SymbolMatrix instantiate(const StarCollection& a, const CoverAssignment& cover)
{
    if (static_cast<int>(cover.values.size()) != a.n_rows)
        throw ParameterError("need one cover value per row");
    SymbolMatrix out(a.n_rows, a.n_cols, Cell::black());
    for (int row = 0; row < a.n_rows; ++row) {
        const auto& placed = a.stars[static_cast<size_t>(row)];
        const int value = cover.values[static_cast<size_t>(row)];
        if (cover.mode == CoverAssignment::Mode::gray) {
            const int g = a.level(row);
            if (value < 1 || value > g)
                throw ParameterError("cover level " + std::to_string(value) + " out of range for row "
                                     + std::to_string(row + 1));
            const int whiten = g - value;
            for (int s = 0; s < whiten; ++s)
                out.at(row, placed[static_cast<size_t>(s)]) = Cell::white();
        } else {
            for (int col : placed)
                out.at(row, col) = Cell::color(value);
        }
    }
    return out;
}

std::string extension_to_text(const StarCollection& a)
{
    std::ostringstream out;
    out << a.k << ' ' << a.n_rows << ' ' << a.n_cols << '\n';
    const std::vector<int> levels = a.row_levels();
    for (size_t i = 0; i < levels.size(); ++i)
        out << (i ? " " : "") << levels[i];
    out << '\n';
    out << a.n_rows << ' ' << a.n_cols << " 0\n";
    for (int row = 0; row < a.n_rows; ++row) {
        for (int col = 0; col < a.n_cols; ++col) {
            if (col)
                out << ' ';
            out << (a.starred(row, col) ? "*" : "k");
        }
        out << '\n';
    }
    return out.str();
}

StarCollection extension_from_stream(std::istream& in)
{
    StarCollection a;
    if (!(in >> a.k >> a.n_rows >> a.n_cols))
        throw ParseError("extension header must be 'k n m0'");
    if (a.k < 2 || a.n_rows < 1 || a.n_cols < 0)
        throw ParseError("extension header values out of range");
    std::vector<int> levels(static_cast<size_t>(a.n_rows));
    for (int& g : levels) {
        if (!(in >> g) || g < 1)
            throw ParseError("bad cover level in extension block");
    }
    int rows = 0, cols = 0, palette = 0;
    if (!(in >> rows >> cols >> palette) || rows != a.n_rows || cols != a.n_cols || palette != 0)
        throw ParseError("extension matrix header disagrees with 'k n m0'");
    a.stars.assign(static_cast<size_t>(a.n_rows), {});
    std::string token;
    for (int row = 0; row < rows; ++row)
        for (int col = 0; col < cols; ++col) {
            if (!(in >> token))
                throw ParseError("extension matrix ended early");
            if (token == "*")
                a.stars[static_cast<size_t>(row)].push_back(col);
            else if (token != "k")
                throw ParseError("extension matrix cells must be 'k' or '*'");
        }
    for (int row = 0; row < a.n_rows; ++row)
        if (a.level(row) != levels[static_cast<size_t>(row)])
            throw ParseError("levels line disagrees with star count of row "
                             + std::to_string(row + 1));
    return a;
}

StarCollection extension_from_text(const std::string& text)
{
    std::istringstream in(text);
    StarCollection a = extension_from_stream(in);
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing content after extension block");
    return a;
}

} // namespace vcs
