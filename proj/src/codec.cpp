#include "vcs/codec.hpp"

#include <cstdlib>

namespace vcs {

TileShape plan_tile(int m_e)
{
    if (m_e < 1)
        throw ParameterError("tile planning needs m_E >= 1");
    TileShape best;
    long long best_score = -1;
    for (int h = 1; h <= m_e; ++h) {
        const int w = (m_e + h - 1) / h;
        const int pad = h * w - m_e;
        const long long score = (static_cast<long long>(std::abs(h - w)) + pad) * 1000000
                                + pad * 1000 + (h >= w ? 0 : 1);
        if (best_score < 0 || score < best_score) {
            best_score = score;
            best = TileShape{h, w, pad};
        }
    }
    return best;
}

std::vector<ShareImage> encode(const SchemeBundle& scheme,
                               const std::vector<IndexedImage>& secrets,
                               const std::vector<IndexedImage>& covers, std::uint64_t seed)
{
    if (secrets.size() != scheme.secrets.size())
        throw ParameterError("expected " + std::to_string(scheme.secrets.size())
                             + " secret image(s)");
    if (static_cast<int>(covers.size()) != scheme.n)
        throw ParameterError("expected " + std::to_string(scheme.n) + " cover images");
    const int width = covers.empty() ? 0 : covers.front().width;
    const int height = covers.empty() ? 0 : covers.front().height;
    auto check_dims = [&](const IndexedImage& img) {
        if (img.width != width || img.height != height)
            throw DimensionError("secret and cover images must share dimensions");
        if (img.pixels.size() != static_cast<size_t>(width) * static_cast<size_t>(height))
            throw DimensionError("image pixel buffer disagrees with its dimensions");
    };
    for (const IndexedImage& img : secrets)
        check_dims(img);
    for (const IndexedImage& img : covers)
        check_dims(img);

    const int m_e = scheme.m_e();
    const TileShape tile = plan_tile(m_e);
    std::vector<ShareImage> shares(static_cast<size_t>(scheme.n));
    for (int i = 0; i < scheme.n; ++i) {
        ShareImage& share = shares[static_cast<size_t>(i)];
        share.tile = tile;
        share.share_index = i + 1;
        share.scheme_id = scheme.id;
        share.seed = seed;
        share.image.width = width * tile.w;
        share.image.height = height * tile.h;
        share.image.cells.assign(
            static_cast<size_t>(share.image.width) * share.image.height, Cell::black());
    }

    std::vector<int> syms(scheme.secrets.size()), covs(static_cast<size_t>(scheme.n));
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            for (size_t i = 0; i < secrets.size(); ++i)
                syms[i] = secrets[i].at(x, y);
            for (size_t j = 0; j < covers.size(); ++j)
                covs[j] = covers[j].at(x, y);
            SymbolMatrix t = pixel_matrix(scheme, syms, covs);
            Splitmix64 rng = pixel_stream(seed, x, y);
            const std::vector<int> perm = random_permutation(m_e, rng);
            SymbolMatrix shuffled = permute_columns(t, perm);
            for (int r = 0; r < scheme.n; ++r)
                for (int cell = 0; cell < tile.cells(); ++cell) {
                    const int px = x * tile.w + cell % tile.w;
                    const int py = y * tile.h + cell / tile.w;
                    shares[static_cast<size_t>(r)].image.at(px, py) =
                        cell < m_e ? shuffled.at(r, cell) : Cell::black();
                }
        }
    return shares;
}

CellImage stack_cells(const std::vector<CellImage>& images)
{
    if (images.empty())
        throw ParameterError("stacking needs at least one image");
    CellImage out = images.front();
    for (size_t i = 1; i < images.size(); ++i) {
        const CellImage& img = images[i];
        if (img.width != out.width || img.height != out.height)
            throw DimensionError("stacked images must share dimensions");
        for (size_t c = 0; c < out.cells.size(); ++c)
            out.cells[c] = stack(out.cells[c], img.cells[c]);
    }
    return out;
}

MeasureGrid measure(const CellImage& image, const TileShape& tile)
{
    if (tile.h < 1 || tile.w < 1)
        throw ParameterError("tile shape must be positive");
    if (image.width % tile.w != 0 || image.height % tile.h != 0)
        throw DimensionError("image dimensions are not multiples of the tile shape");
    MeasureGrid grid;
    grid.tiles_x = image.width / tile.w;
    grid.tiles_y = image.height / tile.h;
    grid.reports.reserve(static_cast<size_t>(grid.tiles_x) * grid.tiles_y);
    CellRow cells(static_cast<size_t>(tile.cells()));
    for (int ty = 0; ty < grid.tiles_y; ++ty)
        for (int tx = 0; tx < grid.tiles_x; ++tx) {
            for (int cell = 0; cell < tile.cells(); ++cell)
                cells[static_cast<size_t>(cell)] =
                    image.at(tx * tile.w + cell % tile.w, ty * tile.h + cell / tile.w);
            grid.reports.push_back(weight(cells));
        }
    return grid;
}

} // namespace vcs
