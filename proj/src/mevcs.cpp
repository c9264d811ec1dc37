#include "vcs/mevcs.hpp"

#include <sstream>

namespace vcs {

namespace {

// Example fixture variants, one text block per secret, three variants each.
const char* const reference_23_blocks[4][3] = {
    {"3 5 3\n1 2 k 3 k\n1 k 2 k 3\nk k k k k\n",
     "3 5 3\n2 1 k 3 k\n2 k 1 k 3\nk k k k k\n",
     "3 5 3\n3 1 k 2 k\n3 k 1 k 2\nk k k k k\n"},
    {"3 5 3\n1 2 k 3 k\nk k k k k\n1 k 2 k 3\n",
     "3 5 3\n2 1 k 3 k\nk k k k k\n2 k 1 k 3\n",
     "3 5 3\n3 1 k 2 k\nk k k k k\n3 k 1 k 2\n"},
    {"3 5 3\nk k k k k\n1 2 k 3 k\n1 k 2 k 3\n",
     "3 5 3\nk k k k k\n2 1 k 3 k\n2 k 1 k 3\n",
     "3 5 3\nk k k k k\n3 1 k 2 k\n3 k 1 k 2\n"},
    {"3 7 3\n1 2 k k 3 k k\n1 k 2 k k 3 k\n1 k k 2 k k 3\n",
     "3 7 3\n2 1 k k 3 k k\n2 k 1 k k 3 k\n2 k k 1 k k 3\n",
     "3 7 3\n3 1 k k 2 k k\n3 k 1 k k 2 k\n3 k k 1 k k 2\n"}};

void check_kn(int k, int n)
{
    if (k < 2 || n < k)
        throw ParameterError("multi-secret scheme needs 2 <= k <= n");
}

} // namespace

std::vector<std::vector<int>> enumerate_qualified(int k, int n)
{
    check_kn(k, n);
    std::vector<std::vector<int>> sets;
    for (int size = k; size <= n; ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i)
            pick[static_cast<size_t>(i)] = i + 1;
        for (;;) {
            sets.push_back(pick);
            int i = size - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - size + i + 1)
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return sets;
}

SymbolMatrix embed(const SymbolMatrix& b, const std::vector<int>& members, int n)
{
    if (static_cast<int>(members.size()) != b.rows())
        throw ParameterError("embed needs one target row per source row");
    SymbolMatrix out(n, b.cols(), Cell::black());
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int r = 0; r < b.rows(); ++r) {
        const int target = members[static_cast<size_t>(r)];
        if (target < 1 || target > n)
            throw ParameterError("embed target row out of range");
        if (used[static_cast<size_t>(target - 1)])
            throw ParameterError("embed target rows must be distinct");
        used[static_cast<size_t>(target - 1)] = 1;
        for (int c = 0; c < b.cols(); ++c)
            out.at(target - 1, c) = b.at(r, c);
    }
    return out;
}

SchemeBundle build_mevcs(int k, int n, const std::vector<int>& secret_levels,
                         const std::vector<int>& cover_levels, const std::string& id)
{
    check_kn(k, n);
    const auto sets = enumerate_qualified(k, n);
    if (secret_levels.size() != sets.size())
        throw ParameterError("need one secret level count per qualified set ("
                             + std::to_string(sets.size()) + " sets)");

    SchemeBundle scheme;
    scheme.mode = SchemeMode::gray_mevcs;
    scheme.k = k;
    scheme.n = n;
    scheme.extension = build_extension(k, n, cover_levels);
    for (size_t i = 0; i < sets.size(); ++i) {
        const int p = static_cast<int>(sets[i].size());
        const int g = secret_levels[i];
        if (g < 2)
            throw ParameterError("secret " + std::to_string(i + 1) + " needs at least 2 levels");
        BasisMatrixSet base = naor_shamir_kk(p);
        std::vector<SymbolMatrix> variants =
            g == 2 ? base.variants : gray_ladder(base, g).matrices;
        SecretSlot slot;
        slot.members = sets[i];
        slot.symbol_count = g;
        for (const SymbolMatrix& v : variants)
            slot.variants.push_back(embed(v, sets[i], n));
        scheme.secrets.push_back(slot);
    }
    std::ostringstream def;
    def << "gray-mevcs-" << k << '-' << n;
    scheme.id = id.empty() ? def.str() : id;
    refresh_scheme(scheme);
    return scheme;
}

SchemeBundle build_color_mevcs(int k, int n, int colors, const Palette& palette,
                               const std::string& id)
{
    check_kn(k, n);
    if (k != 2)
        throw ParameterError("built-in color multi-secret bases exist only for k = 2; "
                             "load custom basis matrices for larger k");
    if (palette.size() != colors)
        throw ParameterError("palette size disagrees with color count");

    SchemeBundle scheme;
    scheme.mode = SchemeMode::color_mevcs;
    scheme.k = k;
    scheme.n = n;
    scheme.palette = palette;
    scheme.extension = build_extension(k, n, std::vector<int>(static_cast<size_t>(n), 2));
    for (const auto& members : enumerate_qualified(k, n)) {
        const int p = static_cast<int>(members.size());
        BasisMatrixSet colored = color_basis(colors, two_of_p(p));
        SecretSlot slot;
        slot.members = members;
        slot.symbol_count = colors;
        slot.chromatic = true;
        for (const SymbolMatrix& v : colored.variants)
            slot.variants.push_back(embed(v, members, n));
        scheme.secrets.push_back(slot);
    }
    std::ostringstream def;
    def << "color-mevcs-" << k << '-' << n << "-c" << colors;
    scheme.id = id.empty() ? def.str() : id;
    refresh_scheme(scheme);
    return scheme;
}

SchemeBundle reference_color_mevcs_23(const Palette& palette, const std::string& id)
{
    if (palette.size() != 3)
        throw ParameterError("the reference (2,3) scheme uses a three-color palette");
    SchemeBundle scheme;
    scheme.mode = SchemeMode::color_mevcs;
    scheme.k = 2;
    scheme.n = 3;
    scheme.palette = palette;
    scheme.extension = build_extension(2, 3, {2, 2, 2});
    const auto sets = enumerate_qualified(2, 3);
    for (size_t i = 0; i < sets.size(); ++i) {
        SecretSlot slot;
        slot.members = sets[i];
        slot.symbol_count = 3;
        slot.chromatic = true;
        for (int v = 0; v < 3; ++v)
            slot.variants.push_back(matrix_from_text(reference_23_blocks[i][v]));
        scheme.secrets.push_back(slot);
    }
    scheme.id = id.empty() ? "color-mevcs-2-3-reference" : id;
    refresh_scheme(scheme);
    return scheme;
}

ChannelSchemes build_mevcs_channels(int k, int n,
                                    const std::array<std::vector<int>, 3>& channel_secret_levels,
                                    const std::array<std::vector<int>, 3>& channel_cover_levels)
{
    static const char* const names[3] = {"red", "green", "blue"};
    ChannelSchemes out;
    for (int ch = 0; ch < 3; ++ch) {
        std::ostringstream id;
        id << "gray-mevcs-" << k << '-' << n << '-' << names[ch];
        out.channel[static_cast<size_t>(ch)] =
            build_mevcs(k, n, channel_secret_levels[static_cast<size_t>(ch)],
                        channel_cover_levels[static_cast<size_t>(ch)], id.str());
        out.m_e_total += out.channel[static_cast<size_t>(ch)].m_e();
    }
    const size_t s = out.channel[0].secrets.size();
    for (size_t i = 0; i < s; ++i) {
        long long gaps = 0;
        for (const SchemeBundle& scheme : out.channel)
            gaps += scheme.secrets[i].gap;
        out.alpha_star.push_back(reduced_ratio(gaps, out.m_e_total));
    }
    return out;
}

} // namespace vcs
