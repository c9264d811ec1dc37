#include "vcs/scheme.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace vcs {

namespace {

const char* const mode_names[] = {"binary-evcs", "gray-evcs", "color-evcs", "gray-mevcs",
                                  "color-mevcs"};

std::vector<int> zero_based(const std::vector<int>& members)
{
    std::vector<int> rows;
    rows.reserve(members.size());
    for (int m : members)
        rows.push_back(m - 1);
    return rows;
}

int color_count(const WeightReport& rep, int id)
{
    auto it = rep.per_color.find(id);
    return it == rep.per_color.end() ? 0 : it->second;
}

// first qualified subset of a slot, 0-based
std::vector<int> canonical_rows(const SecretSlot& slot, int k)
{
    if (!slot.members.empty())
        return zero_based(slot.members);
    std::vector<int> rows(static_cast<size_t>(k));
    std::iota(rows.begin(), rows.end(), 0);
    return rows;
}

void refresh_slot(SecretSlot& slot, int k, int n)
{
    if (slot.variants.empty())
        throw ParameterError("secret slot has no variants");
    if (static_cast<int>(slot.variants.size()) != slot.symbol_count)
        throw ParameterError("slot symbol count disagrees with variant count");
    slot.width = slot.variants.front().cols();
    for (const SymbolMatrix& v : slot.variants) {
        if (v.rows() != n)
            throw DimensionError("slot variant row count differs from n");
        if (v.cols() != slot.width)
            throw DimensionError("slot variants have unequal width");
    }
    if (!slot.members.empty()) {
        if (static_cast<int>(slot.members.size()) < k)
            throw ParameterError("qualified set smaller than k");
        for (size_t i = 0; i < slot.members.size(); ++i) {
            if (slot.members[i] < 1 || slot.members[i] > n)
                throw ParameterError("qualified set member out of range");
            if (i && slot.members[i] <= slot.members[i - 1])
                throw ParameterError("qualified set members must ascend");
        }
    }

    const std::vector<int> rows = canonical_rows(slot, k);
    if (!slot.chromatic) {
        if (slot.symbol_count < 2)
            throw ParameterError("gray slot needs at least two symbols");
        std::vector<int> weights;
        for (const SymbolMatrix& v : slot.variants)
            weights.push_back(weight(stack_rows(v, rows)).nonwhite);
        slot.d = weights.back();
        slot.gap = slot.width;
        for (size_t i = 1; i < weights.size(); ++i)
            slot.gap = std::min(slot.gap, weights[i] - weights[i - 1]);
    } else {
        slot.d = color_count(weight(stack_rows(slot.variants.front(), rows)), 1);
        int impostor = 0;
        for (size_t i = 1; i < slot.variants.size(); ++i)
            impostor = std::max(
                impostor, color_count(weight(stack_rows(slot.variants[i], rows)), 1));
        slot.gap = slot.d - impostor;
    }
}

std::string default_id(SchemeMode mode, int k, int n, int extra)
{
    std::ostringstream out;
    out << mode_name(mode) << '-' << k << '-' << n;
    if (mode == SchemeMode::color_evcs || mode == SchemeMode::color_mevcs)
        out << "-c" << extra;
    else if (mode == SchemeMode::gray_evcs)
        out << "-g" << extra;
    return out.str();
}

} // namespace

std::string mode_name(SchemeMode mode) { return mode_names[static_cast<int>(mode)]; }

SchemeMode mode_from_name(const std::string& name)
{
    for (int i = 0; i < 5; ++i)
        if (name == mode_names[i])
            return static_cast<SchemeMode>(i);
    throw ParseError("unknown scheme mode '" + name + "'");
}

Ratio reduced_ratio(long long num, long long den)
{
    if (den == 0)
        throw ParameterError("ratio denominator is zero");
    long long g = std::gcd(num, den);
    if (g == 0)
        g = 1;
    return Ratio{num / g, den / g};
}

std::string ratio_text(const Ratio& r)
{
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int SchemeBundle::basis_width() const
{
    int total = 0;
    for (const SecretSlot& s : secrets)
        total += s.width;
    return total;
}

Ratio SchemeBundle::alpha(size_t slot) const
{
    return reduced_ratio(secrets.at(slot).gap, m_e());
}

std::vector<std::vector<int>> SchemeBundle::qualified_rows(size_t slot) const
{
    const SecretSlot& s = secrets.at(slot);
    if (!s.members.empty())
        return {zero_based(s.members)};
    // every k-subset of [0, n), ascending lexicographic
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        subsets.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return subsets;
}

void refresh_scheme(SchemeBundle& scheme)
{
    if (scheme.k < 2 || scheme.k > scheme.n)
        throw ParameterError("scheme needs 2 <= k <= n");
    if (scheme.extension.n_rows != scheme.n || scheme.extension.k != scheme.k)
        throw DimensionError("extension shape disagrees with scheme parameters");
    std::vector<int> fill(static_cast<size_t>(scheme.extension.n_cols), 0);
    for (const auto& row : scheme.extension.stars)
        for (int col : row) {
            if (col < 0 || col >= scheme.extension.n_cols)
                throw ParameterError("star column out of range");
            if (++fill[static_cast<size_t>(col)] > scheme.k - 1)
                throw ParameterError("extension column holds k or more stars");
        }
    if (scheme.secrets.empty())
        throw ParameterError("scheme needs at least one secret");
    const bool chromatic = scheme.mode == SchemeMode::color_evcs
                           || scheme.mode == SchemeMode::color_mevcs;
    if (chromatic)
        validate(scheme.palette);
    for (SecretSlot& slot : scheme.secrets) {
        if (slot.chromatic != chromatic)
            throw ParameterError("slot color mode disagrees with scheme mode");
        if (scheme.is_mevcs() && slot.members.empty())
            throw ParameterError("multi-secret slots need explicit qualified sets");
        if (!scheme.is_mevcs() && !slot.members.empty())
            throw ParameterError("single-secret slots must be threshold slots");
        refresh_slot(slot, scheme.k, scheme.n);
        if (chromatic) {
            for (const SymbolMatrix& v : slot.variants)
                if (max_color_id(v) > scheme.palette.size())
                    throw ParameterError("variant uses a color outside the palette");
        } else {
            for (const SymbolMatrix& v : slot.variants)
                if (max_color_id(v) != 0)
                    throw ParameterError("gray scheme variants must be black and white");
        }
    }
}

SchemeBundle make_binary_evcs(const BasisMatrixSet& basis, const std::string& id)
{
    if (basis.palette_size != 0 || basis.variants.size() != 2)
        throw ParameterError("binary scheme needs a binary two-variant basis");
    SchemeBundle scheme;
    scheme.mode = SchemeMode::binary_evcs;
    scheme.k = basis.k;
    scheme.n = basis.n;
    scheme.extension = build_extension(basis.k, basis.n, std::vector<int>(basis.n, 2));
    SecretSlot slot;
    slot.symbol_count = 2;
    slot.variants = basis.variants;
    scheme.secrets.push_back(slot);
    scheme.id = id.empty() ? default_id(scheme.mode, scheme.k, scheme.n, 0) : id;
    refresh_scheme(scheme);
    return scheme;
}

SchemeBundle make_gray_evcs(const BasisMatrixSet& binary_base, int g,
                            const std::vector<int>& cover_levels, const std::string& id)
{
    SchemeBundle scheme;
    scheme.mode = SchemeMode::gray_evcs;
    scheme.k = binary_base.k;
    scheme.n = binary_base.n;
    scheme.extension = build_extension(scheme.k, scheme.n, cover_levels);
    SecretSlot slot;
    slot.symbol_count = g;
    slot.variants = gray_ladder(binary_base, g).matrices;
    scheme.secrets.push_back(slot);
    scheme.id = id.empty() ? default_id(scheme.mode, scheme.k, scheme.n, g) : id;
    refresh_scheme(scheme);
    return scheme;
}

SchemeBundle make_color_evcs(const BasisMatrixSet& binary_base, int colors,
                             const Palette& palette, const std::string& id)
{
    if (palette.size() != colors)
        throw ParameterError("palette size disagrees with color count");
    SchemeBundle scheme;
    scheme.mode = SchemeMode::color_evcs;
    scheme.k = binary_base.k;
    scheme.n = binary_base.n;
    scheme.palette = palette;
    scheme.extension = build_extension(scheme.k, scheme.n, std::vector<int>(scheme.n, 2));
    SecretSlot slot;
    slot.symbol_count = colors;
    slot.chromatic = true;
    slot.variants = color_basis(colors, binary_base).variants;
    scheme.secrets.push_back(slot);
    scheme.id = id.empty() ? default_id(scheme.mode, scheme.k, scheme.n, colors) : id;
    refresh_scheme(scheme);
    return scheme;
}

SymbolMatrix pixel_matrix(const SchemeBundle& scheme, std::span<const int> secret_symbols,
                          std::span<const int> cover_values)
{
    if (secret_symbols.size() != scheme.secrets.size())
        throw ParameterError("need one symbol per secret");
    if (static_cast<int>(cover_values.size()) != scheme.n)
        throw ParameterError("need one cover value per share");

    CoverAssignment cover;
    cover.mode = scheme.color_covers() ? CoverAssignment::Mode::color
                                       : CoverAssignment::Mode::gray;
    cover.values.assign(cover_values.begin(), cover_values.end());
    if (cover.mode == CoverAssignment::Mode::color)
        for (int v : cover.values)
            if (v < 1 || v > scheme.palette.size())
                throw ParameterError("cover color outside palette");

    SymbolMatrix t = instantiate(scheme.extension, cover);
    for (size_t i = 0; i < scheme.secrets.size(); ++i) {
        const SecretSlot& slot = scheme.secrets[i];
        const int sym = secret_symbols[i];
        if (sym < 1 || sym > slot.symbol_count)
            throw ParameterError("secret symbol " + std::to_string(sym) + " out of range for slot "
                                 + std::to_string(i + 1));
        t = concat(t, slot.variants[static_cast<size_t>(sym - 1)]);
    }
    return t;
}

std::string scheme_to_text(const SchemeBundle& scheme)
{
    std::ostringstream out;
    out << "vcscheme 1 " << mode_name(scheme.mode) << ' ' << scheme.id << '\n';
    out << scheme.k << ' ' << scheme.n << ' ' << scheme.secrets.size() << ' ' << scheme.m_e()
        << '\n';
    out << "palette " << scheme.palette.size() << '\n';
    if (scheme.palette.size() > 0)
        out << palette_to_text(scheme.palette);
    out << "extension\n" << extension_to_text(scheme.extension);
    if (scheme.is_mevcs()) {
        out << "sets\n";
        for (const SecretSlot& slot : scheme.secrets) {
            out << slot.members.size();
            for (int m : slot.members)
                out << ' ' << m;
            out << '\n';
        }
    }
    out << "basis\n";
    for (const SecretSlot& slot : scheme.secrets) {
        out << scheme.k << ' ' << scheme.n << ' ' << slot.symbol_count << ' ' << slot.width
            << '\n';
        for (const SymbolMatrix& v : slot.variants)
            out << matrix_to_text(v, slot.chromatic ? scheme.palette.size() : 0);
    }
    return out.str();
}

SchemeBundle scheme_from_stream(std::istream& in)
{
    std::string magic, mode;
    int version = 0;
    SchemeBundle scheme;
    if (!(in >> magic >> version >> mode >> scheme.id) || magic != "vcscheme")
        throw ParseError("scheme file must start with 'vcscheme <version> <mode> <id>'");
    if (version != 1)
        throw ParseError("unsupported scheme file version");
    scheme.mode = mode_from_name(mode);

    int s = 0, m_e = 0;
    if (!(in >> scheme.k >> scheme.n >> s >> m_e))
        throw ParseError("scheme header must be 'k n s m_E'");
    if (s < 1)
        throw ParseError("scheme needs at least one secret");

    std::string key;
    int colors = 0;
    if (!(in >> key >> colors) || key != "palette")
        throw ParseError("expected palette section");
    if (colors > 0)
        scheme.palette = palette_from_stream(in, colors);

    if (!(in >> key) || key != "extension")
        throw ParseError("expected extension section");
    scheme.extension = extension_from_stream(in);

    std::vector<std::vector<int>> sets(static_cast<size_t>(s));
    const bool mevcs = scheme.mode == SchemeMode::gray_mevcs
                       || scheme.mode == SchemeMode::color_mevcs;
    if (mevcs) {
        if (!(in >> key) || key != "sets")
            throw ParseError("expected sets section");
        for (auto& members : sets) {
            int p = 0;
            if (!(in >> p) || p < 1)
                throw ParseError("bad qualified set size");
            members.resize(static_cast<size_t>(p));
            for (int& m : members)
                if (!(in >> m))
                    throw ParseError("qualified set ended early");
        }
    }

    if (!(in >> key) || key != "basis")
        throw ParseError("expected basis section");
    const bool chromatic = scheme.mode == SchemeMode::color_evcs
                           || scheme.mode == SchemeMode::color_mevcs;
    for (int i = 0; i < s; ++i) {
        int bk = 0, bn = 0, variants = 0, width = 0;
        if (!(in >> bk >> bn >> variants >> width))
            throw ParseError("basis block header must be 'k n variants m'");
        if (bk != scheme.k || bn != scheme.n)
            throw ParseError("basis block parameters disagree with scheme header");
        SecretSlot slot;
        slot.members = sets[static_cast<size_t>(i)];
        slot.symbol_count = variants;
        slot.chromatic = chromatic;
        for (int v = 0; v < variants; ++v) {
            int palette = 0;
            SymbolMatrix matrix = matrix_from_stream(in, &palette);
            if (matrix.cols() != width)
                throw DimensionError("variant width disagrees with basis block header");
            slot.variants.push_back(matrix);
        }
        scheme.secrets.push_back(slot);
    }
    refresh_scheme(scheme);
    if (scheme.m_e() != m_e)
        throw ParseError("scheme header m_E disagrees with blocks");
    return scheme;
}

SchemeBundle read_scheme_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open scheme file: " + path);
    SchemeBundle scheme = scheme_from_stream(in);
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing content in scheme file: " + path);
    return scheme;
}

void write_scheme_file(const SchemeBundle& scheme, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write scheme file: " + path);
    out << scheme_to_text(scheme);
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace vcs
