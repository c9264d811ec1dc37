#include "vcs/basis.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace vcs {

namespace {

Cell bw(int bit) { return bit ? Cell::black() : Cell::white(); }

bool is_binary(const BasisMatrixSet& set)
{
    return set.palette_size == 0 && set.variants.size() == 2;
}

} // namespace

void refresh_metrics(BasisMatrixSet& set)
{
    if (set.variants.empty())
        throw ParameterError("basis set has no variants");
    if (set.k < 1 || set.k > set.n)
        throw ParameterError("basis set needs 1 <= k <= n");
    set.m = set.variants.front().cols();
    for (const SymbolMatrix& v : set.variants) {
        if (v.rows() != set.n)
            throw DimensionError("variant row count differs from n");
        if (v.cols() != set.m)
            throw DimensionError("variants have unequal width");
    }

    std::vector<int> rows(static_cast<size_t>(set.k));
    std::iota(rows.begin(), rows.end(), 0);

    if (set.palette_size == 0) {
        std::vector<int> weights;
        for (const SymbolMatrix& v : set.variants)
            weights.push_back(weight(stack_rows(v, rows)).nonwhite);
        set.d = weights.back();
        set.alpha_times_m = set.m;
        for (size_t i = 1; i < weights.size(); ++i)
            set.alpha_times_m = std::min(set.alpha_times_m, weights[i] - weights[i - 1]);
    } else {
        // variant i carries color i+1; d is its own-color count when any k
        // rows are stacked, the gap is d minus the best impostor count
        WeightReport own = weight(stack_rows(set.variants.front(), rows));
        auto count_of = [](const WeightReport& rep, int id) {
            auto it = rep.per_color.find(id);
            return it == rep.per_color.end() ? 0 : it->second;
        };
        set.d = count_of(own, 1);
        int impostor = 0;
        for (size_t i = 1; i < set.variants.size(); ++i)
            impostor = std::max(impostor,
                                count_of(weight(stack_rows(set.variants[i], rows)), 1));
        set.alpha_times_m = set.d - impostor;
    }
}

BasisMatrixSet naor_shamir_kk(int k)
{
    if (k < 1 || k > 20)
        throw ParameterError("naor_shamir_kk supports 1 <= k <= 20");
    const int m = 1 << (k - 1);
    SymbolMatrix even(k, m), odd(k, m);
    int ce = 0, co = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        const bool is_odd = std::popcount(mask) & 1;
        SymbolMatrix& target = is_odd ? odd : even;
        const int col = is_odd ? co++ : ce++;
        for (int r = 0; r < k; ++r)
            target.at(r, col) = bw((mask >> r) & 1);
    }
    BasisMatrixSet set{k, k, 0, {even, odd}, 0, 0, 0};
    refresh_metrics(set);
    return set;
}

BasisMatrixSet two_of_p(int p)
{
    if (p < 2)
        throw ParameterError("two_of_p needs p >= 2");
    SymbolMatrix s0(p, p, Cell::black()), s1(p, p, Cell::black());
    for (int r = 0; r < p; ++r) {
        s0.at(r, 0) = Cell::white();
        s1.at(r, r) = Cell::white();
    }
    BasisMatrixSet set{2, p, 0, {s0, s1}, 0, 0, 0};
    refresh_metrics(set);
    return set;
}

BasisMatrixSet builtin_basis(const std::string& name)
{
    if (name == "2-2") {
        SymbolMatrix s0({{Cell::black(), Cell::white()}, {Cell::black(), Cell::white()}});
        SymbolMatrix s1({{Cell::black(), Cell::white()}, {Cell::white(), Cell::black()}});
        BasisMatrixSet set{2, 2, 0, {s0, s1}, 0, 0, 0};
        refresh_metrics(set);
        return set;
    }
    if (name == "2-3")
        return two_of_p(3);
    throw ParameterError("unknown builtin basis '" + name + "'");
}

GrayLadder gray_ladder(const BasisMatrixSet& base, int g)
{
    if (!is_binary(base))
        throw ParameterError("gray_ladder needs a binary two-variant base");
    if (g < 2)
        throw ParameterError("gray_ladder needs g >= 2");
    GrayLadder ladder;
    ladder.levels = g;
    for (int level = 1; level <= g; ++level) {
        SymbolMatrix acc(base.n, 0);
        for (int i = 0; i < level - 1; ++i)
            acc = concat(acc, base.variants[1]);
        for (int i = 0; i < g - level; ++i)
            acc = concat(acc, base.variants[0]);
        ladder.matrices.push_back(acc);
    }
    return ladder;
}

BasisMatrixSet gray_ladder_set(const BasisMatrixSet& base, int g)
{
    GrayLadder ladder = gray_ladder(base, g);
    BasisMatrixSet set{base.k, base.n, 0, ladder.matrices, 0, 0, 0};
    refresh_metrics(set);
    return set;
}

BasisMatrixSet color_basis(int colors, const BasisMatrixSet& base)
{
    if (!is_binary(base))
        throw ParameterError("color_basis needs a binary two-variant base");
    if (colors < 1)
        throw ParameterError("color_basis needs at least one color");

    const SymbolMatrix& s0 = base.variants[0];
    const SymbolMatrix& s1 = base.variants[1];
    const int n = base.n;

    auto substituted = [n](const SymbolMatrix& src, int col, int color_id) {
        CellRow out(static_cast<size_t>(n));
        bool all_black = true;
        for (int r = 0; r < n; ++r) {
            Cell c = src.at(r, col).is_white() ? Cell::color(color_id) : Cell::black();
            all_black = all_black && c.is_black();
            out[static_cast<size_t>(r)] = c;
        }
        return std::pair{out, all_black};
    };

    BasisMatrixSet set{base.k, n, colors, {}, 0, 0, 0};
    for (int c = 1; c <= colors; ++c) {
        std::vector<CellRow> cols;
        for (int j = 0; j < s0.cols(); ++j) {
            auto [col, dead] = substituted(s0, j, c);
            if (!dead)
                cols.push_back(col);
        }
        for (int j = 0; j < s1.cols(); ++j)
            for (int other = 1; other <= colors; ++other) {
                if (other == c)
                    continue;
                auto [col, dead] = substituted(s1, j, other);
                if (!dead)
                    cols.push_back(col);
            }
        SymbolMatrix variant(n, static_cast<int>(cols.size()));
        for (int j = 0; j < variant.cols(); ++j)
            for (int r = 0; r < n; ++r)
                variant.at(r, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(r)];
        set.variants.push_back(variant);
    }
    refresh_metrics(set);
    return set;
}

BasisMatrixSet load_basis(std::istream& in)
{
    int k = 0, n = 0, variants = 0, m = 0;
    if (!(in >> k >> n >> variants >> m))
        throw ParseError("basis header must be 'k n variants m'");
    if (variants < 1)
        throw ParseError("basis set needs at least one variant");
    BasisMatrixSet set{k, n, 0, {}, 0, 0, 0};
    for (int i = 0; i < variants; ++i) {
        int palette = 0;
        SymbolMatrix v = matrix_from_stream(in, &palette);
        if (v.rows() != n)
            throw DimensionError("variant row count differs from header n");
        if (v.cols() != m)
            throw DimensionError("variants have unequal width");
        set.palette_size = std::max(set.palette_size, palette);
        set.variants.push_back(v);
    }
    refresh_metrics(set);
    return set;
}

BasisMatrixSet load_basis_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open basis file: " + path);
    BasisMatrixSet set = load_basis(in);
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing content in basis file: " + path);
    return set;
}

std::string basis_to_text(const BasisMatrixSet& set)
{
    std::ostringstream out;
    out << set.k << ' ' << set.n << ' ' << set.variants.size() << ' ' << set.m << '\n';
    for (const SymbolMatrix& v : set.variants)
        out << matrix_to_text(v, set.palette_size);
    return out.str();
}

void save_basis_file(const BasisMatrixSet& set, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write basis file: " + path);
    out << basis_to_text(set);
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace vcs
