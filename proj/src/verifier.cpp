#include "vcs/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vcs/rng.hpp"

namespace vcs {

namespace {

std::string rows_text(const std::vector<int>& rows)
{
    std::string out = "{";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i != 0)
            out += ",";
        out += std::to_string(rows[i] + 1);
    }
    return out + "}";
}

std::vector<std::vector<int>> subsets_of_size(int n, int q)
{
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick(static_cast<size_t>(q));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        subsets.push_back(pick);
        int i = q - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - q + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < q; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return subsets;
}

// Mixed-radix counter; returns false once every combination has been seen.
bool advance_odometer(std::vector<int>& idx, const std::vector<int>& sizes)
{
    for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < sizes[i])
            return true;
        idx[i] = 0;
    }
    return false;
}

int color_count(const WeightReport& report, int color)
{
    const auto it = report.per_color.find(color);
    return it == report.per_color.end() ? 0 : it->second;
}

std::vector<CellRow> restricted_columns(const SymbolMatrix& t, const std::vector<int>& rows)
{
    std::vector<CellRow> cols(static_cast<size_t>(t.cols()));
    for (int c = 0; c < t.cols(); ++c) {
        cols[static_cast<size_t>(c)].reserve(rows.size());
        for (int r : rows)
            cols[static_cast<size_t>(c)].push_back(t.at(r, c));
    }
    return cols;
}

std::vector<int> symbol_sizes(const SchemeBundle& scheme, const char* who)
{
    std::vector<int> sizes;
    long long tuples = 1;
    for (const SecretSlot& slot : scheme.secrets) {
        sizes.push_back(slot.symbol_count);
        tuples *= slot.symbol_count;
        if (tuples > 4096)
            throw ResourceError(std::string(who) + " needs more than 4096 symbol tuples");
    }
    return sizes;
}

// Cover assignments restricted to the given rows; rows outside stay at 1.
struct CoverSpace {
    std::vector<int> rows;
    std::vector<int> sizes;
    long long total = 1;
    bool sampled = false;
    long long count = 0;
};

CoverSpace cover_space(const SchemeBundle& scheme, const std::vector<int>& rows,
                       const SecurityOptions& options, const char* who)
{
    CoverSpace space;
    space.rows = rows;
    for (int r : rows) {
        space.sizes.push_back(scheme.color_covers() ? scheme.palette.size()
                                                    : scheme.extension.level(r));
        if (space.total <= options.cover_cap)
            space.total *= space.sizes.back();
    }
    space.sampled = space.total > options.cover_cap;
    if (space.sampled && !options.allow_sampling)
        throw ResourceError(std::string(who) + ": rows " + rows_text(rows) + " admit more than "
                            + std::to_string(options.cover_cap)
                            + " cover assignments and sampling is disabled");
    space.count = space.sampled ? options.sample_count : space.total;
    return space;
}

// Yields cover value vectors (length n, rows outside the subset pinned to 1).
class CoverIterator {
public:
    CoverIterator(const SchemeBundle& scheme, const CoverSpace& space, Splitmix64& rng)
        : space_(space), rng_(rng), values_(static_cast<size_t>(scheme.n), 1),
          odo_(space.rows.size(), 0)
    {
    }

    bool next(std::vector<int>& out)
    {
        if (emitted_ == space_.count)
            return false;
        if (space_.sampled) {
            for (size_t i = 0; i < space_.rows.size(); ++i)
                values_[static_cast<size_t>(space_.rows[i])] =
                    1 + static_cast<int>(rng_.bounded(static_cast<std::uint64_t>(space_.sizes[i])));
        } else {
            for (size_t i = 0; i < space_.rows.size(); ++i)
                values_[static_cast<size_t>(space_.rows[i])] = odo_[i] + 1;
            advance_odometer(odo_, space_.sizes);
        }
        ++emitted_;
        out = values_;
        return true;
    }

private:
    const CoverSpace& space_;
    Splitmix64& rng_;
    std::vector<int> values_;
    std::vector<int> odo_;
    long long emitted_ = 0;
};

unsigned long long run_factorial(int n)
{
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<unsigned long long>(i);
    return f;
}

// Every distinct left-to-right arrangement of the restricted columns, packed
// four bits per column id, plus the constant multiplicity each one carries.
struct Arrangements {
    std::vector<std::uint64_t> orderings;
    unsigned long long stab = 1;
};

Arrangements enumerate_arrangements(std::vector<int> ids)
{
    std::sort(ids.begin(), ids.end());
    Arrangements out;
    for (size_t i = 0; i < ids.size();) {
        size_t j = i;
        while (j < ids.size() && ids[j] == ids[i])
            ++j;
        out.stab *= run_factorial(static_cast<int>(j - i));
        i = j;
    }
    do {
        std::uint64_t key = 0;
        for (int id : ids)
            key = key << 4 | static_cast<std::uint64_t>(id);
        out.orderings.push_back(key);
    } while (std::next_permutation(ids.begin(), ids.end()));
    return out;
}

} // namespace

std::vector<CheckLine> check_contrast(const SchemeBundle& scheme)
{
    std::vector<CheckLine> lines;
    const int m_e = scheme.m_e();
    const std::vector<int> cover(static_cast<size_t>(scheme.n), 1);
    for (size_t si = 0; si < scheme.secrets.size(); ++si) {
        const SecretSlot& slot = scheme.secrets[si];
        std::vector<int> other_sizes;
        std::vector<size_t> other_slots;
        long long combos = 1;
        for (size_t sj = 0; sj < scheme.secrets.size(); ++sj)
            if (sj != si) {
                other_sizes.push_back(scheme.secrets[sj].symbol_count);
                other_slots.push_back(sj);
                combos *= scheme.secrets[sj].symbol_count;
                if (combos > 4096)
                    throw ResourceError(
                        "contrast check needs more than 4096 frozen symbol combinations");
            }
        for (const std::vector<int>& rows : scheme.qualified_rows(si)) {
            int worst_gap = m_e;
            long long combo_count = 0;
            std::vector<int> odo(other_sizes.size(), 0);
            std::vector<int> symbols(scheme.secrets.size(), 1);
            do {
                ++combo_count;
                for (size_t j = 0; j < other_slots.size(); ++j)
                    symbols[other_slots[j]] = odo[j] + 1;
                if (!slot.chromatic) {
                    int prev = 0;
                    for (int sym = 1; sym <= slot.symbol_count; ++sym) {
                        symbols[si] = sym;
                        const SymbolMatrix t = pixel_matrix(scheme, symbols, cover);
                        const int w = weight(stack_rows(t, rows)).nonwhite;
                        if (sym > 1)
                            worst_gap = std::min(worst_gap, w - prev);
                        prev = w;
                    }
                } else {
                    std::vector<WeightReport> reports;
                    for (int sym = 1; sym <= slot.symbol_count; ++sym) {
                        symbols[si] = sym;
                        const SymbolMatrix t = pixel_matrix(scheme, symbols, cover);
                        reports.push_back(weight(stack_rows(t, rows)));
                    }
                    for (int c = 1; c <= slot.symbol_count; ++c)
                        for (int o = 1; o <= slot.symbol_count; ++o)
                            if (o != c)
                                worst_gap = std::min(
                                    worst_gap,
                                    color_count(reports[static_cast<size_t>(c - 1)], c)
                                        - color_count(reports[static_cast<size_t>(o - 1)], c));
                }
            } while (advance_odometer(odo, other_sizes));
            CheckLine line;
            line.pass = worst_gap >= 1;
            line.label = "contrast slot=" + std::to_string(si + 1) + " rows=" + rows_text(rows);
            line.detail = "gap=" + std::to_string(worst_gap) + " width=" + std::to_string(m_e)
                          + " alpha=" + ratio_text(reduced_ratio(worst_gap, m_e))
                          + " combos=" + std::to_string(combo_count);
            lines.push_back(line);
        }
    }
    return lines;
}

std::vector<CheckLine> check_security(const SchemeBundle& scheme, const SecurityOptions& options)
{
    std::vector<CheckLine> lines;
    const std::vector<int> sym_sizes = symbol_sizes(scheme, "security check");
    Splitmix64 sample_rng(options.sample_seed);
    for (int q = 1; q < scheme.k; ++q)
        for (const std::vector<int>& rows : subsets_of_size(scheme.n, q)) {
            const CoverSpace space = cover_space(scheme, rows, options, "security check");
            CoverIterator covers(scheme, space, sample_rng);
            long long mismatches = 0, tuple_count = 0;
            std::vector<int> cover;
            while (covers.next(cover)) {
                std::vector<std::vector<CellRow>> reference;
                std::vector<int> odo(sym_sizes.size(), 0);
                std::vector<int> symbols(sym_sizes.size());
                tuple_count = 0;
                do {
                    ++tuple_count;
                    for (size_t i = 0; i < odo.size(); ++i)
                        symbols[i] = odo[i] + 1;
                    std::vector<CellRow> cols =
                        restricted_columns(pixel_matrix(scheme, symbols, cover), rows);
                    std::sort(cols.begin(), cols.end());
                    if (reference.empty())
                        reference.push_back(std::move(cols));
                    else if (cols != reference.front())
                        ++mismatches;
                } while (advance_odometer(odo, sym_sizes));
            }
            CheckLine line;
            line.pass = mismatches == 0;
            line.label = "security q=" + std::to_string(q) + " rows=" + rows_text(rows);
            line.detail = "covers=" + std::to_string(space.count)
                          + (space.sampled ? " sampled" : "")
                          + " tuples=" + std::to_string(tuple_count)
                          + " mismatches=" + std::to_string(mismatches);
            lines.push_back(line);
        }
    return lines;
}

std::vector<CheckLine> check_formulas(const SchemeBundle& scheme)
{
    std::vector<CheckLine> lines;
    const StarCollection& ext = scheme.extension;

    int worst_column = 0;
    std::vector<int> per_column(static_cast<size_t>(ext.n_cols), 0);
    for (int r = 0; r < ext.n_rows; ++r)
        for (int c : ext.stars[static_cast<size_t>(r)])
            worst_column = std::max(worst_column, ++per_column[static_cast<size_t>(c)]);
    lines.push_back({worst_column <= scheme.k - 1, "formula star-column-cap",
                     "max=" + std::to_string(worst_column) + " cap=" + std::to_string(scheme.k - 1)});

    int star_total = 0;
    for (int r = 0; r < ext.n_rows; ++r)
        star_total += ext.level(r) - 1;
    const int optimal = (star_total + scheme.k - 2) / (scheme.k - 1);
    lines.push_back({ext.n_cols == optimal, "formula extension-width",
                     "m0=" + std::to_string(ext.n_cols) + " optimal=" + std::to_string(optimal)});

    std::string split = std::to_string(scheme.m0());
    for (const SecretSlot& slot : scheme.secrets)
        split += "+" + std::to_string(slot.width);
    lines.push_back({scheme.m_e() == scheme.m0() + scheme.basis_width(), "formula width-split",
                     "m_E=" + std::to_string(scheme.m_e()) + " parts=" + split});

    if (scheme.is_mevcs()) {
        std::vector<std::vector<int>> sets;
        for (const SecretSlot& slot : scheme.secrets)
            sets.push_back(slot.members);
        std::sort(sets.begin(), sets.end());
        const bool distinct = std::adjacent_find(sets.begin(), sets.end()) == sets.end();
        lines.push_back({distinct, "formula qualified-sets-distinct",
                         "sets=" + std::to_string(sets.size())});
    }

    for (size_t si = 0; si < scheme.secrets.size(); ++si) {
        const SecretSlot& slot = scheme.secrets[si];
        lines.push_back({slot.gap >= 1, "formula alpha slot=" + std::to_string(si + 1),
                         "gap=" + std::to_string(slot.gap)
                             + " alpha=" + ratio_text(scheme.alpha(si))});
    }
    return lines;
}

std::vector<CheckLine> brute_force_oracle(const SchemeBundle& scheme, const OracleOptions& options)
{
    const int m_e = scheme.m_e();
    if (m_e > options.max_m)
        throw ResourceError("arrangement enumeration accepts width up to "
                            + std::to_string(options.max_m) + ", scheme needs "
                            + std::to_string(m_e));
    if (m_e > 16)
        throw ResourceError("arrangement keys pack at most 16 columns");

    std::vector<CheckLine> lines;
    const std::vector<int> sym_sizes = symbol_sizes(scheme, "arrangement oracle");
    const unsigned long long full = run_factorial(m_e);
    Splitmix64 sample_rng(options.covers.sample_seed);
    for (int q = 1; q < scheme.k; ++q)
        for (const std::vector<int>& rows : subsets_of_size(scheme.n, q)) {
            const CoverSpace space = cover_space(scheme, rows, options.covers,
                                                 "arrangement oracle");
            CoverIterator covers(scheme, space, sample_rng);
            long long mismatches = 0, tuple_count = 0;
            size_t arrangement_count = 0;
            bool counts_ok = true;
            std::vector<int> cover;
            while (covers.next(cover)) {
                // shared id dictionary keeps arrangement keys comparable
                // between the symbol tuples of this cover assignment
                std::vector<CellRow> dictionary;
                std::vector<std::vector<int>> tuple_ids;
                std::vector<int> odo(sym_sizes.size(), 0);
                std::vector<int> symbols(sym_sizes.size());
                tuple_count = 0;
                do {
                    ++tuple_count;
                    for (size_t i = 0; i < odo.size(); ++i)
                        symbols[i] = odo[i] + 1;
                    const std::vector<CellRow> cols =
                        restricted_columns(pixel_matrix(scheme, symbols, cover), rows);
                    std::vector<int> ids;
                    for (const CellRow& col : cols) {
                        const auto it = std::find(dictionary.begin(), dictionary.end(), col);
                        if (it == dictionary.end()) {
                            dictionary.push_back(col);
                            ids.push_back(static_cast<int>(dictionary.size()) - 1);
                        } else {
                            ids.push_back(static_cast<int>(it - dictionary.begin()));
                        }
                    }
                    tuple_ids.push_back(std::move(ids));
                } while (advance_odometer(odo, sym_sizes));
                if (dictionary.size() > 16)
                    throw ResourceError("arrangement oracle met more than 16 distinct columns");

                Arrangements reference;
                for (size_t t = 0; t < tuple_ids.size(); ++t) {
                    Arrangements current = enumerate_arrangements(tuple_ids[t]);
                    counts_ok = counts_ok
                                && current.orderings.size() * current.stab == full;
                    if (t == 0) {
                        reference = std::move(current);
                        arrangement_count = reference.orderings.size();
                    } else if (current.stab != reference.stab
                               || current.orderings != reference.orderings) {
                        ++mismatches;
                    }
                }
            }
            CheckLine line;
            line.pass = mismatches == 0 && counts_ok;
            line.label = "oracle q=" + std::to_string(q) + " rows=" + rows_text(rows);
            line.detail = "covers=" + std::to_string(space.count)
                          + (space.sampled ? " sampled" : "")
                          + " tuples=" + std::to_string(tuple_count)
                          + " arrangements=" + std::to_string(arrangement_count)
                          + " mismatches=" + std::to_string(mismatches);
            lines.push_back(line);
        }
    return lines;
}

bool AuditReport::pass() const
{
    const auto ok = [](const std::vector<CheckLine>& lines) {
        return std::all_of(lines.begin(), lines.end(),
                           [](const CheckLine& l) { return l.pass; });
    };
    return ok(formulas) && ok(contrast) && ok(security) && ok(oracle);
}

std::string AuditReport::text() const
{
    std::ostringstream out;
    const auto dump = [&out](const std::vector<CheckLine>& lines) {
        for (const CheckLine& line : lines) {
            out << (line.pass ? "ok   " : "FAIL ") << line.label;
            if (!line.detail.empty())
                out << ' ' << line.detail;
            out << '\n';
        }
    };
    dump(formulas);
    dump(contrast);
    dump(security);
    dump(oracle);
    out << "verdict: " << (pass() ? "pass" : "fail") << '\n';
    return out.str();
}

AuditReport audit(const SchemeBundle& scheme, const AuditOptions& options)
{
    AuditReport report;
    report.formulas = check_formulas(scheme);
    report.contrast = check_contrast(scheme);
    report.security = check_security(scheme, options.security);
    if (options.with_oracle)
        report.oracle = brute_force_oracle(scheme, options.oracle);
    return report;
}

} // namespace vcs
