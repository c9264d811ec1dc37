#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vcs/basis.hpp"
#include "vcs/extension.hpp"
#include "vcs/palette.hpp"

namespace vcs {

enum class SchemeMode { binary_evcs, gray_evcs, color_evcs, gray_mevcs, color_mevcs };

std::string mode_name(SchemeMode mode);
SchemeMode mode_from_name(const std::string& name);

// One secret image of a scheme. members lists the participants (1-based)
// whose stack reveals it; an empty list means any k of the n participants,
// as in single-secret schemes. gap and d describe the basis part alone:
// stacking the qualified rows of variant v yields counts that exceed those
// of variant v-1 by gap, topping out at d for the last variant (for color
// slots the counts are of the variant's own palette color).
struct SecretSlot {
    std::vector<int> members;
    int symbol_count = 0;
    bool chromatic = false;
    std::vector<SymbolMatrix> variants; // n rows each, common width
    int width = 0;
    int gap = 0;
    int d = 0;
};

struct Ratio {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Ratio&, const Ratio&) = default;
};
Ratio reduced_ratio(long long num, long long den);
std::string ratio_text(const Ratio& r);

// A complete scheme: cover extension plus one slot per secret. The pixel
// matrix for given secret symbols and covers is the instantiated extension
// concatenated with each slot's chosen variant, in slot order.
struct SchemeBundle {
    std::string id;
    SchemeMode mode = SchemeMode::binary_evcs;
    int k = 0;
    int n = 0;
    Palette palette; // empty for binary and gray schemes
    StarCollection extension;
    std::vector<SecretSlot> secrets;

    int m0() const { return extension.n_cols; }
    int basis_width() const;
    int m_e() const { return m0() + basis_width(); }
    bool is_mevcs() const
    {
        return mode == SchemeMode::gray_mevcs || mode == SchemeMode::color_mevcs;
    }
    bool color_covers() const
    {
        return mode == SchemeMode::color_evcs || mode == SchemeMode::color_mevcs;
    }
    Ratio alpha(size_t slot) const; // gap over m_e, reduced

    // Resolved qualified subsets, 0-based row indexes: each slot's members,
    // or every k-subset of n rows for threshold slots.
    std::vector<std::vector<int>> qualified_rows(size_t slot) const;
};

// Structural validation plus slot metric recomputation; throws on rule
// violations (shape mismatches, star overflow, symbol counts below 2, ...).
void refresh_scheme(SchemeBundle& scheme);

SchemeBundle make_binary_evcs(const BasisMatrixSet& basis, const std::string& id = "");
SchemeBundle make_gray_evcs(const BasisMatrixSet& binary_base, int g,
                            const std::vector<int>& cover_levels, const std::string& id = "");
SchemeBundle make_color_evcs(const BasisMatrixSet& binary_base, int colors,
                             const Palette& palette, const std::string& id = "");

// Pre-permutation matrix for one pixel.
SymbolMatrix pixel_matrix(const SchemeBundle& scheme, std::span<const int> secret_symbols,
                          std::span<const int> cover_values);

// Scheme file: a "vcscheme 1 <mode> <id>" line, a "k n s m_E" line, the
// palette, the extension block, the qualified-set list for multi-secret
// schemes, then one basis-set block per secret.
std::string scheme_to_text(const SchemeBundle& scheme);
SchemeBundle scheme_from_stream(std::istream& in);
SchemeBundle read_scheme_file(const std::string& path);
void write_scheme_file(const SchemeBundle& scheme, const std::string& path);

} // namespace vcs
