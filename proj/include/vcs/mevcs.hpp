#pragma once

#include <array>
#include <string>
#include <vector>

#include "vcs/scheme.hpp"

namespace vcs {

// All subsets of {1..n} of size k through n, ordered by size then
// lexicographically. Their count is s = sum of C(n,l) for l in [k, n].
std::vector<std::vector<int>> enumerate_qualified(int k, int n);

// Spread the rows of b over an n-row matrix: row i of b lands on row
// members[i]; every other row is all Black so it blots out the stack of any
// superset and contributes a constant to every other reconstruction.
SymbolMatrix embed(const SymbolMatrix& b, const std::vector<int>& members, int n);

// One gray secret per qualified set. Set i of size p gets a gray ladder over
// the (p,p) parity pair, so its width is (secret_levels[i]-1) * 2^(p-1);
// binary secrets are the levels-2 case. Covers take cover_levels[j] grays.
SchemeBundle build_mevcs(int k, int n, const std::vector<int>& secret_levels,
                         const std::vector<int>& cover_levels, const std::string& id = "");

// One c-colored secret per qualified set, each set using color variants over
// the any-2-of-p pair; only k = 2 keeps forbidden single shares blind here,
// larger k needs hand-supplied basis matrices.
SchemeBundle build_color_mevcs(int k, int n, int colors, const Palette& palette,
                               const std::string& id = "");

// The hand-built reference three-color (2,3) scheme with four secrets; its
// basis matrices are fixed verbatim (m_E = 25, every alpha 1/25).
SchemeBundle reference_color_mevcs_23(const Palette& palette, const std::string& id = "");

struct ChannelSchemes {
    std::array<SchemeBundle, 3> channel; // red, green, blue
    int m_e_total = 0;
    std::vector<Ratio> alpha_star; // per secret: summed gaps over summed m_E
};

// Per-channel gray decomposition of a full-color carrier: each additive
// channel runs its own gray scheme; widths add up, contrasts average.
ChannelSchemes build_mevcs_channels(int k, int n,
                                    const std::array<std::vector<int>, 3>& channel_secret_levels,
                                    const std::array<std::vector<int>, 3>& channel_cover_levels);

} // namespace vcs
