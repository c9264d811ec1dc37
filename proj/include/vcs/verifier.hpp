#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcs/scheme.hpp"

namespace vcs {

// One machine check with a stable label and a human readable detail string.
struct CheckLine {
    bool pass = false;
    std::string label;
    std::string detail;
};

struct SecurityOptions {
    // Cover assignments per row subset are enumerated exhaustively up to this
    // many; beyond it a seeded sample is drawn instead.
    long long cover_cap = 4096;
    int sample_count = 256;
    bool allow_sampling = true;
    std::uint64_t sample_seed = 1;
};

struct OracleOptions {
    // Widest pixel matrix the arrangement enumeration will accept.
    int max_m = 10;
    SecurityOptions covers;
};

struct AuditOptions {
    SecurityOptions security;
    bool with_oracle = false;
    OracleOptions oracle;
};

struct AuditReport {
    std::vector<CheckLine> formulas;
    std::vector<CheckLine> contrast;
    std::vector<CheckLine> security;
    std::vector<CheckLine> oracle;

    bool pass() const;
    std::string text() const;
};

// Qualified stacks must tell symbols apart. For every slot and every
// qualified row set, with the other slots frozen at each of their symbol
// combinations: gray ladders must strictly darken level by level, and color
// variants must show their own color strictly more often than any rival
// variant shows it. One line per (slot, row set).
std::vector<CheckLine> check_contrast(const SchemeBundle& scheme);

// Forbidden stacks must reveal nothing. For every row subset smaller than k
// and every cover assignment on those rows, the restricted pixel matrix
// columns must form the same multiset for every symbol tuple. One line per
// subset.
std::vector<CheckLine> check_security(const SchemeBundle& scheme,
                                      const SecurityOptions& options = {});

// Structural identities: star counts per row and column, the extension width
// ceiling, the total width split, and each slot's contrast fraction.
std::vector<CheckLine> check_formulas(const SchemeBundle& scheme);

// Independent security re-derivation. Enumerates every distinct arrangement
// of the restricted columns and compares the full arrangement distributions
// between symbol tuples; each arrangement occurs with constant multiplicity,
// so two tuples agree exactly when their arrangement lists coincide. Guards:
// the width must stay within max_m and at most sixteen distinct restricted
// columns may appear per subset.
std::vector<CheckLine> brute_force_oracle(const SchemeBundle& scheme,
                                          const OracleOptions& options = {});

AuditReport audit(const SchemeBundle& scheme, const AuditOptions& options = {});

} // namespace vcs
