#pragma once

#include <stdexcept>
#include <string>

namespace vcs {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched shapes: ragged rows, concat with different row counts, images
// whose dimensions disagree, and similar.
struct DimensionError : Error {
    using Error::Error;
};

// Malformed text input (matrix files, scheme files, PGM/PPM, config).
struct ParseError : Error {
    using Error::Error;
};

// Arguments outside a function's documented domain: bad k/n, unknown builtin
// name, symbol out of range, non-bijective permutation.
struct ParameterError : Error {
    using Error::Error;
};

// Filesystem trouble: missing file, unwritable path.
struct IoError : Error {
    using Error::Error;
};

// A check would exceed its configured budget (e.g. cover space too large
// with sampling disabled, oracle width above max_m).
struct ResourceError : Error {
    using Error::Error;
};

} // namespace vcs
