#pragma once

#include <stdexcept>
#include <string>

namespace stein {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operator does not have the required shape (wrong monomial pattern, non-affine
// coefficients, non-diagonal terms, ...).
struct shape_error : error {
    using error::error;
};

// Input is outside the supported fragment; message names the blocking construct.
struct unsupported_error : error {
    using error::error;
};

struct invalid_parameter : error {
    using error::error;
};

struct not_assumption_one : shape_error {
    using shape_error::shape_error;
};

// Exactly one diagonal band: no genuine M^q separation exists.
struct degenerate_operator : shape_error {
    using shape_error::shape_error;
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct moment_unavailable : error {
    moment_unavailable(const std::string& what, long index_)
        : error(what), index(index_) {}
    long index;
};

struct recurrence_breakdown : error {
    recurrence_breakdown(long k_)
        : error("moment recurrence breakdown: leading coefficient vanishes at k = " +
                std::to_string(k_)),
          k(k_) {}
    long k;
};

} // namespace stein
