#pragma once

#include <string>

#include "eisen/rational.hpp"

namespace eisen {

/// Univariate affine form c0 + c1 * x in a single symbol (s or s0, by context).
struct LinearForm {
    Rat constant{Int(0), Int(1)};
    Rat slope{Int(0), Int(1)};

    Rat eval(const Rat& x) const { return constant + slope * x; }
    bool is_constant() const { return slope == Rat(Int(0), Int(1)); }

    LinearForm operator+(const LinearForm& o) const { return {constant + o.constant, slope + o.slope}; }
    LinearForm operator-(const LinearForm& o) const { return {constant - o.constant, slope - o.slope}; }
    LinearForm operator+(const Rat& c) const { return {constant + c, slope}; }

    bool operator==(const LinearForm&) const = default;
    bool operator<(const LinearForm& o) const {
        if (slope != o.slope) return slope < o.slope;
        return constant < o.constant;
    }
};

inline LinearForm form(const Rat& constant, const Rat& slope) { return {constant, slope}; }

/// Renders e.g. "2s", "2s+1", "s0-3/2", "1/2".
std::string to_string(const LinearForm& f, const std::string& symbol = "s");

} // namespace eisen
