#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <optional>
#include <string>

namespace eisen {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced, denominator > 0.
/// boost::rational keeps both invariants; no floating point anywhere.
using Rat = boost::rational<Int>;

inline Rat rat(long num, long den = 1) { return Rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// Parses "p", "-p" or "p/q" with q > 0. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

} // namespace eisen
