#pragma once

#include <string>
#include <string_view>

#include "msvf/compact_set.hpp"

namespace msvf {

/// Textual set literal: `[lo,hi] u {p1,p2} u ...` with `u` as union.
/// parse_set_literal and print_set_literal round-trip: parse(print(s)) == s.
CompactSet parse_set_literal(std::string_view text);

/// Canonical printer: degenerate intervals as {p}, proper ones as [lo,hi],
/// joined by " u ". Numbers use shortest round-trip formatting.
std::string print_set_literal(const CompactSet& s);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

} // namespace msvf
