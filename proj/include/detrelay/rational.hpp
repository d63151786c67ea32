#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace detrelay {

// Exact rational arithmetic; the region and rate machinery never touches
// floating point.
using Rat = boost::rational<long long>;

bool is_integral(const Rat& r);

// Least common multiple of the denominators (1 for the empty list).
long long common_denominator(const std::vector<Rat>& rs);

// "3", "-5/2"; denominator printed only when != 1.
std::string format_rat(const Rat& r);
std::string format_rats(const std::vector<Rat>& rs);

// Accepts "p", "-p" or "p/d" with d > 0. Returns nullopt on malformed input.
std::optional<Rat> parse_rat(std::string_view s);

}  // namespace detrelay
