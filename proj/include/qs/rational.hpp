#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qs {

// Exact arithmetic everywhere; no floating point in any decision path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical form: reduced, denominator > 0, integers printed without "/1".
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with optional sign; q == 0 rejected.
Rat parse_rat(const std::string& s);

bool is_integer(const Rat& r);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

} // namespace qs
