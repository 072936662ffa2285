#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <vector>

namespace dsplice {

// All lattice and Seifert arithmetic is exact. Floating point appears only in
// enumeration-order heuristics, never in accept/reject decisions.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Floor division a/b for b > 0 (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max();
}

long long to_int64(const Int& v);  // throws Overflow if out of range

std::string to_string(const Int& v);

}  // namespace dsplice
