#pragma once

// Exact scalar types used everywhere: arbitrary-precision integers and
// rationals. No floating point enters any computation in this library.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukailat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Floor division (rounds toward negative infinity), b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// a mod b normalized into [0, |b|).
inline Int pos_mod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += boost::multiprecision::abs(b);
    return r;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Largest integer s >= 0 with s*s <= r. Requires r >= 0.
inline Int floor_sqrt(const Rat& r) {
    if (r < 0) throw std::domain_error("floor_sqrt of negative value");
    // isqrt(floor(r)) is exact: s^2 <= floor(r) <= r and (s+1)^2 > floor(r)
    // implies (s+1)^2 >= floor(r)+1 > r.
    return boost::multiprecision::sqrt(rat_floor(r));
}

/// "p/q" in lowest terms with q > 0; plain "p" when q == 1.
inline std::string rat_to_string(const Rat& r) {
    const Int q = rat_den(r);
    if (q == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + q.str();
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

}  // namespace mukailat
