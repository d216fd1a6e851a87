#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace biell {

/// Exact arbitrary-precision integer used throughout the lattice core.
/// Generator words of modest length already push matrix entries past any
/// fixed-width type, so every coordinate, pairing and matrix entry is an Int.
using Int = boost::multiprecision::cpp_int;

/// Nonnegative gcd; gcd(0, 0) == 0.
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Extended Euclid: g = gcd(a, b) >= 0 with a*u + b*v == g.
struct Xgcd {
  Int g, u, v;
};

Xgcd xgcd(Int a, Int b);

/// Floor division (round toward negative infinity). b must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Least nonnegative residue of a modulo |m|. m must be nonzero.
Int mod_floor(const Int& a, const Int& m);

}  // namespace biell
