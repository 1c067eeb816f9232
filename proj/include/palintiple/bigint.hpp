#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace palintiple {

using Int = boost::multiprecision::cpp_int;

// floor division; boost's / truncates toward zero like the builtins
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// least non-negative residue
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// modular inverse of a mod m, for gcd(a,m)=1, m>=1; extended euclid
Int mod_inverse(const Int& a, const Int& m);

// Solves a*x = c (mod m) for m >= 1. Returns true and the full solution set
// x = r (mod q) on success; false when gcd(a,m) does not divide c.
bool solve_linear_congruence(const Int& a, const Int& c, const Int& m, Int& r, Int& q);

// Intersects x = r1 (mod m1) with x = r2 (mod m2). Returns false if disjoint.
bool crt_intersect(const Int& r1, const Int& m1, const Int& r2, const Int& m2, Int& r, Int& m);

// int64 digit expansion helpers used by the fast enumeration paths
std::vector<std::int64_t> digits_of(std::uint64_t value, std::int64_t base);
Int value_of_digits_msf(const std::vector<Int>& digits_msf, const Int& base);

} // namespace palintiple
