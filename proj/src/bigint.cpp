#include "palintiple/bigint.hpp"

#include <stdexcept>

namespace palintiple {

Int mod_inverse(const Int& a, const Int& m) {
    // extended euclid on (a mod m, m)
    Int r0 = mod_floor(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_floor(s0, m);
}

bool solve_linear_congruence(const Int& a, const Int& c, const Int& m, Int& r, Int& q) {
    if (m <= 0) throw std::invalid_argument("solve_linear_congruence: modulus must be positive");
    Int aa = mod_floor(a, m), cc = mod_floor(c, m);
    if (aa == 0) {
        if (cc != 0) return false;
        r = 0; q = 1;
        return true;
    }
    Int g = gcd(aa, m);
    if (cc % g != 0) return false;
    q = m / g;
    r = mod_floor((cc / g) * mod_inverse(aa / g, q), q);
    return true;
}

bool crt_intersect(const Int& r1, const Int& m1, const Int& r2, const Int& m2, Int& r, Int& m) {
    Int g = gcd(m1, m2);
    Int diff = r2 - r1;
    if (diff % g != 0) return false;
    Int lcm12 = m1 / g * m2;
    // r = r1 + m1 * t with t = (diff/g) * inv(m1/g) mod (m2/g)
    Int t = mod_floor((diff / g) * mod_inverse(m1 / g, m2 / g), m2 / g);
    r = mod_floor(r1 + m1 * t, lcm12);
    m = lcm12;
    return true;
}

std::vector<std::int64_t> digits_of(std::uint64_t value, std::int64_t base) {
    std::vector<std::int64_t> d;
    if (value == 0) return {0};
    while (value > 0) {
        d.push_back(static_cast<std::int64_t>(value % static_cast<std::uint64_t>(base)));
        value /= static_cast<std::uint64_t>(base);
    }
    return d;
}

Int value_of_digits_msf(const std::vector<Int>& digits_msf, const Int& base) {
    Int v = 0;
    for (const Int& d : digits_msf) v = v * base + d;
    return v;
}

} // namespace palintiple
