#pragma once

#include <complex>
#include <string>
#include <vector>

#include "palintiple/instance.hpp"

namespace palintiple {

// Dense integer polynomial, coefficient index = degree, no stored leading
// zeros (the zero polynomial keeps an empty vector). All arithmetic is exact.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(const Int& c);
    static IntPolynomial linear(const Int& c0, const Int& c1); // c0 + c1 x

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Int eval(const Int& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    // fails with non_integral when the division leaves a remainder
    Result<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    std::string str() const; // "3x^2-27x-30"

private:
    std::vector<Int> c_;
};

//   pal     = sum (d_j - n d_{k-j}) x^j     always divisible by (x - b)
//   digit   = sum d_j x^j
//   rdigit  = sum d_{k-j} x^j
//   carry   = sum_{j=1..k} c_j x^{j-1}      so pal = (x - b) * carry
struct PalinomialSet {
    IntPolynomial pal;
    IntPolynomial digit;
    IntPolynomial rdigit;
    IntPolynomial carry;
};

PalinomialSet build_polynomials(const PalintipleInstance& p);

// Every identity is checked as an exact cross-multiplied polynomial equation.
// linear_factor:      pal = (x-b) carry,                any valid instance
// digit_poly_1089:    (n-1)(x-b) digit = (d_k x^2 - x + d_0) pal  and the
//                     reverse twin with (d_0 x^2 - x + d_k) rdigit,
//                     symmetric source with (n+1) | b
// digit_poly_shifted: c_k (x-b) digit = (d_k x + d_0) pal and twin,
//                     shifted-symmetric source
// derived_forward:    (x-bhat) digit(p) = palhat, phat's carries being p's
//                     digits under a forward mode; stated cross-multiplied
//                     against pal through the class factor of p
// derived_rho:        same with the reversed factors
// two_families_linear: (x - b2) pal1 = (x - b1) pal2 for two instances with
//                     identical carry sequences
enum class IdentityKind {
    linear_factor,
    digit_poly_1089,
    digit_poly_shifted,
    derived_forward,
    derived_rho,
    two_families_linear,
};

const char* identity_name(IdentityKind k);
Result<IdentityKind> parse_identity(const std::string& s);

struct IdentityReport {
    bool pass = false;
    IntPolynomial residual; // zero on pass; first failing difference otherwise
    std::string detail;     // which equation, and the twin when checked
};

// phat is required for the derived and two-family kinds, ignored otherwise.
Result<IdentityReport> check_identity(IdentityKind kind, const PalintipleInstance& p,
                                      const PalintipleInstance* phat = nullptr);

// Simultaneous-iteration (Durand-Kerner) root finder. Deterministic for a
// fixed seed; roots sorted by (re, im). no_convergence after 10000 sweeps.
Result<std::vector<std::complex<double>>> find_roots(const IntPolynomial& q,
                                                     unsigned seed = 12345);

struct RootCheck {
    bool pass = false;
    std::complex<double> witness{}; // root closest to the unit circle
    std::vector<std::complex<double>> roots;
};

// Passes iff some root xi has ||xi| - 1| <= tol.
Result<RootCheck> unit_circle_root_check(const IntPolynomial& q, double tol = 1e-6,
                                         unsigned seed = 12345);

} // namespace palintiple
