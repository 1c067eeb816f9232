#include "palintiple/palinomial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace palintiple {

namespace {

void trim(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(c_); }

IntPolynomial IntPolynomial::constant(const Int& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::linear(const Int& c0, const Int& c1) {
    return IntPolynomial({c0, c1});
}

Int IntPolynomial::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

Result<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) return Error{errc::bad_argument, "division by the zero polynomial"};
    if (is_zero()) return IntPolynomial{};
    if (c_.size() < divisor.c_.size())
        return Error{errc::non_integral, "degree of dividend below divisor"};
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, 0);
    const Int& lead = divisor.c_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int top = rem[i + divisor.c_.size() - 1];
        if (top % lead != 0)
            return Error{errc::non_integral, "non-integer quotient coefficient"};
        Int q = top / lead;
        quot[i] = q;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[i + j] -= q * divisor.c_[j];
    }
    for (const Int& r : rem)
        if (r != 0) return Error{errc::non_integral, "division leaves a remainder"};
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? "-" : "+");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

PalinomialSet build_polynomials(const PalintipleInstance& p) {
    const std::size_t k = p.top_index();
    std::vector<Int> pal(k + 1), dig(k + 1), rdig(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        dig[j] = p.digits[j];
        rdig[j] = p.digits[k - j];
        pal[j] = p.digits[j] - p.multiplier * p.digits[k - j];
    }
    std::vector<Int> carry(p.carries.begin() + 1, p.carries.begin() + 1 + k);
    PalinomialSet s;
    s.pal = IntPolynomial(std::move(pal));
    s.digit = IntPolynomial(std::move(dig));
    s.rdigit = IntPolynomial(std::move(rdig));
    s.carry = IntPolynomial(std::move(carry));
    return s;
}

const char* identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::linear_factor: return "linear-factor";
        case IdentityKind::digit_poly_1089: return "digit-poly-1089";
        case IdentityKind::digit_poly_shifted: return "digit-poly-shifted";
        case IdentityKind::derived_forward: return "derived-forward";
        case IdentityKind::derived_rho: return "derived-rho";
        case IdentityKind::two_families_linear: return "two-families-linear";
    }
    return "?";
}

Result<IdentityKind> parse_identity(const std::string& s) {
    for (auto k : {IdentityKind::linear_factor, IdentityKind::digit_poly_1089,
                   IdentityKind::digit_poly_shifted, IdentityKind::derived_forward,
                   IdentityKind::derived_rho, IdentityKind::two_families_linear})
        if (s == identity_name(k)) return k;
    return Error{errc::parse_error, "unknown identity '" + s + "'"};
}

namespace {

IdentityReport report_of(IntPolynomial residual, std::string detail) {
    IdentityReport r;
    r.pass = residual.is_zero();
    r.residual = std::move(residual);
    r.detail = std::move(detail);
    return r;
}

// (x - root_at) as a polynomial
IntPolynomial x_minus(const Int& v) { return IntPolynomial::linear(-v, 1); }

// Which recycling mode, if any, turns p's digits into phat's carries.
// Returns the matching factor pair for the derived identities.
bool carries_match(const PalintipleInstance& p, const PalintipleInstance& phat, bool rho) {
    std::vector<Int> seq = p.digits;
    if (rho) std::reverse(seq.begin(), seq.end());
    std::vector<Int> single{Int(0)};
    single.insert(single.end(), seq.begin(), seq.end());
    single.push_back(0);
    std::vector<Int> dbl = single;
    dbl.push_back(0);
    return phat.carries == single || phat.carries == dbl;
}

} // namespace

Result<IdentityReport> check_identity(IdentityKind kind, const PalintipleInstance& p,
                                      const PalintipleInstance* phat) {
    auto s = build_polynomials(p);
    const Int n = p.multiplier, b = p.base;
    const Int& d0 = p.digits.front();
    const Int& dk = p.digits.back();

    switch (kind) {
        case IdentityKind::linear_factor:
            return report_of(s.pal - x_minus(b) * s.carry, "pal = (x-b) carry");

        case IdentityKind::digit_poly_1089: {
            if (classify(p) != PalinClass::symmetric)
                return Error{errc::precondition_failed, "source is not symmetric"};
            if (b % (n + 1) != 0)
                return Error{errc::precondition_failed, "base not divisible by n+1"};
            auto lhs = IntPolynomial::constant(n - 1) * x_minus(b);
            auto diff = lhs * s.digit - IntPolynomial({d0, -1, dk}) * s.pal;
            if (!diff.is_zero()) return report_of(diff, "digit equation");
            auto twin = lhs * s.rdigit - IntPolynomial({dk, -1, d0}) * s.pal;
            return report_of(twin, "digit and reverse twin");
        }

        case IdentityKind::digit_poly_shifted: {
            if (classify(p) != PalinClass::shifted_symmetric)
                return Error{errc::precondition_failed, "source is not shifted-symmetric"};
            const Int& ck = p.carries[p.top_index()];
            auto lhs = IntPolynomial::constant(ck) * x_minus(b);
            auto diff = lhs * s.digit - IntPolynomial::linear(d0, dk) * s.pal;
            if (!diff.is_zero()) return report_of(diff, "digit equation");
            auto twin = lhs * s.rdigit - IntPolynomial::linear(dk, d0) * s.pal;
            return report_of(twin, "digit and reverse twin");
        }

        case IdentityKind::derived_forward:
        case IdentityKind::derived_rho: {
            if (!phat) return Error{errc::bad_argument, "needs the derived instance"};
            bool rho = (kind == IdentityKind::derived_rho);
            if (!carries_match(p, *phat, rho))
                return Error{errc::precondition_failed,
                             "carries of the second instance are not the recycled digits"};
            auto shat = build_polynomials(*phat);
            auto cls = classify(p);
            // factor that digit (or reverse-digit) carries past the source pal
            IntPolynomial lhs_factor, rhs_factor;
            if (cls == PalinClass::symmetric && b % (n + 1) == 0) {
                lhs_factor = IntPolynomial::constant(n - 1) * x_minus(b);
                rhs_factor = rho ? IntPolynomial({dk, -1, d0}) : IntPolynomial({d0, -1, dk});
            } else if (cls == PalinClass::shifted_symmetric) {
                const Int& ck = p.carries[p.top_index()];
                lhs_factor = IntPolynomial::constant(ck) * x_minus(b);
                rhs_factor = rho ? IntPolynomial::linear(dk, d0) : IntPolynomial::linear(d0, dk);
            } else {
                return Error{errc::precondition_failed,
                             "source is neither symmetric-eligible nor shifted-symmetric"};
            }
            // either padding leaves the carry polynomial equal to the digit
            // polynomial, so palhat = (x-bhat) digit in both cases
            auto direct = shat.pal - x_minus(phat->base) * (rho ? s.rdigit : s.digit);
            if (!direct.is_zero()) return report_of(direct, "palhat = (x-bhat) digit");
            auto cross = lhs_factor * shat.pal - x_minus(phat->base) * rhs_factor * s.pal;
            return report_of(cross, "direct and cross-multiplied against the source");
        }

        case IdentityKind::two_families_linear: {
            if (!phat) return Error{errc::bad_argument, "needs the second instance"};
            if (p.carries != phat->carries)
                return Error{errc::precondition_failed, "carry sequences differ"};
            auto s2 = build_polynomials(*phat);
            auto diff = x_minus(phat->base) * s.pal - x_minus(p.base) * s2.pal;
            return report_of(diff, "(x-b2) pal1 = (x-b1) pal2");
        }
    }
    return Error{errc::bad_argument, "unknown identity"};
}

Result<std::vector<std::complex<double>>> find_roots(const IntPolynomial& q, unsigned seed) {
    if (q.degree() < 1 || q.is_zero())
        return Error{errc::precondition_failed, "need degree at least 1"};
    const auto& c = q.coeffs();
    const std::size_t deg = q.degree();
    // monic double coefficients
    double lead = c.back().convert_to<double>();
    std::vector<double> a(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) a[i] = c[i].convert_to<double>() / lead;

    double bound = 1.0;
    for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(a[i]));
    double radius = std::max(1.0, 1.0 + bound);

    constexpr double tau = 6.283185307179586476925286766559;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<std::complex<double>> z(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        double ang = tau * (double(i) + 0.25) / double(deg) + jitter(rng);
        double r = radius * (1.0 + jitter(rng));
        z[i] = std::polar(r, ang);
    }

    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 1.0; // monic
        for (std::size_t i = deg; i-- > 0;) v = v * x + a[i];
        return v;
    };

    const int cap = 10000;
    for (int it = 0; it < cap; ++it) {
        double worst = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-13) {
            std::sort(z.begin(), z.end(), [](const auto& x, const auto& y) {
                if (x.real() != y.real()) return x.real() < y.real();
                return x.imag() < y.imag();
            });
            return z;
        }
    }
    return Error{errc::no_convergence, "root iteration did not settle in 10000 sweeps"};
}

Result<RootCheck> unit_circle_root_check(const IntPolynomial& q, double tol, unsigned seed) {
    auto roots = find_roots(q, seed);
    if (!roots.ok()) return roots.error();
    RootCheck rc;
    rc.roots = roots.value();
    double best = 1e300;
    for (const auto& xi : rc.roots) {
        double off = std::abs(std::abs(xi) - 1.0);
        if (off < best) {
            best = off;
            rc.witness = xi;
        }
    }
    rc.pass = best <= tol;
    return rc;
}

} // namespace palintiple
