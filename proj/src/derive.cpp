#include "palintiple/derive.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace palintiple {

const char* mode_name(DerivationMode m) {
    switch (m) {
        case DerivationMode::single_forward: return "single";
        case DerivationMode::double_forward: return "double";
        case DerivationMode::single_rho: return "rho-single";
        case DerivationMode::double_rho: return "rho-double";
    }
    return "?";
}

Result<DerivationMode> parse_mode(const std::string& s) {
    if (s == "single") return DerivationMode::single_forward;
    if (s == "double") return DerivationMode::double_forward;
    if (s == "rho-single") return DerivationMode::single_rho;
    if (s == "rho-double") return DerivationMode::double_rho;
    return Error{errc::parse_error, "unknown mode '" + s + "'"};
}

const char* theorem_name(TheoremTag t) {
    switch (t) {
        case TheoremTag::hoey: return "hoey";
        case TheoremTag::sutcliffe: return "sutcliffe";
        case TheoremTag::pudwell: return "pudwell";
        case TheoremTag::rho_hoey: return "rho-hoey";
        case TheoremTag::rho_sutcliffe: return "rho-sutcliffe";
        case TheoremTag::rho_pudwell: return "rho-pudwell";
    }
    return "?";
}

Result<TheoremTag> parse_theorem(const std::string& s) {
    if (s == "hoey") return TheoremTag::hoey;
    if (s == "sutcliffe") return TheoremTag::sutcliffe;
    if (s == "pudwell") return TheoremTag::pudwell;
    if (s == "rho-hoey") return TheoremTag::rho_hoey;
    if (s == "rho-sutcliffe") return TheoremTag::rho_sutcliffe;
    if (s == "rho-pudwell") return TheoremTag::rho_pudwell;
    return Error{errc::parse_error, "unknown theorem '" + s + "'"};
}

Int AffineValue::at(const Int& alpha) const {
    Int num = a0 + a1 * alpha;
    if (num % den != 0)
        throw std::logic_error("affine value evaluated at an alpha where it is not integral");
    return num / den;
}

bool AffineValue::integral_at(const Int& alpha) const { return (a0 + a1 * alpha) % den == 0; }

std::string AffineValue::str() const {
    std::ostringstream os;
    auto inner = [&](std::ostream& o) {
        if (a1 == 0) { o << a0; return; }
        if (a1 == 1) o << "a";
        else if (a1 == -1) o << "-a";
        else o << a1 << "a";
        if (a0 > 0) o << "+" << a0;
        else if (a0 < 0) o << a0;
    };
    if (den == 1) {
        // constant-first reads better when everything is integral
        if (a1 == 0) os << a0;
        else if (a0 == 0) inner(os);
        else if (a0 > 0) {
            os << a0 << "+";
            if (a1 == 1) os << "a"; else os << a1 << "a";
        } else inner(os);
    } else {
        os << "(";
        inner(os);
        os << ")/" << den;
    }
    return os.str();
}

bool AlphaConstraint::admits(const Int& alpha, bool allow_zero) const {
    if (alpha == 0) return allow_zero && zero_admissible;
    if (alpha < min_alpha) return false;
    return mod_floor(alpha - residue, modulus) == 0;
}

Int AlphaConstraint::nth(std::uint64_t idx) const {
    return min_alpha + modulus * Int(idx - 1);
}

std::vector<Int> mode_carries(const PalintipleInstance& p, DerivationMode mode) {
    std::vector<Int> seq = p.digits; // least significant first
    if (mode == DerivationMode::single_rho || mode == DerivationMode::double_rho)
        std::reverse(seq.begin(), seq.end());
    std::vector<Int> c;
    c.reserve(seq.size() + 3);
    c.push_back(0);
    for (auto& d : seq) c.push_back(d);
    c.push_back(0);
    if (mode == DerivationMode::double_forward || mode == DerivationMode::double_rho)
        c.push_back(0);
    return c;
}

namespace {

AffineValue normalized_affine(const Int& num0, const Int& num1, const Int& den) {
    Int g = gcd(gcd(num0, num1), den);
    if (g == 0) return {0, 0, 1};
    return {num0 / g, num1 / g, den / g};
}

// Core of the module: carries -> family of (nhat, s + M*alpha)-palintiples.
// origin_hint, when set, must be a solution of the end congruence and becomes
// the affine origin (theorem statements sometimes use a non-minimal one).
Result<ParametricFamily> solve_family(const PalintipleInstance& source, DerivationMode mode,
                                      const Int& nhat, std::optional<Int> origin_hint) {
    if (nhat < 2) return Error{errc::bad_argument, "nhat must be at least 2"};
    std::vector<Int> c = mode_carries(source, mode);
    const std::size_t K = c.size() - 2; // top digit index of the new instances
    const Int N = nhat * nhat - 1;

    // end congruence: bhat * c_1 = nhat * c_K (mod nhat^2 - 1)
    Int s, M;
    if (!solve_linear_congruence(c[1], nhat * c[K], N, s, M)) {
        std::ostringstream os;
        os << "end congruence unsolvable: gcd(" << c[1] << ", " << N << ") = " << gcd(c[1], N)
           << " does not divide " << nhat * c[K];
        return Error{errc::no_solution, os.str()};
    }
    if (origin_hint) {
        if (mod_floor(*origin_hint - s, M) != 0)
            throw std::logic_error("origin hint is not a solution of the end congruence");
        s = *origin_hint;
    }

    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] > nhat - 1)
            return Error{errc::carry_too_large,
                         "recycled carry " + c[j].str() + " reaches nhat at position " +
                             std::to_string(j)};

    // digit j as (U_j + V_j * alpha) / N
    std::vector<Int> U(K + 1), V(K + 1);
    for (std::size_t j = 0; j <= K; ++j) {
        U[j] = nhat * s * c[K - j + 1] - nhat * c[K - j] + s * c[j + 1] - c[j];
        V[j] = M * (nhat * c[K - j + 1] + c[j + 1]);
    }

    // integrality of every digit pins alpha to one residue class
    Int R = 0, Q = 1;
    for (std::size_t j = 0; j <= K; ++j) {
        Int rj, qj;
        if (!solve_linear_congruence(V[j], -U[j], N, rj, qj))
            return Error{errc::no_solution,
                         "digit " + std::to_string(j) + " is never integral"};
        Int r2, q2;
        if (!crt_intersect(R, Q, rj, qj, r2, q2))
            return Error{errc::no_solution, "digit integrality conditions are incompatible"};
        R = r2; Q = q2;
    }

    // affine range constraints; every slope is >= 0 so each is a lower bound
    Int lo_bound = ceil_div(nhat + 1 - s, M); // bhat > nhat
    for (std::size_t j = 0; j <= K; ++j) {
        Int lo = (j == 0 || j == K) ? 1 : 0;
        if (V[j] > 0) {
            lo_bound = std::max(lo_bound, ceil_div(lo * N - U[j], V[j]));
        } else if (U[j] < lo * N) {
            return Error{errc::no_solution,
                         "digit " + std::to_string(j) + " is below " + lo.str() + " for every alpha"};
        }
        Int upper_slope = N * M - V[j]; // bhat - digit >= 1
        Int upper_const = N * s - U[j];
        if (upper_slope > 0) {
            lo_bound = std::max(lo_bound, ceil_div(N - upper_const, upper_slope));
        } else if (upper_const < N) {
            return Error{errc::no_solution,
                         "digit " + std::to_string(j) + " reaches the base for every alpha"};
        }
    }

    ParametricFamily f;
    f.nhat = nhat;
    f.mode = mode;
    f.source = source;
    f.base = {s, M, 1};
    f.carries = c;
    for (std::size_t j = 0; j <= K; ++j) f.digits.push_back(normalized_affine(U[j], V[j], N));

    Int start = std::max(Int(1), lo_bound);
    // smallest admissible alpha >= start in the class R (mod Q)
    f.alpha.residue = R;
    f.alpha.modulus = Q;
    f.alpha.min_alpha = start + mod_floor(R - start, Q);
    f.alpha.zero_admissible = (R == 0) && (lo_bound <= 0);

    for (std::uint64_t i = 1; i <= 10; ++i) {
        auto inst = instantiate(f, f.alpha.nth(i));
        if (!inst.ok())
            throw std::logic_error("family failed validation at alpha = " + f.alpha.nth(i).str() +
                                   ": " + inst.error().message);
    }
    return f;
}

} // namespace

Result<ParametricFamily> derive_family(const PalintipleInstance& p, DerivationMode mode,
                                       const Int& nhat) {
    return solve_family(p, mode, nhat, std::nullopt);
}

Result<PalintipleInstance> instantiate(const ParametricFamily& f, const Int& alpha,
                                       bool allow_zero) {
    if (!f.alpha.admits(alpha, allow_zero)) {
        std::ostringstream os;
        os << "alpha " << alpha << " is not admissible (needs alpha = " << f.alpha.residue
           << " mod " << f.alpha.modulus << ", alpha >= " << f.alpha.min_alpha;
        if (f.alpha.zero_admissible) os << ", or alpha = 0 when enabled";
        os << ")";
        return Error{errc::constraint_violated, os.str()};
    }
    Int bhat = f.base.at(alpha);
    std::vector<Int> digits;
    digits.reserve(f.digits.size());
    for (const auto& av : f.digits) digits.push_back(av.at(alpha));
    auto inst = make_instance(f.nhat, bhat, digits);
    if (!inst.ok())
        throw std::logic_error("family instance failed to build at alpha = " + alpha.str() + ": " +
                               inst.error().message);
    if (inst.value().carries != f.carries)
        throw std::logic_error("family instance carries do not match the family at alpha = " +
                               alpha.str());
    auto report = validate(inst.value());
    if (!report.pass)
        throw std::logic_error("family instance failed validation at alpha = " + alpha.str() +
                               ": " + report.first_violation);
    return inst;
}

namespace {

Error hypothesis(const std::string& what) { return Error{errc::hypothesis_failed, what}; }

// shared by sutcliffe and rho_sutcliffe: the carry quotients
// (nb-1)c_j/(n^2-1) and (b-n)c_j/(n^2-1), integral for shifted-symmetric p
struct CarryQuotients {
    std::vector<Int> a; // (nb-1)c_j/(n^2-1)
    std::vector<Int> b; // (b-n)c_j/(n^2-1)
};

Result<CarryQuotients> carry_quotients(const PalintipleInstance& p) {
    const Int n = p.multiplier, b = p.base, nn = n * n - 1;
    CarryQuotients q;
    for (const Int& cj : p.carries) {
        if ((n * b - 1) * cj % nn != 0 || (b - n) * cj % nn != 0)
            return hypothesis("carry " + cj.str() + " fails the shifted-symmetry divisibility");
        q.a.push_back((n * b - 1) * cj / nn);
        q.b.push_back((b - n) * cj / nn);
    }
    return q;
}

} // namespace

Result<ParametricFamily> theorem_family(const PalintipleInstance& p, TheoremTag tag,
                                        std::optional<Int> nhat) {
    const Int n = p.multiplier, b = p.base;
    const bool rho = (tag == TheoremTag::rho_hoey || tag == TheoremTag::rho_sutcliffe ||
                      tag == TheoremTag::rho_pudwell);

    switch (tag) {
        case TheoremTag::hoey:
        case TheoremTag::rho_hoey: {
            if (nhat && *nhat != b) return hypothesis("this construction forces nhat = b");
            if (classify(p) != PalinClass::symmetric) return hypothesis("source is not symmetric");
            if (b % (n + 1) != 0) return hypothesis("base is not divisible by n+1");
            auto prof = symmetric_profile(p);
            if (!prof.ok()) return hypothesis(prof.error().message);
            Int origin;
            if (tag == TheoremTag::hoey) {
                origin = n * b;
            } else {
                if (gcd(n, b * b - 1) != 1)
                    return hypothesis("n is not invertible modulo b^2-1");
                origin = mod_floor(mod_inverse(n, b * b - 1) * b, b * b - 1);
            }
            auto fam = solve_family(p, rho ? DerivationMode::single_rho : DerivationMode::single_forward,
                                    b, origin);
            if (!fam.ok()) return fam;
            if (fam.value().base.a1 != b * b - 1)
                throw std::logic_error("engine modulus disagrees with the b^2-1 statement");
            fam.value().theorem = tag;
            return fam;
        }
        case TheoremTag::sutcliffe:
        case TheoremTag::rho_sutcliffe: {
            if (!nhat) return Error{errc::bad_argument, "this construction needs nhat"};
            if (classify(p) != PalinClass::shifted_symmetric)
                return hypothesis("source is not shifted-symmetric");
            // forward: s = nhat(nb-1)/(b-n); rho: s = nhat(b-n)/(nb-1)
            Int s_num = rho ? Int(*nhat * (b - n)) : Int(*nhat * (n * b - 1));
            Int s_den = rho ? Int(n * b - 1) : Int(b - n);
            if (s_num % s_den != 0)
                return hypothesis("s = " + s_num.str() + "/" + s_den.str() + " is not an integer");
            Int s = s_num / s_den;
            for (const Int& d : p.digits)
                if (d >= *nhat) return hypothesis("nhat does not exceed every digit of the source");
            auto q = carry_quotients(p);
            if (!q.ok()) return q.error();
            for (std::size_t j = 0; j < p.carries.size(); ++j) {
                Int lhs = rho ? s * q.value().b[j] : s * q.value().a[j];
                Int rhs = rho ? q.value().a[j] : q.value().b[j];
                if (mod_floor(lhs - rhs, *nhat - 1) != 0)
                    return hypothesis("carry congruence fails at position " + std::to_string(j));
            }
            auto fam = solve_family(p, rho ? DerivationMode::single_rho : DerivationMode::single_forward,
                                    *nhat, s);
            if (!fam.ok()) return fam;
            Int g = gcd(rho ? p.digits.back() : p.digits.front(), *nhat * *nhat - 1);
            if (fam.value().base.a1 != (*nhat * *nhat - 1) / g)
                throw std::logic_error("engine modulus disagrees with the (nhat^2-1)/gcd statement");
            fam.value().theorem = tag;
            return fam;
        }
        case TheoremTag::pudwell:
        case TheoremTag::rho_pudwell: {
            if (nhat && *nhat != b) return hypothesis("this construction forces nhat = b");
            const Int& end_digit = rho ? p.digits.back() : p.digits.front();
            Int D = gcd(end_digit, b * b - 1);
            for (const Int& cj : p.carries)
                if (D * cj % (n * n - 1) != 0)
                    return hypothesis("n^2-1 does not divide D*c_j for carry " + cj.str());
            auto fam = solve_family(p, rho ? DerivationMode::double_rho : DerivationMode::double_forward,
                                    b, Int(0));
            if (!fam.ok()) return fam;
            if (fam.value().base.a1 != (b * b - 1) / D)
                throw std::logic_error("engine modulus disagrees with the (b^2-1)/D statement");
            fam.value().theorem = tag;
            return fam;
        }
    }
    return Error{errc::bad_argument, "unknown theorem"};
}

std::string describe_family(const ParametricFamily& f) {
    std::ostringstream os;
    os << "(" << f.nhat << ", " << f.base.str() << ")-palintiples (";
    auto msf = f.digits_msf();
    for (std::size_t i = 0; i < msf.size(); ++i) {
        if (i) os << ", ";
        os << msf[i].str();
    }
    os << ") with carries (";
    auto cm = f.carries_msf();
    for (std::size_t i = 0; i < cm.size(); ++i) {
        if (i) os << ", ";
        os << cm[i];
    }
    os << "), alpha = " << f.alpha.residue << " mod " << f.alpha.modulus << ", alpha >= "
       << f.alpha.min_alpha;
    if (f.alpha.zero_admissible) os << " (alpha = 0 also valid)";
    return os.str();
}

Result<std::vector<PermutipleWitness>> permutiple_search(const std::vector<std::int64_t>& digits,
                                                         std::int64_t base_lo, std::int64_t base_hi,
                                                         std::int64_t mult_lo, std::int64_t mult_hi) {
    if (digits.size() < 2 || digits.size() > 12)
        return Error{errc::bad_argument, "need between 2 and 12 digits"};
    std::int64_t maxd = 0;
    for (auto d : digits) {
        if (d < 0) return Error{errc::bad_argument, "digits must be non-negative"};
        maxd = std::max(maxd, d);
    }
    if (base_hi < base_lo || mult_hi < mult_lo)
        return Error{errc::bad_argument, "empty base or multiplier range"};
    // value fits: base^len <= 2^62
    long double top = powl(static_cast<long double>(base_hi), static_cast<long double>(digits.size()));
    if (top > 4.6e18L) return Error{errc::bound_exceeded, "base^length exceeds 64-bit range"};

    std::vector<PermutipleWitness> witnesses;
    for (std::int64_t g = std::max(base_lo, maxd + 1); g <= base_hi; ++g) {
        std::vector<std::int64_t> perm(digits);
        std::sort(perm.begin(), perm.end());
        std::map<std::int64_t, std::vector<std::int64_t>> by_value;
        do {
            if (perm.front() == 0) continue; // leading digit (msf) must be nonzero
            std::int64_t v = 0;
            for (auto d : perm) v = v * g + d;
            by_value.emplace(v, perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (std::int64_t m = std::max<std::int64_t>(2, mult_lo); m <= mult_hi; ++m) {
            for (const auto& [v, operand] : by_value) {
                auto it = by_value.find(m * v);
                if (it == by_value.end()) continue;
                PermutipleWitness w;
                w.base = g;
                w.multiplier = m;
                w.target_msf = it->second;
                w.operand_msf = operand;
                witnesses.push_back(std::move(w));
            }
        }
    }
    return witnesses;
}

} // namespace palintiple
