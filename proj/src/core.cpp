#include "palintiple/instance.hpp"

#include <algorithm>
#include <sstream>

namespace palintiple {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_a_palintiple: return "NotAPalintiple";
        case errc::non_integral: return "NonIntegral";
        case errc::out_of_range: return "OutOfRange";
        case errc::bad_digits: return "BadDigits";
        case errc::not_eligible: return "NotEligible";
        case errc::no_solution: return "NoSolution";
        case errc::carry_too_large: return "CarryTooLarge";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::constraint_violated: return "ConstraintViolated";
        case errc::degenerate: return "Degenerate";
        case errc::size_exceeded: return "SizeExceeded";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::no_convergence: return "NoConvergence";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::bad_argument: return "BadArgument";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

const char* palin_class_name(PalinClass c) {
    switch (c) {
        case PalinClass::symmetric: return "symmetric";
        case PalinClass::shifted_symmetric: return "shifted-symmetric";
        case PalinClass::asymmetric: return "asymmetric";
    }
    return "?";
}

Int PalintipleInstance::value() const {
    Int v = 0;
    for (std::size_t j = digits.size(); j-- > 0;) v = v * base + digits[j];
    return v;
}

Int PalintipleInstance::reversed_value() const {
    Int v = 0;
    for (const Int& d : digits) v = v * base + d;
    return v;
}

std::vector<Int> PalintipleInstance::digits_msf() const {
    return {digits.rbegin(), digits.rend()};
}

std::vector<Int> PalintipleInstance::carries_msf() const {
    // c_k..c_0: drop the top sentinel c_{k+1}
    std::vector<Int> out(carries.rbegin() + 1, carries.rend());
    return out;
}

std::string PalintipleInstance::literal() const {
    std::ostringstream os;
    auto msf = digits_msf();
    for (std::size_t i = 0; i < msf.size(); ++i) {
        if (i) os << ',';
        os << msf[i];
    }
    os << '@' << base << '*' << multiplier;
    return os.str();
}

bool PalintipleInstance::operator<(const PalintipleInstance& o) const {
    if (multiplier != o.multiplier) return multiplier < o.multiplier;
    if (base != o.base) return base < o.base;
    if (digits.size() != o.digits.size()) return digits.size() < o.digits.size();
    return value() < o.value();
}

namespace {

Result<int> check_params(const Int& n, const Int& b, const CoreOptions& opt) {
    Int min_n = opt.allow_multiplier_one ? 1 : 2;
    if (n < min_n) return Error{errc::bad_argument, "multiplier must be at least " + min_n.str()};
    if (b <= n) return Error{errc::bad_argument, "base must exceed the multiplier"};
    return 0;
}

Result<int> check_digit_shape(const Int& b, const std::vector<Int>& d, const CoreOptions& opt) {
    if (d.size() < 2) return Error{errc::bad_digits, "need at least 2 digits"};
    for (const Int& x : d)
        if (x < 0 || x >= b) return Error{errc::bad_digits, "digit " + x.str() + " out of [0, base)"};
    if (d.back() == 0) return Error{errc::bad_digits, "leading digit is zero"};
    if (!opt.allow_trailing_zero && d.front() == 0)
        return Error{errc::bad_digits, "trailing digit is zero"};
    return 0;
}

} // namespace

Result<std::vector<Int>> carries_from_digits(const Int& n, const Int& b,
                                             const std::vector<Int>& d,
                                             const CoreOptions& opt) {
    if (auto r = check_params(n, b, opt); !r) return r.error();
    if (auto r = check_digit_shape(b, d, opt); !r) return r.error();
    const std::size_t k = d.size() - 1;
    std::vector<Int> c(d.size() + 1, 0);
    for (std::size_t j = 0; j <= k; ++j) {
        Int t = n * d[k - j] + c[j] - d[j];
        if (t % b != 0)
            return Error{errc::not_a_palintiple,
                         "no carry satisfies the recurrence at position " + std::to_string(j)};
        c[j + 1] = t / b;
        if (c[j + 1] < 0 || c[j + 1] > n - 1)
            return Error{errc::out_of_range,
                         "carry " + c[j + 1].str() + " at position " + std::to_string(j + 1) +
                             " outside [0, n-1]"};
    }
    if (c[k + 1] != 0)
        return Error{errc::not_a_palintiple, "top carry sentinel is nonzero"};
    return c;
}

Result<std::vector<Int>> digits_from_carries(const Int& n, const Int& b,
                                             const std::vector<Int>& c,
                                             const CoreOptions& opt) {
    if (auto r = check_params(n, b, opt); !r) return r.error();
    if (n == 1) return Error{errc::bad_argument, "digit reconstruction needs n >= 2"};
    if (c.size() < 3) return Error{errc::bad_argument, "need at least 3 carries (c_0..c_{k+1})"};
    if (c.front() != 0 || c.back() != 0)
        return Error{errc::bad_argument, "carry sentinels c_0 and c_{k+1} must be zero"};
    for (const Int& x : c)
        if (x < 0 || x > n - 1) return Error{errc::out_of_range, "carry " + x.str() + " outside [0, n-1]"};
    const std::size_t k = c.size() - 2;
    const Int denom = n * n - 1;
    std::vector<Int> d(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        Int num = n * b * c[k - j + 1] - n * c[k - j] + b * c[j + 1] - c[j];
        if (num % denom != 0)
            return Error{errc::non_integral,
                         "digit at position " + std::to_string(j) + " is not an integer"};
        d[j] = num / denom;
        if (d[j] < 0 || d[j] >= b)
            return Error{errc::out_of_range,
                         "digit " + d[j].str() + " at position " + std::to_string(j) + " outside [0, base)"};
    }
    return d;
}

Result<PalintipleInstance> make_instance(const Int& n, const Int& b,
                                         const std::vector<Int>& d, const CoreOptions& opt) {
    auto c = carries_from_digits(n, b, d, opt);
    if (!c) return c.error();
    return PalintipleInstance{n, b, d, std::move(c).value()};
}

Result<PalintipleInstance> make_instance_msf(const Int& n, const Int& b,
                                             const std::vector<Int>& msf, const CoreOptions& opt) {
    return make_instance(n, b, {msf.rbegin(), msf.rend()}, opt);
}

ValidationReport validate(const PalintipleInstance& p, const CoreOptions& opt) {
    auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
    Int min_n = opt.allow_multiplier_one ? 1 : 2;
    if (p.multiplier < min_n) return fail("multiplier below " + min_n.str());
    if (p.base <= p.multiplier) return fail("base does not exceed multiplier");
    if (p.digits.size() < 2) return fail("fewer than 2 digits");
    if (p.carries.size() != p.digits.size() + 1) return fail("carry sequence has wrong length");
    const std::size_t k = p.top_index();
    for (std::size_t j = 0; j <= k; ++j)
        if (p.digits[j] < 0 || p.digits[j] >= p.base)
            return fail("digit d_" + std::to_string(j) + " outside [0, base)");
    if (p.digits[k] == 0) return fail("leading digit d_k is zero");
    if (!opt.allow_trailing_zero && p.digits[0] == 0) return fail("trailing digit d_0 is zero");
    for (std::size_t j = 0; j < p.carries.size(); ++j)
        if (p.carries[j] < 0 || p.carries[j] > p.multiplier - 1)
            return fail("carry c_" + std::to_string(j) + " outside [0, n-1]");
    if (p.carries[0] != 0) return fail("carry sentinel c_0 is nonzero");
    if (p.carries[k + 1] != 0) return fail("carry sentinel c_{k+1} is nonzero");
    for (std::size_t j = 0; j <= k; ++j) {
        if (p.multiplier * p.digits[k - j] + p.carries[j] != p.digits[j] + p.base * p.carries[j + 1])
            return fail("schoolbook relation fails at position " + std::to_string(j));
    }
    if (p.value() != p.multiplier * p.reversed_value())
        return fail("value does not equal multiplier times reversed value");
    return {};
}

PalinClass classify(const PalintipleInstance& p) {
    const std::size_t k = p.top_index();
    const auto& c = p.carries;
    bool sym = true, shifted = true;
    for (std::size_t j = 0; j <= k; ++j) {
        if (c[j] != c[k - j]) sym = false;
        if (c[j] != c[k - j + 1]) shifted = false;
    }
    if (sym) return PalinClass::symmetric;
    if (shifted) return PalinClass::shifted_symmetric;
    return PalinClass::asymmetric;
}

Result<SymmetricProfile> symmetric_profile(const PalintipleInstance& p) {
    if (classify(p) != PalinClass::symmetric)
        return Error{errc::not_eligible, "instance is not symmetric"};
    const Int n = p.multiplier;
    if (p.base % (n + 1) != 0)
        return Error{errc::not_eligible, "base is not divisible by n+1"};
    const std::size_t k = p.top_index();
    SymmetricProfile prof;
    prof.q = p.base / (n + 1);
    prof.r.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        if (p.carries[j] == 0) prof.r[j] = 0;
        else if (p.carries[j] == n - 1) prof.r[j] = 1;
        else return Error{errc::not_eligible, "carry c_" + std::to_string(j) + " is neither 0 nor n-1"};
    }
    if (prof.r[0] != 0 || prof.r[k] != 0)
        return Error{errc::not_eligible, "profile ends are not 0"};
    if (k < 3)
        return Error{errc::not_eligible, "profile too short (need at least 4 digits)"};
    if (prof.r[1] != 1 || prof.r[k - 1] != 1)
        return Error{errc::not_eligible, "profile positions 1 and k-1 are not 1"};
    for (std::size_t j = 1; j <= k - 1; ++j) {
        if (prof.r[j] != prof.r[j - 1] && prof.r[j] != prof.r[j + 1])
            return Error{errc::not_eligible,
                         "isolated profile value at interior position " + std::to_string(j)};
    }
    return prof;
}

bool profile_eligible(const PalintipleInstance& p) {
    return symmetric_profile(p).ok();
}

Result<PalintipleInstance> parse_literal(const std::string& text, const CoreOptions& opt) {
    auto at = text.find('@');
    auto star = text.find('*', at == std::string::npos ? 0 : at);
    if (at == std::string::npos || star == std::string::npos || star < at)
        return Error{errc::parse_error, "expected d_k,...,d_0@base*multiplier"};
    auto parse_int = [](const std::string& s, Int& out) -> bool {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
        out = Int(s);
        return true;
    };
    std::vector<Int> msf;
    std::string digit_part = text.substr(0, at);
    std::size_t pos = 0;
    while (pos <= digit_part.size()) {
        auto comma = digit_part.find(',', pos);
        std::string tok = digit_part.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Int v;
        if (!parse_int(tok, v)) return Error{errc::parse_error, "bad digit token '" + tok + "'"};
        msf.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Int b, n;
    if (!parse_int(text.substr(at + 1, star - at - 1), b))
        return Error{errc::parse_error, "bad base"};
    if (!parse_int(text.substr(star + 1), n))
        return Error{errc::parse_error, "bad multiplier"};
    return make_instance_msf(n, b, msf, opt);
}

Result<std::vector<Int>> digits_from_carries_display(const Int& n, const Int& b,
                                                     const std::vector<Int>& carries_msf,
                                                     const CoreOptions& opt) {
    // Display lists normally run c_k..c_0 with the top sentinel implied; a
    // caller may also hand us the fully sentineled c_{k+1}..c_0. Prefer the
    // longer digit reading, fall back when it does not reconstruct.
    std::vector<Int> full(carries_msf.rbegin(), carries_msf.rend());
    full.push_back(0);
    auto first = digits_from_carries(n, b, full, opt);
    if (first) return first;
    if (carries_msf.size() >= 3 && carries_msf.front() == 0) {
        std::vector<Int> alt(carries_msf.rbegin(), carries_msf.rend());
        auto second = digits_from_carries(n, b, alt, opt);
        if (second) return second;
    }
    return first;
}

} // namespace palintiple
