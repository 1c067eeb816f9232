#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palintiple/instance.hpp"

namespace palintiple {

// How an existing palintiple's digits are recycled as the carry sequence of a
// new one. Forward modes keep the digit order, rho modes reverse it first;
// single modes pad one zero below, double modes pad one zero on each side.
enum class DerivationMode { single_forward, double_forward, single_rho, double_rho };

const char* mode_name(DerivationMode m);
Result<DerivationMode> parse_mode(const std::string& s);

// Exact affine form (a0 + a1*alpha) / den with den > 0. den is 1 whenever the
// form is integral in alpha itself; otherwise integrality holds exactly on the
// family's admissible residue class.
struct AffineValue {
    Int a0;
    Int a1;
    Int den = 1;

    Int at(const Int& alpha) const; // throws std::logic_error on non-integral use
    bool integral_at(const Int& alpha) const;
    std::string str() const; // e.g. "6+8a", "432a", "(47a-6)/7"
    bool operator==(const AffineValue& o) const { return a0 == o.a0 && a1 == o.a1 && den == o.den; }
};

struct AlphaConstraint {
    Int residue;         // admissible alpha: alpha = residue (mod modulus), alpha >= min_alpha
    Int modulus;         // >= 1
    Int min_alpha;       // smallest admissible value >= 1
    bool zero_admissible = false; // alpha = 0 also satisfies residue and ranges

    bool admits(const Int& alpha, bool allow_zero = false) const;
    // n-th admissible alpha, counting from 1
    Int nth(std::uint64_t idx) const;
};

enum class TheoremTag { hoey, sutcliffe, pudwell, rho_hoey, rho_sutcliffe, rho_pudwell };

const char* theorem_name(TheoremTag t);
Result<TheoremTag> parse_theorem(const std::string& s);

struct ParametricFamily {
    Int nhat;
    DerivationMode mode;
    PalintipleInstance source;
    AffineValue base;                // s + M*alpha
    std::vector<AffineValue> digits; // new d_0..d_K, least significant first
    std::vector<Int> carries;        // constant carries c_0..c_{K+1}, both sentinels
    AlphaConstraint alpha;
    std::optional<TheoremTag> theorem; // set when produced by theorem_family

    std::vector<AffineValue> digits_msf() const { return {digits.rbegin(), digits.rend()}; }
    std::vector<Int> carries_msf() const { return {carries.rbegin() + 1, carries.rend()}; }
};

// The carry sequence (c_0..c_{K+1}) the mode assigns to the new palintiple.
std::vector<Int> mode_carries(const PalintipleInstance& p, DerivationMode mode);

// Solves for every base bhat making the recycled carries the carry sequence of
// an (nhat, bhat)-palintiple: the end congruence pins bhat to a residue class,
// per-digit integrality pins alpha to a residue class, and the range
// constraints give the minimum alpha. Errors: carry_too_large when some digit
// of p reaches nhat, no_solution when no alpha produces a valid instance.
// A returned family has been instantiated and validated at its first ten
// admissible alphas.
Result<ParametricFamily> derive_family(const PalintipleInstance& p, DerivationMode mode,
                                       const Int& nhat);

// Checks the hypotheses of the named construction (failing with the first
// violated one spelled out), fixes the mode and nhat it prescribes, and runs
// the same engine. nhat is required for sutcliffe / rho_sutcliffe and must
// equal the source base for the other four when given.
Result<ParametricFamily> theorem_family(const PalintipleInstance& p, TheoremTag tag,
                                        std::optional<Int> nhat = std::nullopt);

// Evaluates the family at one alpha. allow_zero admits alpha = 0 when the
// family's constraints do. constraint_violated on inadmissible alpha; a
// constructed instance that fails validation is an internal defect and throws.
Result<PalintipleInstance> instantiate(const ParametricFamily& f, const Int& alpha,
                                       bool allow_zero = false);

std::string describe_family(const ParametricFamily& f);

struct PermutipleWitness {
    std::int64_t base = 0;
    std::int64_t multiplier = 0;
    std::vector<std::int64_t> target_msf;  // target = multiplier * operand
    std::vector<std::int64_t> operand_msf;
};

// Searches for pairs of digit rearrangements T, O of the given multiset with
// value(T) = m * value(O), both leading digits nonzero, over the requested
// base and multiplier ranges (m >= 2; bases below max(digit)+1 are skipped).
Result<std::vector<PermutipleWitness>> permutiple_search(const std::vector<std::int64_t>& digits,
                                                         std::int64_t base_lo, std::int64_t base_hi,
                                                         std::int64_t mult_lo, std::int64_t mult_hi);

} // namespace palintiple
