#pragma once

#include <string>
#include <vector>

#include "palintiple/bigint.hpp"
#include "palintiple/result.hpp"

namespace palintiple {

enum class PalinClass { symmetric, shifted_symmetric, asymmetric };

const char* palin_class_name(PalinClass c);

// A base-b number equal to n times its own digit reversal, together with the
// carry sequence of the schoolbook multiplication n * reverse. Digits are
// stored least-significant-first (d_0..d_k), carries as c_0..c_{k+1} with both
// sentinels: c_0 = c_{k+1} = 0 and 0 <= c_j <= n-1.
struct PalintipleInstance {
    Int multiplier;           // n
    Int base;                 // b
    std::vector<Int> digits;  // d_0..d_k
    std::vector<Int> carries; // c_0..c_{k+1}

    std::size_t length() const { return digits.size(); }
    std::size_t top_index() const { return digits.size() - 1; } // k

    Int value() const;          // sum d_j b^j
    Int reversed_value() const; // sum d_{k-j} b^j

    std::vector<Int> digits_msf() const;  // d_k..d_0, display order
    std::vector<Int> carries_msf() const; // c_k..c_0, display order (top sentinel dropped)

    // "d_k,...,d_0@b*n"
    std::string literal() const;

    bool operator==(const PalintipleInstance& o) const {
        return multiplier == o.multiplier && base == o.base && digits == o.digits;
    }
    bool operator<(const PalintipleInstance& o) const;
};

struct CoreOptions {
    bool allow_multiplier_one = false; // admit n = 1 (palindromes)
    bool allow_trailing_zero = false;  // drop the d_0 >= 1 requirement
};

// Runs the schoolbook recurrence n*d_{k-j} + c_j = d_j + b*c_{j+1} over the
// given digits and returns c_0..c_{k+1}. Fails with not_a_palintiple when the
// recurrence has no carry solution, out_of_range when a carry leaves [0, n-1].
Result<std::vector<Int>> carries_from_digits(const Int& n, const Int& b,
                                             const std::vector<Int>& digits_lsf,
                                             const CoreOptions& opt = {});

// Inverse direction: reconstructs each digit from the carries alone,
// d_j = (n*b*c_{k-j+1} - n*c_{k-j} + b*c_{j+1} - c_j) / (n^2 - 1).
// carries_lsf must be the full c_0..c_{k+1}. Fails with non_integral when a
// quotient is not an integer, out_of_range when a digit leaves [0, b).
Result<std::vector<Int>> digits_from_carries(const Int& n, const Int& b,
                                             const std::vector<Int>& carries_lsf,
                                             const CoreOptions& opt = {});

Result<PalintipleInstance> make_instance(const Int& n, const Int& b,
                                         const std::vector<Int>& digits_lsf,
                                         const CoreOptions& opt = {});

Result<PalintipleInstance> make_instance_msf(const Int& n, const Int& b,
                                             const std::vector<Int>& digits_msf,
                                             const CoreOptions& opt = {});

struct ValidationReport {
    bool pass = true;
    std::string first_violation; // empty when pass
};

// Re-checks every stored relation of p from scratch: digit and carry ranges,
// the sentinels, each schoolbook relation, and the exact value identity
// value = n * reversed_value. Never trusts how p was built.
ValidationReport validate(const PalintipleInstance& p, const CoreOptions& opt = {});

// Symmetric  <=> c_j = c_{k-j}   for all 0 <= j <= k
// Shifted    <=> c_j = c_{k-j+1} for all 0 <= j <= k
// A valid instance can satisfy at most one of the two.
PalinClass classify(const PalintipleInstance& p);

// Shape of a symmetric instance whose carries all lie in {0, n-1} and whose
// base is divisible by n+1: q = b/(n+1) and the binary profile r_j = c_j/(n-1).
struct SymmetricProfile {
    Int q;
    std::vector<int> r; // r_0..r_k
};

// Fails not_eligible unless p is symmetric, (n+1) | b, every carry is 0 or
// n-1, and r has the required shape: r_0 = r_k = 0, r_1 = r_{k-1} = 1, and no
// isolated value at interior positions.
Result<SymmetricProfile> symmetric_profile(const PalintipleInstance& p);

// True when p is eligible for the profile above (the class of sources the
// 1089-style constructions start from).
bool profile_eligible(const PalintipleInstance& p);

// Parses "d_k,...,d_0@b*n", e.g. "8,7,1,2@10*4".
Result<PalintipleInstance> parse_literal(const std::string& text, const CoreOptions& opt = {});

// Display-order carry list (c_k..c_0, or with the leading top sentinel also
// present) to digits. Tries the longer digit reading first.
Result<std::vector<Int>> digits_from_carries_display(const Int& n, const Int& b,
                                                     const std::vector<Int>& carries_msf,
                                                     const CoreOptions& opt = {});

} // namespace palintiple
