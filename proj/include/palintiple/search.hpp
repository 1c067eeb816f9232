#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palintiple/instance.hpp"

namespace palintiple {

struct EnumerationQuery {
    std::int64_t multiplier = 0; // 0 = all multipliers 2..b-1
    std::int64_t base = 10;
    std::int64_t min_length = 2;
    std::int64_t max_length = 2;
    std::size_t cap = 100000; // result cap; hitting it sets truncated
};

struct EnumerationResult {
    std::vector<PalintipleInstance> instances; // ordered by (n, b, value)
    bool truncated = false;
};

// Depth-first walk over mirrored carry-pair states: at step t the state is
// (c_t, c_{k-t+1}) and a digit pair (d_t, d_{k-t}) is chosen; the first step
// requires both end digits nonzero. Finds every palintiple of each requested
// length exactly once.
Result<EnumerationResult> enumerate_palintiples(const EnumerationQuery& q);

// Loops over every L-digit base-b integer without a trailing zero and keeps
// p = n * reverse(p). Exists to check enumerate_palintiples by a route that
// shares none of its machinery. Refuses b^L > guard (default 1e9) so the loop
// stays in checked 64-bit range.
Result<std::vector<PalintipleInstance>> brute_force_oracle(std::int64_t n, std::int64_t b,
                                                           std::int64_t length,
                                                           std::uint64_t guard = 1000000000ull);

struct PudwellScanWitness {
    PalintipleInstance source;
    std::int64_t nhat = 0;
    std::string family_summary; // base and digit forms of the constructed family
};

struct PudwellScanReport {
    std::int64_t max_base = 0;
    std::string population; // what was scanned, stated explicitly
    std::uint64_t sources_examined = 0;
    std::uint64_t candidates_tested = 0;
    std::vector<PudwellScanWitness> witnesses; // expected empty
    double elapsed_seconds = 0.0;
};

// For every shifted-symmetric (n,b)-palintiple with 2 <= n < b <= max_base and
// length <= 3, tries every multiplier nhat != b passing the necessary
// divisibility conditions (nhat-1 | D(b-1)c_j/(n-1), nhat+1 | D(b+1)c_j/(n+1),
// D = gcd(d_0, nhat^2-1)) and attempts the full double-forward construction.
// jobs > 1 splits the (n,b) grid across threads; the merge order is fixed.
PudwellScanReport scan_pudwell_nonstandard(std::int64_t max_base, int jobs = 1);

} // namespace palintiple
