#include "palintiple/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "palintiple/derive.hpp"

namespace palintiple {

namespace {

// One (n, b, L) cell of the walk. Appends hits in value order.
void enumerate_cell(std::int64_t n, std::int64_t b, std::int64_t L,
                    std::vector<PalintipleInstance>& out, std::size_t cap, bool& truncated) {
    const std::int64_t k = L - 1;
    const std::int64_t half = L / 2;
    const bool odd = (L % 2) != 0;
    std::vector<std::int64_t> low(half), high(half);
    std::vector<Int> digits(static_cast<std::size_t>(L));

    // state at step t: u = c_t, w = c_{k-t+1}
    auto emit = [&](std::int64_t middle) {
        for (std::int64_t t = 0; t < half; ++t) {
            digits[static_cast<std::size_t>(t)] = low[static_cast<std::size_t>(t)];
            digits[static_cast<std::size_t>(k - t)] = high[static_cast<std::size_t>(t)];
        }
        if (odd) digits[static_cast<std::size_t>(half)] = middle;
        auto inst = make_instance(n, b, digits);
        // the walk only produces genuine palintiples; anything else is a defect
        if (!inst.ok()) throw std::logic_error("enumeration produced a non-palintiple");
        if (out.size() >= cap) { truncated = true; return; }
        out.push_back(std::move(inst).value());
    };

    auto step = [&](auto&& self, std::int64_t t, std::int64_t u, std::int64_t w) -> void {
        if (truncated) return;
        if (t == half) {
            if (!odd) {
                if (u == w) emit(0);
            } else {
                std::int64_t num = b * w - u;
                if (num % (n - 1) == 0) {
                    std::int64_t m = num / (n - 1);
                    if (m >= 0 && m < b) emit(m);
                }
            }
            return;
        }
        for (std::int64_t dh = 0; dh < b; ++dh) {
            std::int64_t t1 = n * dh + u;
            std::int64_t dl = t1 % b;
            std::int64_t u2 = t1 / b;
            if (u2 > n - 1) continue;
            if (t == 0 && (dl < 1 || dh < 1)) continue;
            std::int64_t w2 = dh + b * w - n * dl;
            if (w2 < 0 || w2 > n - 1) continue;
            low[static_cast<std::size_t>(t)] = dl;
            high[static_cast<std::size_t>(t)] = dh;
            self(self, t + 1, u2, w2);
        }
    };
    if (n >= 2 && b > n) step(step, 0, 0, 0);
}

} // namespace

Result<EnumerationResult> enumerate_palintiples(const EnumerationQuery& q) {
    if (q.base < 3) return Error{errc::bad_argument, "base must be at least 3"};
    if (q.multiplier != 0 && (q.multiplier < 2 || q.multiplier >= q.base))
        return Error{errc::bad_argument, "multiplier must satisfy 2 <= n < b"};
    if (q.min_length < 2 || q.max_length < q.min_length)
        return Error{errc::bad_argument, "need 2 <= min_length <= max_length"};

    EnumerationResult res;
    std::vector<std::int64_t> mults;
    if (q.multiplier != 0) mults.push_back(q.multiplier);
    else
        for (std::int64_t n = 2; n < q.base; ++n) mults.push_back(n);

    for (std::int64_t n : mults) {
        std::vector<PalintipleInstance> cell;
        for (std::int64_t L = q.min_length; L <= q.max_length; ++L)
            enumerate_cell(n, q.base, L, cell, q.cap - res.instances.size(), res.truncated);
        std::sort(cell.begin(), cell.end());
        for (auto& p : cell) res.instances.push_back(std::move(p));
        if (res.truncated) break;
    }
    return res;
}

Result<std::vector<PalintipleInstance>> brute_force_oracle(std::int64_t n, std::int64_t b,
                                                           std::int64_t length,
                                                           std::uint64_t guard) {
    if (n < 2 || b <= n) return Error{errc::bad_argument, "need 2 <= n < b"};
    if (length < 2) return Error{errc::bad_argument, "need length >= 2"};
    long double size = powl(static_cast<long double>(b), static_cast<long double>(length));
    if (size > static_cast<long double>(guard))
        return Error{errc::bound_exceeded, "b^L exceeds the oracle guard"};

    std::uint64_t lo = 1;
    for (std::int64_t i = 1; i < length; ++i) lo *= static_cast<std::uint64_t>(b);
    std::uint64_t hi = lo * static_cast<std::uint64_t>(b);

    std::vector<PalintipleInstance> found;
    for (std::uint64_t p = lo; p < hi; ++p) {
        if (p % static_cast<std::uint64_t>(b) == 0) continue; // trailing zero
        auto digs = digits_of(p, b);
        std::uint64_t rev = 0;
        for (auto it = digs.begin(); it != digs.end(); ++it)
            rev = rev * static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(*it);
        if (p != static_cast<std::uint64_t>(n) * rev) continue;
        std::vector<Int> lsf(digs.begin(), digs.end());
        auto inst = make_instance(n, b, lsf);
        if (!inst.ok())
            return Error{errc::not_a_palintiple,
                         "value loop found a multiple whose carries misbehave: " + std::to_string(p)};
        found.push_back(std::move(inst).value());
    }
    return found;
}

PudwellScanReport scan_pudwell_nonstandard(std::int64_t max_base, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    PudwellScanReport rep;
    rep.max_base = max_base;
    {
        std::ostringstream os;
        os << "all shifted-symmetric (n,b)-palintiples with 2 <= n < b <= " << max_base
           << " and length <= 3";
        rep.population = os.str();
    }

    struct CellOut {
        std::uint64_t sources = 0;
        std::uint64_t candidates = 0;
        std::vector<PudwellScanWitness> witnesses;
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t b = 3; b <= max_base; ++b)
        for (std::int64_t n = 2; n < b; ++n) cells.emplace_back(n, b);
    std::vector<CellOut> outs(cells.size());

    auto run_cell = [&](std::size_t idx) {
        auto [n, b] = cells[idx];
        CellOut& co = outs[idx];
        EnumerationQuery q;
        q.multiplier = n;
        q.base = b;
        q.min_length = 2;
        q.max_length = 3;
        auto res = enumerate_palintiples(q);
        if (!res.ok()) return;
        for (const auto& p : res.value().instances) {
            if (classify(p) != PalinClass::shifted_symmetric) continue;
            ++co.sources;
            const std::size_t k = p.top_index();
            const Int nn = p.multiplier, bb = p.base;
            Int max_digit = 0;
            for (const auto& d : p.digits) max_digit = std::max(max_digit, d);
            // nhat-1 must divide D(b-1)c_j/(n-1) for every nonzero carry and
            // D <= d_0, so candidates above d_0(b-1)c_min/(n-1) are impossible.
            Int cmin = 0;
            for (std::size_t j = 1; j <= k; ++j)
                if (p.carries[j] != 0 && (cmin == 0 || p.carries[j] < cmin)) cmin = p.carries[j];
            if (cmin == 0) continue; // all-zero carries cannot happen for valid p
            Int nhat_hi = p.digits[0] * (bb - 1) * cmin / (nn - 1) + 1;
            for (Int nhat = max_digit + 1; nhat <= nhat_hi; ++nhat) {
                if (nhat == bb || nhat < 2) continue;
                Int D = gcd(p.digits[0], nhat * nhat - 1);
                bool pass = true;
                for (std::size_t j = 1; j <= k && pass; ++j) {
                    const Int& cj = p.carries[j];
                    if (cj == 0) continue;
                    if ((D * (bb - 1) * cj / (nn - 1)) % (nhat - 1) != 0) pass = false;
                    else if ((D * (bb + 1) * cj / (nn + 1)) % (nhat + 1) != 0) pass = false;
                }
                if (!pass) continue;
                ++co.candidates;
                auto fam = derive_family(p, DerivationMode::double_forward, nhat);
                if (fam.ok()) {
                    PudwellScanWitness w;
                    w.source = p;
                    w.nhat = static_cast<std::int64_t>(nhat);
                    w.family_summary = describe_family(fam.value());
                    co.witnesses.push_back(std::move(w));
                }
            }
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                run_cell(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& co : outs) {
        rep.sources_examined += co.sources;
        rep.candidates_tested += co.candidates;
        for (auto& w : co.witnesses) rep.witnesses.push_back(std::move(w));
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace palintiple
