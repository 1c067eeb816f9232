// End-to-end acceptance gate. Every criterion prints exactly one line and the
// binary exits nonzero unless all twelve hold inside their time budgets.

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "palintiple/derive.hpp"
#include "palintiple/palinomial.hpp"
#include "palintiple/search.hpp"
#include "palintiple/younggraph.hpp"

using namespace palintiple;

namespace {

constexpr double kUnitCircleTol = 1e-6;
constexpr double kRootProductTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::string detail; // first failure, empty when clean
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) {
        o.pass = false;
        o.detail = why;
    }
}

PalintipleInstance lit(const std::string& text) {
    auto r = parse_literal(text);
    if (!r.ok()) throw std::logic_error("bad literal " + text + ": " + r.error().message);
    return r.value();
}

std::string ints_csv(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// every instance of the grid 2 <= n < b <= max_base at the given lengths
std::vector<PalintipleInstance> grid(std::int64_t max_base, std::int64_t min_len,
                                     std::int64_t max_len) {
    std::vector<PalintipleInstance> all;
    for (std::int64_t b = 3; b <= max_base; ++b) {
        EnumerationQuery q;
        q.base = b;
        q.multiplier = 0;
        q.min_length = min_len;
        q.max_length = max_len;
        auto r = enumerate_palintiples(q);
        if (!r.ok()) throw std::logic_error("enumerate failed: " + r.error().message);
        if (r.value().truncated) throw std::logic_error("grid truncated");
        for (auto& p : r.value().instances) all.push_back(std::move(p));
    }
    return all;
}

Outcome criterion_roundtrip() {
    Outcome o;
    const std::vector<std::pair<std::string, std::vector<Int>>> table = {
        {"8,7,1,2@10*4", {0, 3, 3, 0}},
        {"28,25,108,113,2@139*10", {8, 7, 1, 2, 0}},
        {"37,89,2@129*14", {9, 4, 0}},
        {"34,1,0,1@55*34", {0, 1, 21, 0}},
        {"6,15,1@23*4", {2, 1, 0}},
        {"14,12,5,1@17*11", {3, 8, 9, 0}},
        {"11,9,1,4,1@14*9", {2, 1, 6, 7, 0}},
    };
    for (const auto& [text, carries] : table) {
        auto p = lit(text);
        if (!validate(p).pass) {
            fail(o, text + " does not validate");
            continue;
        }
        if (p.carries_msf() != carries) {
            fail(o, text + " carries " + ints_csv(p.carries_msf()) + " want " + ints_csv(carries));
            continue;
        }
        auto digits = digits_from_carries_display(p.multiplier, p.base, carries);
        if (!digits.ok()) {
            fail(o, text + " carries do not invert: " + digits.error().message);
            continue;
        }
        if (digits.value() != p.digits) fail(o, text + " digit reconstruction differs");
    }
    return o;
}

Outcome criterion_oracle() {
    Outcome o;
    for (std::int64_t b = 3; b <= 16; ++b) {
        for (std::int64_t n = 2; n < b; ++n) {
            std::set<std::string> slow;
            for (std::int64_t len = 2; len <= 5; ++len) {
                auto r = brute_force_oracle(n, b, len);
                if (!r.ok()) {
                    fail(o, "oracle refused n=" + std::to_string(n) + " b=" + std::to_string(b));
                    continue;
                }
                for (const auto& p : r.value()) slow.insert(p.literal());
            }
            EnumerationQuery q;
            q.base = b;
            q.multiplier = n;
            q.min_length = 2;
            q.max_length = 5;
            auto fast = enumerate_palintiples(q);
            if (!fast.ok()) {
                fail(o, "enumerate failed n=" + std::to_string(n) + " b=" + std::to_string(b));
                continue;
            }
            std::set<std::string> quick;
            for (const auto& p : fast.value().instances) quick.insert(p.literal());
            if (quick != slow)
                fail(o, "enumerate disagrees with the oracle at n=" + std::to_string(n) +
                            " b=" + std::to_string(b));
        }
    }
    return o;
}

Outcome criterion_hoey_table() {
    Outcome o;
    auto f = theorem_family(lit("2,1,2,0,1@3*2"), TheoremTag::hoey);
    if (!f.ok()) return {false, "family rejected: " + f.error().message};
    if (!(f.value().base == AffineValue{6, 8, 1})) fail(o, "base is not 6+8a");
    const std::vector<std::string> rows = {"5,3,12,8,10,1@14*3", "8,5,19,13,16,2@22*3",
                                           "11,7,26,18,22,3@30*3"};
    for (std::size_t a = 1; a <= rows.size(); ++a) {
        auto inst = instantiate(f.value(), Int(a));
        if (!inst.ok()) {
            fail(o, "alpha " + std::to_string(a) + " rejected");
            continue;
        }
        if (inst.value().literal() != rows[a - 1])
            fail(o, "alpha " + std::to_string(a) + " gives " + inst.value().literal());
        if (!validate(inst.value()).pass) fail(o, rows[a - 1] + " does not validate");
        if (classify(inst.value()) != PalinClass::asymmetric) fail(o, rows[a - 1] + " not asymmetric");
    }
    return o;
}

Outcome criterion_sutcliffe_pudwell() {
    Outcome o;
    auto source = lit("3,1@5*2");
    auto s5 = theorem_family(source, TheoremTag::sutcliffe, Int(5));
    if (!s5.ok() || instantiate(s5.value(), 1).value().literal() != "8,29,1@39*5")
        fail(o, "sutcliffe nhat 5 misses 8,29,1@39*5");
    auto s9 = theorem_family(source, TheoremTag::sutcliffe, Int(9));
    if (!s9.ok() || instantiate(s9.value(), 1).value().literal() != "12,40,1@107*9")
        fail(o, "sutcliffe nhat 9 misses 12,40,1@107*9");

    auto r9 = theorem_family(source, TheoremTag::rho_sutcliffe, Int(9));
    if (!r9.ok()) {
        fail(o, "rho-sutcliffe rejected");
    } else {
        if (!(r9.value().base == AffineValue{3, 80, 1})) fail(o, "rho base is not 3+80a");
        for (Int a = 1; a <= 5; ++a) {
            auto inst = instantiate(r9.value(), a);
            if (!inst.ok()) {
                fail(o, "rho-sutcliffe alpha " + a.str() + " rejected");
                continue;
            }
            std::vector<Int> want = {1 + 27 * a, 10 * a, 3 * a}; // most significant first
            if (inst.value().digits_msf() != want || !validate(inst.value()).pass)
                fail(o, "rho-sutcliffe alpha " + a.str() + " digits differ");
        }
    }

    auto pud = theorem_family(lit("47,7@55*6"), TheoremTag::pudwell);
    if (!pud.ok()) {
        fail(o, "pudwell rejected");
    } else {
        auto inst = instantiate(pud.value(), 4);
        if (!inst.ok()) {
            fail(o, "pudwell alpha 4 rejected");
        } else {
            const auto& p = inst.value();
            if (p.multiplier != 55 || p.base != 1728) fail(o, "pudwell alpha 4 lands elsewhere");
            if (ints_csv(p.carries_msf()) != "0,47,7,0") fail(o, "pudwell carries differ");
            if (!validate(p).pass) fail(o, "pudwell alpha 4 invalid");
        }
    }

    auto rp = theorem_family(source, TheoremTag::rho_pudwell);
    if (!rp.ok()) {
        fail(o, "rho-pudwell rejected");
    } else {
        for (Int a : {Int(1), Int(4), Int(7)}) {
            auto inst = instantiate(rp.value(), a);
            if (!inst.ok() || !validate(inst.value()).pass)
                fail(o, "rho-pudwell alpha " + a.str() + " fails");
        }
    }
    return o;
}

Outcome criterion_rho_hoey() {
    Outcome o;
    auto f = theorem_family(lit("8,7,1,2@10*4"), TheoremTag::rho_hoey);
    if (!f.ok()) return {false, "rho-hoey rejected: " + f.error().message};
    if (f.value().base.a0 != 52) fail(o, "offset ell is not 52");
    for (Int a = 1; a <= 3; ++a) {
        auto inst = instantiate(f.value(), a);
        if (!inst.ok() || !validate(inst.value()).pass) {
            fail(o, "alpha " + a.str() + " fails");
            continue;
        }
        if (ints_csv(inst.value().carries_msf()) != "2,1,7,8,0")
            fail(o, "alpha " + a.str() + " carries differ");
    }
    auto zero = instantiate(f.value(), 0, true);
    if (!zero.ok() || !validate(zero.value()).pass) fail(o, "alpha 0 fails with the flag");
    if (instantiate(f.value(), 0).ok()) fail(o, "alpha 0 admitted without the flag");
    return o;
}

Outcome criterion_double_impossible() {
    Outcome o;
    std::size_t sources = 0;
    for (const auto& p : grid(16, 2, 6)) {
        if (classify(p) != PalinClass::symmetric) continue;
        if (p.base % (p.multiplier + 1) != 0) continue;
        ++sources;
        Int top = 2 * p.base * p.base;
        Int maxd = 0;
        for (const auto& d : p.digits) maxd = std::max(maxd, d);
        for (Int nhat = 2; nhat <= top; ++nhat) {
            auto f = derive_family(p, DerivationMode::double_forward, nhat);
            if (f.ok()) {
                fail(o, "double derivation from " + p.literal() + " at nhat " + nhat.str());
                break;
            }
            // small multipliers die on the carry bound, the rest on the congruences
            auto want = nhat <= maxd ? errc::carry_too_large : errc::no_solution;
            if (f.error().code != want) {
                fail(o, p.literal() + " nhat " + nhat.str() + " wrong error kind");
                break;
            }
        }
    }
    if (sources == 0) fail(o, "no symmetric sources found");
    return o;
}

Outcome criterion_palinomial() {
    Outcome o;
    auto all = grid(16, 2, 6);
    std::size_t symmetric_1089 = 0, shifted = 0;
    for (const auto& p : all) {
        auto r = check_identity(IdentityKind::linear_factor, p);
        if (!r.ok() || !r.value().pass) {
            fail(o, "linear factor fails on " + p.literal());
            continue;
        }
        auto cls = classify(p);
        if (cls == PalinClass::symmetric && p.base % (p.multiplier + 1) == 0) {
            ++symmetric_1089;
            auto d = check_identity(IdentityKind::digit_poly_1089, p);
            if (!d.ok() || !d.value().pass) fail(o, "digit identity fails on " + p.literal());
        } else if (cls == PalinClass::shifted_symmetric) {
            ++shifted;
            auto d = check_identity(IdentityKind::digit_poly_shifted, p);
            if (!d.ok() || !d.value().pass) fail(o, "shifted identity fails on " + p.literal());
        }
    }
    if (symmetric_1089 == 0 || shifted == 0) fail(o, "identity populations came up empty");

    // the worked eight-digit expansion, by exact arithmetic
    auto ph = lit("28,25,136,138,138,110,113,2@139*10");
    IntPolynomial cyc({1, 1, 1, 1, 1});
    auto prod = IntPolynomial::linear(-139, 1) * IntPolynomial({2, -1, 8}) * cyc;
    if (!(build_polynomials(ph).pal == prod)) fail(o, "worked expansion differs");
    auto src = lit("8,7,9,9,9,1,2@10*4");
    auto chk = check_identity(IdentityKind::derived_forward, src, &ph);
    if (!chk.ok() || !chk.value().pass) fail(o, "derived identity fails on the worked pair");
    return o;
}

Outcome criterion_unit_circle() {
    Outcome o;
    std::size_t tested = 0;
    for (const auto& p : grid(16, 2, 6)) {
        if (classify(p) != PalinClass::symmetric || p.base % (p.multiplier + 1) != 0) continue;
        auto set = build_polynomials(p);
        if (set.carry.degree() < 1) continue;
        ++tested;
        auto uc = unit_circle_root_check(set.carry, kUnitCircleTol);
        if (!uc.ok() || !uc.value().pass) {
            fail(o, "no unit circle root for " + p.literal());
            continue;
        }
        // quadratic factor d_k x^2 - x + d_0: its root product must be 1/n
        IntPolynomial quad({p.digits.front(), -1, p.digits.back()});
        auto roots = find_roots(quad);
        if (!roots.ok() || roots.value().size() != 2) {
            fail(o, "quadratic roots missing for " + p.literal());
            continue;
        }
        auto prod = roots.value()[0] * roots.value()[1];
        double inv_n = 1.0 / p.multiplier.convert_to<double>();
        if (std::abs(prod - std::complex<double>(inv_n, 0)) > kRootProductTol)
            fail(o, "root product differs from 1/n for " + p.literal());
    }
    if (tested == 0) fail(o, "no instances to test");
    return o;
}

Outcome criterion_young() {
    Outcome o;
    auto y910 = build_young_graph(9, 10);
    if (!y910.ok()) return {false, "Y(9,10) failed to build"};
    std::vector<std::pair<Int, Int>> nodes;
    for (const auto& n : y910.value().nodes) nodes.push_back({n.u, n.w});
    if (nodes != std::vector<std::pair<Int, Int>>{{0, 0}, {0, 8}, {8, 0}, {8, 8}})
        fail(o, "Y(9,10) nodes differ");

    // a pair with no palintiples at all comes back as a degenerate error; such
    // a graph is never the 1089 one and must agree with empty enumerations
    for (std::int64_t b = 3; b <= 16; ++b)
        for (std::int64_t n = 2; n < b; ++n) {
            auto g = build_young_graph(n, b);
            if (!g.ok() && g.error().code != errc::degenerate) {
                fail(o, "Y build failed at n=" + std::to_string(n) + " b=" + std::to_string(b));
                continue;
            }
            bool is1089 = g.ok() && is_1089_graph(g.value());
            if (is1089 != (b % (n + 1) == 0))
                fail(o, "is_1089 mismatch at n=" + std::to_string(n) + " b=" + std::to_string(b));
            for (std::int64_t len = 2; len <= 5; ++len) {
                std::set<std::string> walked, direct;
                if (g.ok()) {
                    auto w = accepted_paths(g.value(), len);
                    if (!w.ok()) {
                        fail(o, "paths failed");
                        continue;
                    }
                    for (const auto& p : w.value()) walked.insert(p.literal());
                }
                EnumerationQuery q;
                q.base = b;
                q.multiplier = n;
                q.min_length = len;
                q.max_length = len;
                auto r = enumerate_palintiples(q);
                if (!r.ok()) {
                    fail(o, "enumerate failed");
                    continue;
                }
                for (const auto& p : r.value().instances) direct.insert(p.literal());
                if (walked != direct)
                    fail(o, "paths disagree with enumeration at n=" + std::to_string(n) +
                                " b=" + std::to_string(b) + " len=" + std::to_string(len));
            }
        }

    auto y314 = build_young_graph(3, 14);
    for (std::int64_t b : {14, 22, 30}) {
        auto g = build_young_graph(3, b);
        if (!y314.ok() || !g.ok()) {
            fail(o, "derived graph build failed");
            continue;
        }
        auto iso = isomorphic(y314.value(), g.value());
        if (!iso.ok() || !iso.value()) fail(o, "Y(3,14) vs Y(3," + std::to_string(b) + ")");
    }

    auto y25 = build_young_graph(2, 5);
    if (!y25.ok()) {
        fail(o, "Y(2,5) failed to build");
    } else {
        auto m = is_complete(y25.value());
        if (!m || *m != 2) fail(o, "Y(2,5) is not complete");
    }
    return o;
}

Outcome criterion_correspondence() {
    Outcome o;
    auto r1 = correspondence_check(2, 3, 3, 14, 8);
    if (!r1.ok() || !r1.value().carries_are_digits || !r1.value().digits_are_carries)
        fail(o, "(2,3) to (3,14) correspondence fails");
    auto r2 = correspondence_check(2, 5, 5, 39, 6);
    if (!r2.ok() || !r2.value().carries_are_digits || !r2.value().digits_are_carries)
        fail(o, "(2,5) to (5,39) correspondence fails");
    auto r3 = correspondence_check(2, 5, 9, 107, 6);
    if (!r3.ok() || r3.value().carries_are_digits) {
        fail(o, "(2,5) to (9,107) direction one unexpectedly holds");
    } else if (r3.value().carry_issues.empty()) {
        fail(o, "counterexample missing");
    } else {
        auto wit = lit(r3.value().carry_issues.front().literal);
        if (ints_csv(wit.carries_msf()) != "6,2,0")
            fail(o, "counterexample carries are " + ints_csv(wit.carries_msf()));
    }
    if (r3.ok() && !r3.value().digits_are_carries) fail(o, "(9,107) digits direction fails");
    return o;
}

Outcome criterion_permutiple() {
    Outcome o;
    auto small = permutiple_search({2, 1, 0}, 4, 4, 2, 3);
    bool found = false;
    for (const auto& w : small.value())
        found = found || (w.multiplier == 2 && w.target_msf == std::vector<std::int64_t>{2, 1, 0} &&
                          w.operand_msf == std::vector<std::int64_t>{1, 0, 2});
    if (!small.ok() || !found) fail(o, "2,1,0 base 4 witness missing");

    auto nine = permutiple_search({2, 1, 6, 7}, 9, 9, 2, 8);
    found = false;
    for (const auto& w : nine.value())
        found = found || (w.multiplier == 4 && w.target_msf == std::vector<std::int64_t>{6, 7, 2, 1} &&
                          w.operand_msf == std::vector<std::int64_t>{1, 6, 2, 7});
    if (!nine.ok() || !found) fail(o, "2,1,6,7 base 9 witness missing");

    auto none = permutiple_search({3, 8, 9}, 10, 64, 2, 63);
    if (!none.ok() || !none.value().empty()) fail(o, "3,8,9 search is not empty");
    return o;
}

Outcome criterion_scan() {
    Outcome o;
    auto rep = scan_pudwell_nonstandard(100, 2);
    for (const auto& w : rep.witnesses)
        if (Int(w.nhat) != w.source.base) fail(o, "nonstandard witness " + w.source.literal());
    if (!rep.witnesses.empty()) fail(o, "scan found witnesses");
    if (rep.population.empty() || rep.sources_examined == 0) fail(o, "report lacks its population");
    if (rep.max_base != 100) fail(o, "wrong bound");
    return o;
}

struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"round trip and validation on the seven quoted instances", 1, criterion_roundtrip},
        {"enumeration agrees with the digit-loop oracle to base 16", 60, criterion_oracle},
        {"ternary family table rows at alpha 1..3, all asymmetric", 1, criterion_hoey_table},
        {"sutcliffe, rho-sutcliffe, pudwell and rho-pudwell members", 1, criterion_sutcliffe_pudwell},
        {"rho-hoey offset 52 with the alpha 0 flag", 1, criterion_rho_hoey},
        {"double forward derivation is impossible from symmetric sources", 120,
         criterion_double_impossible},
        {"polynomial identities across the base-16 grid", 30, criterion_palinomial},
        {"carry roots on the unit circle, quadratic product 1/n", 10, criterion_unit_circle},
        {"young graphs: nodes, 1089 detection, isomorphy, completeness, walks", 60, criterion_young},
        {"carries-digits correspondence with its counterexample", 60, criterion_correspondence},
        {"permutiple witnesses and the bounded empty search", 60, criterion_permutiple},
        {"no double derivation with a fresh multiplier to base 100", 600, criterion_scan},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && elapsed > criteria[i].budget_seconds) {
            o.pass = false;
            o.detail = "over budget";
        }
        if (!o.pass) ++failures;
        std::printf("criterion %2zu: %s  %-66s %7.2fs of %.0fs%s%s\n", i + 1,
                    o.pass ? "PASS" : "FAIL", criteria[i].label, elapsed,
                    criteria[i].budget_seconds, o.detail.empty() ? "" : "  ",
                    o.detail.c_str());
    }
    std::printf("%d of 12 criteria pass\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
