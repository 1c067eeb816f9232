#include "palintiple/fixtures.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "palintiple/cli.hpp"
#include "palintiple/derive.hpp"
#include "palintiple/palinomial.hpp"
#include "palintiple/search.hpp"
#include "palintiple/younggraph.hpp"

namespace palintiple {

namespace {

PalintipleInstance lit(const std::string& text) {
    auto r = parse_literal(text);
    if (!r.ok()) throw std::logic_error("fixture literal: " + r.error().message);
    return r.value();
}

std::string join_ints(const std::vector<Int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::string join_literals(const std::vector<PalintipleInstance>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << "; ";
        os << v[i].literal();
    }
    return os.str();
}

// family description, optionally followed by the alpha = 1 member
std::string family_str(Result<ParametricFamily> f, bool with_first = false) {
    if (!f.ok()) return f.error().message;
    std::string s = describe_family(f.value());
    if (with_first) {
        auto inst = instantiate(f.value(), f.value().alpha.min_alpha);
        if (!inst.ok()) return s + "; instantiation failed: " + inst.error().message;
        s += "; first member " + inst.value().literal();
    }
    return s;
}

std::string classify_str(const std::string& text) {
    return palin_class_name(classify(lit(text)));
}

std::string validate_str(const std::string& text) {
    auto p = lit(text);
    auto rep = validate(p);
    if (!rep.pass) return "invalid: " + rep.first_violation;
    std::ostringstream os;
    os << "valid: " << p.value() << " = " << p.multiplier << " * " << p.reversed_value();
    return os.str();
}

std::string enumerate_str(std::int64_t n, std::int64_t b, std::int64_t len) {
    EnumerationQuery q;
    q.multiplier = n;
    q.base = b;
    q.min_length = len;
    q.max_length = len;
    auto r = enumerate_palintiples(q);
    if (!r.ok()) return r.error().message;
    return join_literals(r.value().instances);
}

std::string scan_str(std::int64_t max_base) {
    auto rep = scan_pudwell_nonstandard(max_base, 2);
    std::ostringstream os;
    os << "witnesses=" << rep.witnesses.size() << " sources=" << rep.sources_examined;
    return os.str();
}

std::string permutiple_str(const std::vector<std::int64_t>& digits, std::int64_t b0, std::int64_t b1,
                           std::int64_t m0, std::int64_t m1) {
    auto r = permutiple_search(digits, b0, b1, m0, m1);
    if (!r.ok()) return r.error().message;
    if (r.value().empty()) return "no witnesses";
    std::ostringstream os;
    for (std::size_t i = 0; i < r.value().size(); ++i) {
        const auto& w = r.value()[i];
        if (i) os << "; ";
        for (std::size_t j = 0; j < w.target_msf.size(); ++j) os << (j ? "," : "") << w.target_msf[j];
        os << "@" << w.base << " = " << w.multiplier << " * ";
        for (std::size_t j = 0; j < w.operand_msf.size(); ++j) os << (j ? "," : "") << w.operand_msf[j];
        os << "@" << w.base;
    }
    return os.str();
}

std::string node_set_str(const YoungGraph& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (i) os << " ";
        os << "(" << g.nodes[i].u << "," << g.nodes[i].w << ")";
    }
    return os.str();
}

std::string correspond_str(std::int64_t n, std::int64_t b, std::int64_t nh, std::int64_t bh,
                           std::int64_t max_len) {
    auto r = correspondence_check(n, b, nh, bh, max_len);
    if (!r.ok()) return r.error().message;
    const auto& rep = r.value();
    std::ostringstream os;
    os << "carries-are-digits " << (rep.carries_are_digits ? "pass" : "fail");
    if (!rep.carries_are_digits && !rep.carry_issues.empty()) {
        auto wit = lit(rep.carry_issues.front().literal);
        os << " at " << wit.literal() << " with carries " << join_ints(wit.carries_msf());
    }
    os << "; digits-are-carries " << (rep.digits_are_carries ? "pass" : "fail");
    return os.str();
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
    std::string s = out.str();
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

std::vector<Fixture> build_corpus() {
    std::vector<Fixture> all;
    auto add = [&](std::string id, int section, std::string description, std::string expected,
                   std::function<std::string()> observe, bool long_running = false) {
        all.push_back({std::move(id), section, std::move(description), std::move(expected),
                       long_running, std::move(observe)});
    };

    // section 1: the classic multiply-by-reversal instances and their carries
    add("carries-classic-quadruple", 1,
        "carry sequence of 8712 = 4 * 2178 in base ten, most significant first",
        "0,3,3,0",
        [] { return join_ints(lit("8,7,1,2@10*4").carries_msf()); });
    add("carries-derived-quintuple", 1,
        "carry sequence of the five-digit multiplier-ten instance over base 139",
        "8,7,1,2,0",
        [] { return join_ints(lit("28,25,108,113,2@139*10").carries_msf()); });
    add("digits-from-carries-classic", 1,
        "digits reconstructed from the carries (0,3,3,0) alone, multiplier 4 base 10",
        "8,7,1,2",
        [] {
            auto d = digits_from_carries_display(4, 10, {Int(0), Int(3), Int(3), Int(0)});
            if (!d.ok()) return d.error().message;
            auto v = d.value();
            return join_ints({v.rbegin(), v.rend()});
        });
    add("digits-from-carries-derived", 1,
        "digits reconstructed from the carries (0,8,7,1,2,0), multiplier 10 base 139",
        "28,25,108,113,2",
        [] {
            auto d = digits_from_carries_display(10, 139,
                                                 {Int(0), Int(8), Int(7), Int(1), Int(2), Int(0)});
            if (!d.ok()) return d.error().message;
            auto v = d.value();
            return join_ints({v.rbegin(), v.rend()});
        });
    add("validate-classic-quadruple", 1,
        "full from-scratch validation of 8712 = 4 * 2178",
        "valid: 8712 = 4 * 2178",
        [] { return validate_str("8,7,1,2@10*4"); });
    add("classify-symmetric-classic", 1,
        "8712 has palindromic carries, the symmetric class",
        "symmetric",
        [] { return classify_str("8,7,1,2@10*4"); });
    add("enumerate-classic-quadruple", 1,
        "the only four-digit multiplier-4 reverse multiple in base ten",
        "8,7,1,2@10*4",
        [] { return enumerate_str(4, 10, 4); });
    add("enumerate-classic-1089", 1,
        "the only four-digit multiplier-9 reverse multiple in base ten",
        "9,8,0,1@10*9",
        [] { return enumerate_str(9, 10, 4); });
    add("cli-classify-bytes", 1,
        "classify subcommand emits the class and display carries as compact JSON",
        R"({"class":"symmetric","carries":[0,3,3,0]})",
        [] { return run_cli({"classify", "--input", "8,7,1,2@10*4"}); });

    // section 3: single forward derivation and the ternary family table
    add("classify-asymmetric", 3,
        "the base-139 instance derived from 8712 has asymmetric carries",
        "asymmetric",
        [] { return classify_str("28,25,108,113,2@139*10"); });
    add("enumerate-ternary-quintuple", 3,
        "five-digit doubling palintiples in base three",
        "2,1,2,0,1@3*2",
        [] { return enumerate_str(2, 3, 5); });
    add("derive-ternary-family", 3,
        "single forward derivation from the ternary quintuple with new multiplier 3",
        "(3, 6+8a)-palintiples (2+3a, 1+2a, 5+7a, 3+5a, 4+6a, a) with carries "
        "(2, 1, 2, 0, 1, 0), alpha = 0 mod 1, alpha >= 1",
        [] { return family_str(derive_family(lit("2,1,2,0,1@3*2"), DerivationMode::single_forward, 3)); });
    add("hoey-classic-family", 3,
        "forward family built on 8712; its first member is the base-139 quintuple",
        "(10, 40+99a)-palintiples (8+20a, 7+18a, 31+77a, 32+81a, 2a) with carries "
        "(8, 7, 1, 2, 0), alpha = 0 mod 1, alpha >= 1; first member 28,25,108,113,2@139*10",
        [] { return family_str(theorem_family(lit("8,7,1,2@10*4"), TheoremTag::hoey), true); });
    add("hoey-alpha-two", 3,
        "the ternary family evaluated at alpha = 2 lands in base 22",
        "8,5,19,13,16,2@22*3",
        [] {
            auto f = theorem_family(lit("2,1,2,0,1@3*2"), TheoremTag::hoey);
            if (!f.ok()) return f.error().message;
            auto i = instantiate(f.value(), 2);
            return i.ok() ? i.value().literal() : i.error().message;
        });
    add("young-walk-ternary", 3,
        "the accepted five-step walks of the doubling base-three graph",
        "2,1,2,0,1@3*2",
        [] {
            auto g = build_young_graph(2, 3);
            if (!g.ok()) return g.error().message;
            auto p = accepted_paths(g.value(), 5);
            return p.ok() ? join_literals(p.value()) : p.error().message;
        });
    add("cli-family-table", 3,
        "family subcommand with three alphas reproduces the ternary table rows",
        "5,3,12,8,10,1@14*3; 8,5,19,13,16,2@22*3; 11,7,26,18,22,3@30*3",
        [] {
            std::ostringstream out, err;
            int code = run_command({"family", "--theorem", "hoey", "--input", "2,1,2,0,1@3*2",
                                    "--alphas", "3"},
                                   out, err);
            if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
            // pull the quoted instance literals out of the JSON instance array
            std::string s = out.str();
            auto at = s.find("\"instances\"");
            if (at == std::string::npos) return std::string("no instances array: ") + s;
            std::vector<std::string> lits;
            for (auto q = s.find('"', at + 11); q != std::string::npos; q = s.find('"', q + 1)) {
                auto q2 = s.find('"', q + 1);
                if (q2 == std::string::npos) break;
                std::string tok = s.substr(q + 1, q2 - q - 1);
                if (tok.find('@') != std::string::npos) lits.push_back(tok);
                q = q2;
                if (s.find(']', q) < s.find('"', q + 1)) break;
            }
            std::ostringstream os;
            for (std::size_t i = 0; i < lits.size(); ++i) os << (i ? "; " : "") << lits[i];
            return os.str();
        });

    // section 4: shifted-symmetric sources, their families, and the double scan
    add("classify-shifted-pair", 4,
        "the two-digit quintupling source over base five is shifted-symmetric",
        "shifted-symmetric",
        [] { return classify_str("3,1@5*2"); });
    add("derive-pair-family", 4,
        "single forward derivation from 31 base 5 with new multiplier 5; the base "
        "constant is 15+24a, not the 5+24a that drops the tens digit of 15, and the "
        "alpha = 1 member 8,29,1 over base 39 settles it",
        "(5, 15+24a)-palintiples (3+5a, 11+18a, a) with carries (3, 1, 0), "
        "alpha = 0 mod 1, alpha >= 1; first member 8,29,1@39*5",
        [] { return family_str(derive_family(lit("3,1@5*2"), DerivationMode::single_forward, 5), true); });
    add("pudwell-family-grand", 4,
        "double forward derivation from the base-55 pair, multiplier 55, alpha 4 mod 7",
        "(55, 432a)-palintiples (55a, (2585a-1)/7, (47a-6)/7, a) with carries "
        "(0, 47, 7, 0), alpha = 4 mod 7, alpha >= 4",
        [] { return family_str(theorem_family(lit("47,7@55*6"), TheoremTag::pudwell)); });
    add("pudwell-scan-hundred", 4,
        "double derivations with a fresh multiplier different from the new base, "
        "sources up to base 100: none exist",
        "witnesses=0 sources=894",
        [] { return scan_str(100); });
    add("pudwell-scan-fivehundred", 4,
        "the same scan pushed to base 500, still empty (enable with --long)",
        "witnesses=0 sources=10558",
        [] { return scan_str(500); }, true);

    // section 5: reversal-first derivations
    add("validate-octal-quadruple", 5,
        "the four-digit base-8 quintuple 5101 checks out as 2625 = 5 * 525",
        "valid: 2625 = 5 * 525",
        [] { return validate_str("5,1,0,1@8*5"); });
    add("rho-hoey-classic", 5,
        "reversal-first forward family on 8712; the base offset is 52",
        "(10, 52+99a)-palintiples (42+80a, 37+72a, 5+11a, 14+27a, 4+8a) with carries "
        "(2, 1, 7, 8, 0), alpha = 0 mod 1, alpha >= 1 (alpha = 0 also valid)",
        [] { return family_str(theorem_family(lit("8,7,1,2@10*4"), TheoremTag::rho_hoey)); });
    add("rho-sutcliffe-pair", 5,
        "reversal-first family from 31 base 5 with new multiplier 9",
        "(9, 3+80a)-palintiples (1+27a, 10a, 3a) with carries (1, 3, 0), "
        "alpha = 0 mod 1, alpha >= 1",
        [] { return family_str(theorem_family(lit("3,1@5*2"), TheoremTag::rho_sutcliffe, Int(9))); });
    add("rho-pudwell-alpha-one", 5,
        "double reversal-first family from 31 base 5, evaluated at alpha = 1",
        "5,1,0,1@8*5 with carries 0,1,3,0",
        [] {
            auto f = theorem_family(lit("3,1@5*2"), TheoremTag::rho_pudwell);
            if (!f.ok()) return f.error().message;
            auto i = instantiate(f.value(), 1);
            if (!i.ok()) return i.error().message;
            return i.value().literal() + " with carries " + join_ints(i.value().carries_msf());
        });

    // section 6: polynomial identities
    add("palinomial-seven-digit", 6,
        "the difference polynomial of the seven-digit instance 8799912 = 4 * 2199978 "
        "factors as 3(x-10)(x^4+x^3+x^2+x+1)",
        "3x^5-27x^4-27x^3-27x^2-27x-30",
        [] {
            auto s = build_polynomials(lit("8,7,9,9,9,1,2@10*4"));
            IntPolynomial cyc({Int(1), Int(1), Int(1), Int(1), Int(1)});
            auto prod = IntPolynomial::constant(3) * IntPolynomial::linear(-10, 1) * cyc;
            if (!(s.pal == prod)) return "does not match 3(x-10)(x^4+x^3+x^2+x+1): " + s.pal.str();
            return s.pal.str();
        });
    add("palinomial-derived-eight", 6,
        "the eight-digit derived instance over base 139 has difference polynomial "
        "(x-139)(8x^2-x+2)(x^4+x^3+x^2+x+1), and the derived identity closes exactly",
        "8x^7-1105x^6-964x^5-1242x^4-1242x^3-1250x^2-137x-278",
        [] {
            auto p = lit("8,7,9,9,9,1,2@10*4");
            auto ph = lit("28,25,136,138,138,110,113,2@139*10");
            auto s = build_polynomials(ph);
            IntPolynomial cyc({Int(1), Int(1), Int(1), Int(1), Int(1)});
            IntPolynomial quad({Int(2), Int(-1), Int(8)});
            auto prod = IntPolynomial::linear(-139, 1) * quad * cyc;
            if (!(s.pal == prod)) return "does not match the stated factorization: " + s.pal.str();
            auto chk = check_identity(IdentityKind::derived_forward, p, &ph);
            if (!chk.ok()) return chk.error().message;
            if (!chk.value().pass) return "derived identity residual " + chk.value().residual.str();
            return s.pal.str();
        });

    // section 7: equivalences, permutiples, and the graph view
    add("sutcliffe-hypothesis-gap", 7,
        "the base-14 pair rejects the single forward construction at multiplier 14: "
        "the closing parameter is fractional",
        "s = 378/12 is not an integer",
        [] {
            auto f = theorem_family(lit("9,4@14*2"), TheoremTag::sutcliffe, Int(14));
            return f.ok() ? "unexpected family: " + describe_family(f.value()) : f.error().message;
        });
    add("double-rho-tall", 7,
        "double reversal-first derivation from the base-23 pair with multiplier 34",
        "(34, 55a)-palintiples (34a, (34a-13)/21, (a-1)/21, a) with carries "
        "(0, 1, 21, 0), alpha = 1 mod 21, alpha >= 1; first member 34,1,0,1@55*34",
        [] { return family_str(derive_family(lit("21,1@23*11"), DerivationMode::double_rho, 34), true); });
    add("validate-eleven-lead", 7,
        "this five-digit quintuple is sometimes listed over base 9, which cannot hold "
        "a digit of 11; the value identity 447525 = 9 * 49725 fixes base 14",
        "valid: 447525 = 9 * 49725; carries 2,1,6,7,0",
        [] {
            auto p = lit("11,9,1,4,1@14*9");
            return validate_str("11,9,1,4,1@14*9") + "; carries " + join_ints(p.carries_msf());
        });
    add("permutiple-small-quad", 7,
        "the digits 2,1,0 admit a doubling rearrangement in base 4",
        "2,1,0@4 = 2 * 1,0,2@4",
        [] { return permutiple_str({2, 1, 0}, 4, 4, 2, 3); });
    add("permutiple-no-witness", 7,
        "the digits 3,8,9 admit no rearrangement multiple for bases up to 64 and "
        "multipliers up to 63",
        "no witnesses",
        [] { return permutiple_str({3, 8, 9}, 10, 64, 2, 63); });
    add("permutiple-footnote-niner", 7,
        "the digits 2,1,6,7 admit quadrupling rearrangements in base 9",
        "6,7,2,1@9 = 4 * 1,6,2,7@9; 7,2,1,6@9 = 4 * 1,7,2,6@9",
        [] { return permutiple_str({2, 1, 6, 7}, 9, 9, 2, 8); });
    add("young-classic-nodes", 7,
        "the pruned carry-pair graph for multiplier 9 base 10 has the four corner nodes",
        "(0,0) (0,8) (8,0) (8,8)",
        [] {
            auto g = build_young_graph(9, 10);
            return g.ok() ? node_set_str(g.value()) : g.error().message;
        });
    add("young-label-recycling", 7,
        "the nonzero digit-pair edge labels of the doubling base-three graph are "
        "exactly the nonzero carry nodes of the multiplier-3 base-14 graph",
        "(0,1) (1,0) (1,2) (2,1) (2,2)",
        [] {
            auto g23 = build_young_graph(2, 3);
            auto g314 = build_young_graph(3, 14);
            if (!g23.ok()) return g23.error().message;
            if (!g314.ok()) return g314.error().message;
            std::set<std::pair<Int, Int>> labels, nodes;
            for (const auto& e : g23.value().edges) labels.insert({e.d_low, e.d_high});
            for (const auto& n : g314.value().nodes) nodes.insert({n.u, n.w});
            labels.erase({Int(0), Int(0)});
            nodes.erase({Int(0), Int(0)});
            if (labels != nodes) return std::string("label set differs from node set");
            std::ostringstream os;
            bool first = true;
            for (const auto& [u, w] : labels) {
                if (!first) os << " ";
                first = false;
                os << "(" << u << "," << w << ")";
            }
            return os.str();
        });
    add("young-iso-derived", 7,
        "the multiplier-3 graphs over bases 14 and 22 are isomorphic",
        "isomorphic",
        [] {
            auto a = build_young_graph(3, 14);
            auto b = build_young_graph(3, 22);
            if (!a.ok()) return a.error().message;
            if (!b.ok()) return b.error().message;
            auto r = isomorphic(a.value(), b.value());
            if (!r.ok()) return r.error().message;
            return std::string(r.value() ? "isomorphic" : "not isomorphic");
        });
    add("young-not-1089", 7,
        "the multiplier-3 base-14 graph is not equivalent to the classic multiplier-9 "
        "base-10 graph",
        "distinct",
        [] {
            auto g = build_young_graph(3, 14);
            if (!g.ok()) return g.error().message;
            return std::string(is_1089_graph(g.value()) ? "equivalent" : "distinct");
        });
    add("correspond-ternary", 7,
        "carries of doubling base-three palintiples are digits of multiplier-3 base-14 "
        "ones and back, checked through length 8",
        "carries-are-digits pass; digits-are-carries pass",
        [] { return correspond_str(2, 3, 3, 14, 8); });
    add("correspond-counterexample", 7,
        "the quintupling base-five to multiplier-9 base-107 correspondence fails "
        "forward: a three-digit instance has carries that are not source digits",
        "carries-are-digits fail at 24,80,2@107*9 with carries 6,2,0; "
        "digits-are-carries pass",
        [] { return correspond_str(2, 5, 9, 107, 6); });
    add("correspond-pair", 7,
        "the quintupling base-five to multiplier-5 base-39 correspondence holds both "
        "ways through length 6",
        "carries-are-digits pass; digits-are-carries pass",
        [] { return correspond_str(2, 5, 5, 39, 6); });
    add("cli-young-iso-bytes", 7,
        "young iso subcommand answers with compact JSON",
        R"({"isomorphic":true})",
        [] { return run_cli({"young", "iso", "3,14", "3,22"}); });

    return all;
}

} // namespace

const std::vector<Fixture>& fixture_corpus() {
    static const std::vector<Fixture> corpus = build_corpus();
    return corpus;
}

std::string corrupt_expectation(const std::string& expected) {
    std::string s = expected;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        unsigned char c = static_cast<unsigned char>(*it);
        if (std::isdigit(c)) {
            *it = (*it == '9') ? '0' : static_cast<char>(*it + 1);
            return s;
        }
        if (std::isalpha(c)) {
            *it = (*it == 'z' || *it == 'Z') ? static_cast<char>(*it - 25)
                                             : static_cast<char>(*it + 1);
            return s;
        }
    }
    return s + "X";
}

std::vector<FixtureOutcome> run_fixtures(const CorpusFilter& filter) {
    std::vector<FixtureOutcome> outcomes;
    for (const auto& f : fixture_corpus()) {
        if (filter.section != 0 && f.section != filter.section) continue;
        FixtureOutcome o;
        o.fixture = &f;
        if (f.long_running && !filter.include_long) {
            o.skipped = true;
            outcomes.push_back(std::move(o));
            continue;
        }
        std::string want = f.expected;
        if (filter.inject_fault == f.id) want = corrupt_expectation(want);
        try {
            o.observed = f.observe();
        } catch (const std::exception& e) {
            o.observed = std::string("exception: ") + e.what();
        }
        o.passed = o.observed == want;
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

} // namespace palintiple
