#include "palintiple/cli.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "palintiple/derive.hpp"
#include "palintiple/fixtures.hpp"
#include "palintiple/palinomial.hpp"
#include "palintiple/search.hpp"
#include "palintiple/younggraph.hpp"

namespace palintiple {

namespace {

using json = nlohmann::ordered_json;

json jint(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

json jints(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jint(x));
    return a;
}

json affine_json(const AffineValue& a) {
    json o;
    o["a0"] = jint(a.a0);
    o["a1"] = jint(a.a1);
    if (a.den != 1) o["den"] = jint(a.den);
    return o;
}

json poly_json(const IntPolynomial& q) {
    json o;
    o["coeffs"] = jints(q.coeffs());
    return o;
}

// usage problems exit 2, negative mathematical answers exit 1
int exit_for(const Error& e) {
    return (e.code == errc::parse_error || e.code == errc::bad_argument) ? 2 : 1;
}

int emit_error(std::ostream& err, const Error& e) {
    err << e.message << "\n";
    return exit_for(e);
}

int usage_error(std::ostream& err, const std::string& msg) {
    err << msg << "\n";
    return 2;
}

// "7" or "3..9"
bool parse_range(const std::string& s, std::int64_t& lo, std::int64_t& hi) {
    auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            lo = hi = std::stoll(s, &used);
            return used == s.size();
        }
        lo = std::stoll(s.substr(0, dots), &used);
        if (used != dots) return false;
        std::string rest = s.substr(dots + 2);
        hi = std::stoll(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_pair(const std::string& s, std::int64_t& a, std::int64_t& b) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        a = std::stoll(s.substr(0, comma), &used);
        if (used != comma) return false;
        std::string rest = s.substr(comma + 1);
        b = std::stoll(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_csv_ints(const std::string& s, std::vector<std::int64_t>& out) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json root_json(const std::complex<double>& z) {
    json o;
    o["re"] = fmt12(z.real());
    o["im"] = fmt12(z.imag());
    return o;
}

json instance_json(const PalintipleInstance& p) {
    json o;
    o["literal"] = p.literal();
    o["value"] = jint(p.value());
    o["class"] = palin_class_name(classify(p));
    return o;
}

json family_json(const ParametricFamily& f, std::int64_t alphas) {
    json o;
    o["nhat"] = jint(f.nhat);
    json base = affine_json(f.base);
    o["base"] = base;
    json ds = json::array();
    for (const auto& d : f.digits_msf()) ds.push_back(affine_json(d));
    o["digits"] = ds;
    o["carries"] = jints(f.carries_msf());
    json al;
    al["residue"] = jint(f.alpha.residue);
    al["modulus"] = jint(f.alpha.modulus);
    al["min"] = jint(f.alpha.min_alpha);
    if (f.alpha.zero_admissible) al["zero_admissible"] = true;
    o["alpha"] = al;
    o["mode"] = mode_name(f.mode);
    if (f.theorem) o["theorem"] = theorem_name(*f.theorem);
    o["source"] = f.source.literal();
    if (alphas > 0) {
        json insts = json::array();
        for (std::int64_t i = 1; i <= alphas; ++i) {
            auto inst = instantiate(f, f.alpha.nth(static_cast<std::uint64_t>(i)));
            if (!inst.ok()) throw std::logic_error("family member failed: " + inst.error().message);
            insts.push_back(inst.value().literal());
        }
        o["instances"] = insts;
    }
    return o;
}

struct EnumerateArgs {
    std::int64_t base = 10;
    std::int64_t mult = 0;
    bool all_mults = false;
    std::string digits_spec;
    std::int64_t cap = 100000;
    bool tsv = false;
};

int do_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
    std::int64_t lo = 0, hi = 0;
    if (!parse_range(a.digits_spec, lo, hi))
        return usage_error(err, "--digits wants a length or a lo..hi range");
    if (a.all_mults == (a.mult != 0))
        return usage_error(err, "give exactly one of --mult and --all-mults");
    EnumerationQuery q;
    q.base = a.base;
    q.multiplier = a.all_mults ? 0 : a.mult;
    q.min_length = lo;
    q.max_length = hi;
    q.cap = a.cap;
    auto r = enumerate_palintiples(q);
    if (!r.ok()) return emit_error(err, r.error());
    const auto& res = r.value();
    if (a.tsv) {
        out << "literal\tvalue\tclass\n";
        for (const auto& p : res.instances)
            out << p.literal() << "\t" << p.value() << "\t" << palin_class_name(classify(p)) << "\n";
        return 0;
    }
    json o;
    o["base"] = a.base;
    if (a.all_mults)
        o["mult"] = "all";
    else
        o["mult"] = a.mult;
    o["lengths"] = json::array({lo, hi});
    o["count"] = res.instances.size();
    o["truncated"] = res.truncated;
    json insts = json::array();
    for (const auto& p : res.instances) insts.push_back(instance_json(p));
    o["instances"] = insts;
    out << o.dump() << "\n";
    return 0;
}

int do_classify(const std::string& input, std::ostream& out, std::ostream& err) {
    auto p = parse_literal(input);
    if (!p.ok()) return emit_error(err, p.error());
    json o;
    o["class"] = palin_class_name(classify(p.value()));
    o["carries"] = jints(p.value().carries_msf());
    out << o.dump() << "\n";
    return 0;
}

int do_derive(const std::string& input, const std::string& mode_s, std::int64_t nhat,
              std::int64_t alphas, std::ostream& out, std::ostream& err) {
    auto p = parse_literal(input);
    if (!p.ok()) return emit_error(err, p.error());
    auto m = parse_mode(mode_s);
    if (!m.ok()) return emit_error(err, m.error());
    auto f = derive_family(p.value(), m.value(), Int(nhat));
    if (!f.ok()) return emit_error(err, f.error());
    out << family_json(f.value(), alphas).dump() << "\n";
    return 0;
}

int do_family(const std::string& input, const std::string& theorem_s, std::int64_t nhat,
              std::int64_t alphas, std::ostream& out, std::ostream& err) {
    auto p = parse_literal(input);
    if (!p.ok()) return emit_error(err, p.error());
    auto t = parse_theorem(theorem_s);
    if (!t.ok()) return emit_error(err, t.error());
    std::optional<Int> nh;
    if (nhat > 0) nh = Int(nhat);
    auto f = theorem_family(p.value(), t.value(), nh);
    if (!f.ok()) return emit_error(err, f.error());
    out << family_json(f.value(), alphas).dump() << "\n";
    return 0;
}

int do_instantiate(const std::string& input, const std::string& theorem_s,
                   const std::string& mode_s, std::int64_t nhat, std::int64_t alpha,
                   bool allow_zero, std::ostream& out, std::ostream& err) {
    auto p = parse_literal(input);
    if (!p.ok()) return emit_error(err, p.error());
    Result<ParametricFamily> f{Error{errc::bad_argument, ""}};
    if (!theorem_s.empty()) {
        auto t = parse_theorem(theorem_s);
        if (!t.ok()) return emit_error(err, t.error());
        std::optional<Int> nh;
        if (nhat > 0) nh = Int(nhat);
        f = theorem_family(p.value(), t.value(), nh);
    } else if (!mode_s.empty()) {
        if (nhat <= 0) return usage_error(err, "--mode needs --nhat");
        auto m = parse_mode(mode_s);
        if (!m.ok()) return emit_error(err, m.error());
        f = derive_family(p.value(), m.value(), Int(nhat));
    } else {
        return usage_error(err, "give --theorem or --mode");
    }
    if (!f.ok()) return emit_error(err, f.error());
    auto inst = instantiate(f.value(), Int(alpha), allow_zero);
    if (!inst.ok()) return emit_error(err, inst.error());
    json o = instance_json(inst.value());
    o["carries"] = jints(inst.value().carries_msf());
    o["alpha"] = alpha;
    out << o.dump() << "\n";
    return 0;
}

int do_permutiple(const std::string& digits_s, const std::string& bases_s,
                  const std::string& mults_s, std::ostream& out, std::ostream& err) {
    std::vector<std::int64_t> digits;
    if (!parse_csv_ints(digits_s, digits)) return usage_error(err, "--digits wants d,d,...");
    std::int64_t b0 = 0, b1 = 0, m0 = 0, m1 = 0;
    if (!parse_range(bases_s, b0, b1)) return usage_error(err, "--bases wants lo..hi");
    if (!parse_range(mults_s, m0, m1)) return usage_error(err, "--mults wants lo..hi");
    auto r = permutiple_search(digits, b0, b1, m0, m1);
    if (!r.ok()) return emit_error(err, r.error());
    json o;
    o["digits"] = digits;
    o["bases"] = json::array({b0, b1});
    o["mults"] = json::array({m0, m1});
    o["count"] = r.value().size();
    json ws = json::array();
    for (const auto& w : r.value()) {
        json e;
        e["base"] = w.base;
        e["mult"] = w.multiplier;
        e["target"] = w.target_msf;
        e["operand"] = w.operand_msf;
        ws.push_back(e);
    }
    o["witnesses"] = ws;
    out << o.dump() << "\n";
    return 0;
}

struct PalinomialArgs {
    std::string input;
    std::string check;        // "", all, linear, digit, derived
    std::string derived_from; // source literal for the derived identity
    bool roots = false;
    double tol = 1e-6;
    std::int64_t seed = 12345;
};

// the digit identity matching p's class, or nothing when p is asymmetric
std::optional<IdentityKind> digit_kind_for(const PalintipleInstance& p) {
    switch (classify(p)) {
        case PalinClass::symmetric: return IdentityKind::digit_poly_1089;
        case PalinClass::shifted_symmetric: return IdentityKind::digit_poly_shifted;
        case PalinClass::asymmetric: return std::nullopt;
    }
    return std::nullopt;
}

int do_palinomial(const PalinomialArgs& a, std::ostream& out, std::ostream& err) {
    auto pr = parse_literal(a.input);
    if (!pr.ok()) return emit_error(err, pr.error());
    const auto& p = pr.value();
    auto set = build_polynomials(p);

    json o;
    o["input"] = p.literal();
    o["pal"] = poly_json(set.pal);
    o["digit"] = poly_json(set.digit);
    o["rdigit"] = poly_json(set.rdigit);
    o["carry"] = poly_json(set.carry);
    json factors = json::array();
    factors.push_back(jints(IntPolynomial::linear(-p.base, 1).coeffs()));
    factors.push_back(jints(set.carry.coeffs()));
    o["factors"] = factors;

    bool any_fail = false;
    if (!a.check.empty()) {
        std::optional<PalintipleInstance> source;
        if (!a.derived_from.empty()) {
            auto sr = parse_literal(a.derived_from);
            if (!sr.ok()) return emit_error(err, sr.error());
            source = sr.value();
        }
        std::vector<IdentityKind> kinds;
        if (a.check == "linear") {
            kinds.push_back(IdentityKind::linear_factor);
        } else if (a.check == "digit") {
            auto k = digit_kind_for(p);
            if (!k) return emit_error(err, Error{errc::not_eligible,
                                                "no digit identity applies to an asymmetric instance"});
            kinds.push_back(*k);
        } else if (a.check == "derived") {
            if (!source) return usage_error(err, "--check derived needs --derived-from");
        } else if (a.check == "all") {
            kinds.push_back(IdentityKind::linear_factor);
            if (auto k = digit_kind_for(p)) kinds.push_back(*k);
        } else {
            return usage_error(err, "--check wants all, linear, digit or derived");
        }

        json checks = json::array();
        auto record = [&](IdentityKind k, const Result<IdentityReport>& r) {
            json e;
            e["identity"] = identity_name(k);
            if (!r.ok()) {
                e["pass"] = false;
                e["detail"] = r.error().message;
                any_fail = true;
            } else {
                e["pass"] = r.value().pass;
                e["detail"] = r.value().detail;
                if (!r.value().pass) {
                    e["residual"] = jints(r.value().residual.coeffs());
                    any_fail = true;
                }
            }
            checks.push_back(e);
        };
        for (auto k : kinds) record(k, check_identity(k, p, nullptr));
        if (source && (a.check == "derived" || a.check == "all")) {
            // the input is the derived instance, --derived-from its source;
            // try the forward reading first, then the reversal-first one
            auto fwd = check_identity(IdentityKind::derived_forward, *source, &p);
            if (fwd.ok())
                record(IdentityKind::derived_forward, fwd);
            else
                record(IdentityKind::derived_rho,
                       check_identity(IdentityKind::derived_rho, *source, &p));
        }
        o["checks"] = checks;
    }

    if (a.roots) {
        if (set.carry.degree() < 1)
            return emit_error(err, Error{errc::bad_argument, "carry polynomial is constant"});
        auto rr = find_roots(set.carry, static_cast<unsigned>(a.seed));
        if (!rr.ok()) return emit_error(err, rr.error());
        json roots = json::array();
        for (const auto& z : rr.value()) roots.push_back(root_json(z));
        o["roots"] = roots;
        auto uc = unit_circle_root_check(set.carry, a.tol, static_cast<unsigned>(a.seed));
        if (!uc.ok()) return emit_error(err, uc.error());
        json u;
        u["pass"] = uc.value().pass;
        u["witness"] = root_json(uc.value().witness);
        o["unit_circle"] = u;
    }

    out << o.dump() << "\n";
    return any_fail ? 1 : 0;
}

json young_json(const YoungGraph& g) {
    json o;
    o["mult"] = jint(g.multiplier);
    o["base"] = jint(g.base);
    bool opening = false;
    for (const auto& e : g.edges) opening = opening || e.first_ok;
    o["degenerate"] = !opening;
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        json e;
        e["u"] = jint(n.u);
        e["w"] = jint(n.w);
        e["even_terminal"] = n.even_terminal;
        e["odd_terminal"] = n.odd_terminal;
        if (n.odd_terminal) e["middle"] = jint(n.middle_digit);
        nodes.push_back(e);
    }
    o["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : g.edges) {
        json x;
        x["from"] = e.from;
        x["to"] = e.to;
        x["d_low"] = jint(e.d_low);
        x["d_high"] = jint(e.d_high);
        x["first"] = e.first_ok;
        edges.push_back(x);
    }
    o["edges"] = edges;
    auto m = is_complete(g);
    o["complete"] = m ? json(*m) : json(nullptr);
    o["is_1089"] = is_1089_graph(g);
    return o;
}

int do_young(std::int64_t mult, std::int64_t base, const std::string& dot_file, bool canonical,
             std::ostream& out, std::ostream& err) {
    auto g = build_young_graph(mult, base);
    if (!g.ok()) return emit_error(err, g.error());
    if (dot_file == "-") {
        out << to_dot(g.value());
        return 0;
    }
    json o = young_json(g.value());
    if (canonical) {
        auto c = canonical_form(g.value());
        if (!c.ok()) return emit_error(err, c.error());
        o["canonical"] = c.value().code;
    }
    if (!dot_file.empty()) {
        std::ofstream f(dot_file);
        if (!f) return usage_error(err, "cannot write " + dot_file);
        f << to_dot(g.value());
    }
    out << o.dump() << "\n";
    return 0;
}

int do_young_iso(const std::string& a_s, const std::string& b_s, std::ostream& out,
                 std::ostream& err) {
    std::int64_t n1 = 0, b1 = 0, n2 = 0, b2 = 0;
    if (!parse_pair(a_s, n1, b1) || !parse_pair(b_s, n2, b2))
        return usage_error(err, "young iso wants two N,B pairs");
    auto ga = build_young_graph(n1, b1);
    if (!ga.ok()) return emit_error(err, ga.error());
    auto gb = build_young_graph(n2, b2);
    if (!gb.ok()) return emit_error(err, gb.error());
    auto r = isomorphic(ga.value(), gb.value());
    if (!r.ok()) return emit_error(err, r.error());
    json o;
    o["isomorphic"] = r.value();
    out << o.dump() << "\n";
    return 0;
}

int do_young_correspond(const std::string& a_s, const std::string& b_s, std::int64_t max_len,
                        std::ostream& out, std::ostream& err) {
    std::int64_t n = 0, b = 0, nh = 0, bh = 0;
    if (!parse_pair(a_s, n, b) || !parse_pair(b_s, nh, bh))
        return usage_error(err, "young correspond wants two N,B pairs");
    auto r = correspondence_check(n, b, nh, bh, max_len);
    if (!r.ok()) return emit_error(err, r.error());
    const auto& rep = r.value();
    json o;
    o["carries_are_digits"] = rep.carries_are_digits;
    o["digits_are_carries"] = rep.digits_are_carries;
    auto issues = [](const std::vector<CorrespondenceIssue>& v) {
        json a = json::array();
        for (const auto& i : v) {
            json e;
            e["literal"] = i.literal;
            e["detail"] = i.detail;
            a.push_back(e);
        }
        return a;
    };
    o["carry_issues"] = issues(rep.carry_issues);
    o["digit_issues"] = issues(rep.digit_issues);
    out << o.dump() << "\n";
    return 0;
}

int do_scan(std::int64_t max_base, const std::string& lengths_s, std::int64_t jobs,
            std::ostream& out, std::ostream& err) {
    if (!lengths_s.empty() && lengths_s != "2,3")
        return usage_error(err, "only --lengths 2,3 is supported");
    if (max_base < 3) return usage_error(err, "--max-base must be at least 3");
    auto rep = scan_pudwell_nonstandard(max_base, jobs);
    json o;
    o["max_base"] = rep.max_base;
    o["lengths"] = json::array({2, 3});
    o["population"] = rep.population;
    o["sources_examined"] = rep.sources_examined;
    o["candidates_tested"] = rep.candidates_tested;
    o["count"] = rep.witnesses.size();
    json ws = json::array();
    for (const auto& w : rep.witnesses) {
        json e;
        e["source"] = w.source.literal();
        e["nhat"] = w.nhat;
        e["family"] = w.family_summary;
        ws.push_back(e);
    }
    o["witnesses"] = ws;
    out << o.dump() << "\n";
    return 0; // an empty scan is a successful scan
}

int do_verify(int section, bool include_long, const std::string& inject, std::ostream& out,
              std::ostream& err) {
    if (!inject.empty()) {
        bool known = false;
        for (const auto& f : fixture_corpus()) known = known || f.id == inject;
        if (!known) return usage_error(err, "unknown fixture id '" + inject + "'");
    }
    CorpusFilter filter;
    filter.section = section;
    filter.include_long = include_long;
    filter.inject_fault = inject;
    auto outcomes = run_fixtures(filter);
    if (outcomes.empty()) return usage_error(err, "no fixtures in section " + std::to_string(section));
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& o : outcomes) {
        if (o.skipped) {
            ++skipped;
            out << "skip " << o.fixture->id << " (long running; enable with --long)\n";
            continue;
        }
        if (o.passed) {
            ++passed;
            out << "ok   " << o.fixture->id << "\n";
        } else {
            ++failed;
            std::string want = o.fixture->expected;
            if (inject == o.fixture->id) want = corrupt_expectation(want);
            out << "FAIL " << o.fixture->id << "\n";
            out << "     expected: " << want << "\n";
            out << "     observed: " << o.observed << "\n";
        }
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed ? 1 : 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"palintiple reverse-multiple toolkit"};
    app.name("palintiple");
    app.require_subcommand(1);

    EnumerateArgs en;
    bool en_json = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list palintiples of a base");
    enumerate_cmd->add_option("--base", en.base, "number base")->required();
    enumerate_cmd->add_option("--mult", en.mult, "multiplier n");
    enumerate_cmd->add_flag("--all-mults", en.all_mults, "every multiplier 2 <= n < base");
    enumerate_cmd->add_option("--digits", en.digits_spec, "digit count, or a lo..hi range")
        ->required();
    enumerate_cmd->add_option("--cap", en.cap, "stop after this many instances");
    enumerate_cmd->add_flag("--json", en_json, "JSON output (the default)");
    enumerate_cmd->add_flag("--tsv", en.tsv, "tab separated output");

    std::string cl_input;
    auto* classify_cmd = app.add_subcommand("classify", "carry symmetry class of an instance");
    classify_cmd->add_option("--input", cl_input, "instance literal d,...,d@b*n")->required();

    std::string de_input, de_mode;
    std::int64_t de_nhat = 0, de_alphas = 0;
    auto* derive_cmd = app.add_subcommand("derive", "derive a family by recycling digits as carries");
    derive_cmd->add_option("--input", de_input, "source instance literal")->required();
    derive_cmd->add_option("--mode", de_mode, "single, double, rho-single or rho-double")
        ->required();
    derive_cmd->add_option("--nhat", de_nhat, "multiplier of the derived family")->required();
    derive_cmd->add_option("--alphas", de_alphas, "also list this many family members");

    std::string fa_input, fa_theorem;
    std::int64_t fa_nhat = 0, fa_alphas = 0;
    auto* family_cmd = app.add_subcommand("family", "named family construction with its hypotheses");
    family_cmd->add_option("--input", fa_input, "source instance literal")->required();
    family_cmd
        ->add_option("--theorem", fa_theorem,
                     "hoey, sutcliffe, pudwell, rho-hoey, rho-sutcliffe or rho-pudwell")
        ->required();
    family_cmd->add_option("--nhat", fa_nhat, "derived multiplier (sutcliffe forms)");
    family_cmd->add_option("--alphas", fa_alphas, "also list this many family members");

    std::string in_input, in_theorem, in_mode;
    std::int64_t in_nhat = 0, in_alpha = 0;
    bool in_allow_zero = false;
    auto* inst_cmd = app.add_subcommand("instantiate", "evaluate a family at one alpha");
    inst_cmd->add_option("--input", in_input, "source instance literal")->required();
    inst_cmd->add_option("--theorem", in_theorem, "named construction");
    inst_cmd->add_option("--mode", in_mode, "derivation mode (with --nhat)");
    inst_cmd->add_option("--nhat", in_nhat, "derived multiplier");
    inst_cmd->add_option("--alpha", in_alpha, "family parameter")->required();
    inst_cmd->add_flag("--allow-zero", in_allow_zero, "admit alpha = 0 where the family does");

    std::string pe_digits, pe_bases, pe_mults;
    auto* perm_cmd = app.add_subcommand("permutiple", "rearrangement multiples of a digit multiset");
    perm_cmd->add_option("--digits", pe_digits, "digit list d,d,...")->required();
    perm_cmd->add_option("--bases", pe_bases, "base range lo..hi")->required();
    perm_cmd->add_option("--mults", pe_mults, "multiplier range lo..hi")->required();

    PalinomialArgs pa;
    auto* palin_cmd = app.add_subcommand("palinomial", "polynomial identities of an instance");
    palin_cmd->add_option("--input", pa.input, "instance literal")->required();
    palin_cmd->add_option("--check", pa.check, "all, linear, digit or derived");
    palin_cmd->add_option("--derived-from", pa.derived_from, "source literal for the derived identity");
    palin_cmd->add_flag("--roots", pa.roots, "carry polynomial roots and the unit circle test");
    palin_cmd->add_option("--tol", pa.tol, "unit circle tolerance");
    palin_cmd->add_option("--seed", pa.seed, "root finder seed");

    std::int64_t yo_mult = 0, yo_base = 0;
    std::string yo_dot;
    bool yo_canonical = false;
    auto* young_cmd = app.add_subcommand("young", "carry-pair digraph of a (n, b) pair");
    young_cmd->add_option("--mult", yo_mult, "multiplier n");
    young_cmd->add_option("--base", yo_base, "number base");
    young_cmd->add_option("--dot", yo_dot, "write DOT to this file, - for standard output");
    young_cmd->add_flag("--canonical", yo_canonical, "include the canonical code");

    std::string iso_a, iso_b;
    auto* iso_cmd = young_cmd->add_subcommand("iso", "graph isomorphism test");
    iso_cmd->add_option("first", iso_a, "N,B")->required();
    iso_cmd->add_option("second", iso_b, "N,B")->required();

    std::string co_a, co_b;
    std::int64_t co_max_len = 8;
    auto* corr_cmd = young_cmd->add_subcommand("correspond", "carries-digits correspondence check");
    corr_cmd->add_option("first", co_a, "N,B")->required();
    corr_cmd->add_option("second", co_b, "NH,BH")->required();
    corr_cmd->add_option("--max-len", co_max_len, "check lengths up to this");

    std::int64_t sc_max_base = 0, sc_jobs = 1;
    std::string sc_lengths;
    auto* scan_cmd = app.add_subcommand("scan", "bounded searches");
    scan_cmd->require_subcommand(1);
    auto* pud_cmd = scan_cmd->add_subcommand(
        "pudwell", "double derivations whose new multiplier differs from the new base");
    pud_cmd->add_option("--max-base", sc_max_base, "largest source base")->required();
    pud_cmd->add_option("--lengths", sc_lengths, "source lengths (2,3 only)");
    pud_cmd->add_option("--jobs", sc_jobs, "worker threads");

    int ve_section = 0;
    bool ve_long = false;
    std::string ve_inject;
    auto* verify_cmd = app.add_subcommand("verify-paper", "replay the embedded example corpus");
    verify_cmd->add_option("--section", ve_section, "only fixtures of this section");
    verify_cmd->add_flag("--long", ve_long, "include the long running fixtures");
    verify_cmd->add_option("--inject-fault", ve_inject, "corrupt one expectation, a self test");

    try {
        std::vector<const char*> argv;
        argv.push_back("palintiple");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate_cmd)) return do_enumerate(en, out, err);
        if (app.got_subcommand(classify_cmd)) return do_classify(cl_input, out, err);
        if (app.got_subcommand(derive_cmd))
            return do_derive(de_input, de_mode, de_nhat, de_alphas, out, err);
        if (app.got_subcommand(family_cmd))
            return do_family(fa_input, fa_theorem, fa_nhat, fa_alphas, out, err);
        if (app.got_subcommand(inst_cmd))
            return do_instantiate(in_input, in_theorem, in_mode, in_nhat, in_alpha, in_allow_zero,
                                  out, err);
        if (app.got_subcommand(perm_cmd))
            return do_permutiple(pe_digits, pe_bases, pe_mults, out, err);
        if (app.got_subcommand(palin_cmd)) return do_palinomial(pa, out, err);
        if (app.got_subcommand(young_cmd)) {
            if (young_cmd->got_subcommand(iso_cmd)) return do_young_iso(iso_a, iso_b, out, err);
            if (young_cmd->got_subcommand(corr_cmd))
                return do_young_correspond(co_a, co_b, co_max_len, out, err);
            if (yo_mult == 0 || yo_base == 0)
                return usage_error(err, "young wants --mult and --base, or a subcommand");
            return do_young(yo_mult, yo_base, yo_dot, yo_canonical, out, err);
        }
        if (app.got_subcommand(scan_cmd)) return do_scan(sc_max_base, sc_lengths, sc_jobs, out, err);
        if (app.got_subcommand(verify_cmd))
            return do_verify(ve_section, ve_long, ve_inject, out, err);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return usage_error(err, "no subcommand");
}

} // namespace palintiple
