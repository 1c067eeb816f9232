#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "palintiple/derive.hpp"
#include "palintiple/fixtures.hpp"
#include "palintiple/palinomial.hpp"
#include "palintiple/search.hpp"
#include "palintiple/younggraph.hpp"

namespace py = pybind11;
using namespace palintiple;

namespace {

// exact integers of any size; big ones go through the decimal string
py::object to_py(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return py::cast(v.convert_to<long long>());
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

template <class T>
T take(Result<T> r) {
    if (!r.ok()) throw std::invalid_argument(r.error().message);
    return std::move(r.value());
}

std::vector<Int> to_ints(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

PalintipleInstance parse(const std::string& literal) { return take(parse_literal(literal)); }

py::dict instance_dict(const PalintipleInstance& p) {
    py::dict d;
    d["literal"] = p.literal();
    d["mult"] = to_py(p.multiplier);
    d["base"] = to_py(p.base);
    d["digits"] = to_py(p.digits_msf());
    d["carries"] = to_py(p.carries_msf());
    d["value"] = to_py(p.value());
    d["class"] = palin_class_name(classify(p));
    return d;
}

py::tuple affine_tuple(const AffineValue& a) {
    return py::make_tuple(to_py(a.a0), to_py(a.a1), to_py(a.den));
}

py::dict family_dict(const ParametricFamily& f) {
    py::dict d;
    d["nhat"] = to_py(f.nhat);
    d["mode"] = mode_name(f.mode);
    if (f.theorem) d["theorem"] = theorem_name(*f.theorem);
    d["source"] = f.source.literal();
    d["base"] = affine_tuple(f.base);
    py::list digits;
    for (const auto& a : f.digits_msf()) digits.append(affine_tuple(a));
    d["digits"] = digits;
    d["carries"] = to_py(f.carries_msf());
    d["alpha_residue"] = to_py(f.alpha.residue);
    d["alpha_modulus"] = to_py(f.alpha.modulus);
    d["alpha_min"] = to_py(f.alpha.min_alpha);
    d["zero_admissible"] = f.alpha.zero_admissible;
    return d;
}

ParametricFamily family_of(const std::string& literal, const std::string& theorem, long long nhat) {
    std::optional<Int> nh;
    if (nhat > 0) nh = Int(nhat);
    return take(theorem_family(parse(literal), take(parse_theorem(theorem)), nh));
}

} // namespace

PYBIND11_MODULE(_palintiple, m) {
    m.doc() = "reverse-multiple (palintiple) toolkit";

    m.def("parse", [](const std::string& s) { return instance_dict(parse(s)); },
          py::arg("literal"), "Parse and validate a d,...,d@b*n literal.");

    m.def(
        "make",
        [](long long n, long long b, const std::vector<long long>& digits_msf) {
            return instance_dict(take(make_instance_msf(n, b, to_ints(digits_msf))));
        },
        py::arg("mult"), py::arg("base"), py::arg("digits_msf"),
        "Build an instance from most-significant-first digits.");

    m.def(
        "digits_from_carries",
        [](long long n, long long b, const std::vector<long long>& carries_msf) {
            auto d = take(digits_from_carries_display(n, b, to_ints(carries_msf)));
            return to_py(std::vector<Int>{d.rbegin(), d.rend()});
        },
        py::arg("mult"), py::arg("base"), py::arg("carries_msf"),
        "Reconstruct digits from a display-order carry sequence.");

    m.def(
        "enumerate",
        [](long long base, long long mult, long long min_length, long long max_length,
           long long cap) {
            EnumerationQuery q;
            q.base = base;
            q.multiplier = mult;
            q.min_length = min_length;
            q.max_length = max_length;
            q.cap = cap;
            auto r = take(enumerate_palintiples(q));
            py::list out;
            for (const auto& p : r.instances) out.append(p.literal());
            return py::make_tuple(out, r.truncated);
        },
        py::arg("base"), py::arg("mult") = 0, py::arg("min_length") = 2, py::arg("max_length") = 2,
        py::arg("cap") = 100000, "All palintiples of the base; mult 0 means every multiplier.");

    m.def(
        "derive",
        [](const std::string& literal, const std::string& mode, long long nhat) {
            return family_dict(take(derive_family(parse(literal), take(parse_mode(mode)), Int(nhat))));
        },
        py::arg("literal"), py::arg("mode"), py::arg("nhat"),
        "Derive the family that recycles the digits as carries.");

    m.def(
        "family",
        [](const std::string& literal, const std::string& theorem, long long nhat) {
            return family_dict(family_of(literal, theorem, nhat));
        },
        py::arg("literal"), py::arg("theorem"), py::arg("nhat") = 0,
        "Named construction with its hypotheses checked.");

    m.def(
        "instantiate",
        [](const std::string& literal, const std::string& theorem, long long alpha, long long nhat,
           bool allow_zero) {
            auto f = family_of(literal, theorem, nhat);
            return take(instantiate(f, Int(alpha), allow_zero)).literal();
        },
        py::arg("literal"), py::arg("theorem"), py::arg("alpha"), py::arg("nhat") = 0,
        py::arg("allow_zero") = false, "Evaluate a named family at one alpha.");

    m.def(
        "permutiples",
        [](const std::vector<long long>& digits, long long base_lo, long long base_hi,
           long long mult_lo, long long mult_hi) {
            std::vector<std::int64_t> ds{digits.begin(), digits.end()};
            auto ws = take(permutiple_search(ds, base_lo, base_hi, mult_lo, mult_hi));
            py::list out;
            for (const auto& w : ws) {
                py::dict d;
                d["base"] = w.base;
                d["mult"] = w.multiplier;
                d["target"] = w.target_msf;
                d["operand"] = w.operand_msf;
                out.append(d);
            }
            return out;
        },
        py::arg("digits"), py::arg("base_lo"), py::arg("base_hi"), py::arg("mult_lo"),
        py::arg("mult_hi"), "Rearrangement multiples of the digit multiset.");

    m.def(
        "palinomial",
        [](const std::string& literal) {
            auto set = build_polynomials(parse(literal));
            py::dict d;
            d["pal"] = to_py(set.pal.coeffs());
            d["digit"] = to_py(set.digit.coeffs());
            d["rdigit"] = to_py(set.rdigit.coeffs());
            d["carry"] = to_py(set.carry.coeffs());
            return d;
        },
        py::arg("literal"), "Coefficient lists of the instance polynomials, low degree first.");

    m.def(
        "check_identity",
        [](const std::string& kind, const std::string& literal, const std::string& derived) {
            auto p = parse(literal);
            std::optional<PalintipleInstance> ph;
            if (!derived.empty()) ph = parse(derived);
            auto rep = take(check_identity(take(parse_identity(kind)), p, ph ? &*ph : nullptr));
            return py::make_tuple(rep.pass, rep.detail);
        },
        py::arg("kind"), py::arg("literal"), py::arg("derived") = std::string(),
        "Exact polynomial identity check; returns (pass, detail).");

    m.def(
        "unit_circle",
        [](const std::string& literal, double tol) {
            auto set = build_polynomials(parse(literal));
            return take(unit_circle_root_check(set.carry, tol)).pass;
        },
        py::arg("literal"), py::arg("tol") = 1e-6,
        "Whether the carry polynomial has a root on the unit circle.");

    m.def(
        "young",
        [](long long mult, long long base) {
            auto g = take(build_young_graph(mult, base));
            py::dict d;
            py::list nodes, edges;
            for (const auto& n : g.nodes)
                nodes.append(py::make_tuple(to_py(n.u), to_py(n.w), n.even_terminal, n.odd_terminal));
            for (const auto& e : g.edges)
                edges.append(py::make_tuple(e.from, e.to, to_py(e.d_low), to_py(e.d_high), e.first_ok));
            d["nodes"] = nodes;
            d["edges"] = edges;
            auto m_ = is_complete(g);
            d["complete"] = m_ ? py::cast(*m_) : py::none().cast<py::object>();
            d["is_1089"] = is_1089_graph(g);
            return d;
        },
        py::arg("mult"), py::arg("base"), "The pruned carry-pair digraph.");

    m.def(
        "young_iso",
        [](long long n1, long long b1, long long n2, long long b2) {
            return take(isomorphic(take(build_young_graph(n1, b1)), take(build_young_graph(n2, b2))));
        },
        py::arg("mult1"), py::arg("base1"), py::arg("mult2"), py::arg("base2"),
        "Graph isomorphism through canonical forms.");

    m.def(
        "correspond",
        [](long long n, long long b, long long nhat, long long bhat, long long max_len) {
            auto rep = take(correspondence_check(n, b, nhat, bhat, max_len));
            return py::make_tuple(rep.carries_are_digits, rep.digits_are_carries);
        },
        py::arg("mult"), py::arg("base"), py::arg("nhat"), py::arg("bhat"), py::arg("max_len") = 8,
        "Carries-digits correspondence in both directions.");

    m.def(
        "scan_pudwell",
        [](long long max_base, long long jobs) {
            auto rep = scan_pudwell_nonstandard(max_base, jobs);
            py::dict d;
            d["max_base"] = rep.max_base;
            d["population"] = rep.population;
            d["sources_examined"] = rep.sources_examined;
            d["candidates_tested"] = rep.candidates_tested;
            py::list ws;
            for (const auto& w : rep.witnesses)
                ws.append(py::make_tuple(w.source.literal(), w.nhat, w.family_summary));
            d["witnesses"] = ws;
            return d;
        },
        py::arg("max_base"), py::arg("jobs") = 1,
        "Double derivations whose new multiplier differs from the new base.");

    m.def(
        "verify_corpus",
        [](bool include_long) {
            CorpusFilter filter;
            filter.include_long = include_long;
            std::size_t passed = 0, failed = 0, skipped = 0;
            for (const auto& o : run_fixtures(filter)) {
                if (o.skipped)
                    ++skipped;
                else if (o.passed)
                    ++passed;
                else
                    ++failed;
            }
            return py::make_tuple(passed, failed, skipped);
        },
        py::arg("include_long") = false,
        "Replay the embedded example corpus; returns (passed, failed, skipped).");
}
