#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "palintiple/cli.hpp"
#include "palintiple/fixtures.hpp"

using namespace palintiple;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify emits the frozen byte form") {
    auto r = cli({"classify", "--input", "8,7,1,2@10*4"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"class\":\"symmetric\",\"carries\":[0,3,3,0]}\n");
    CHECK(r.err.empty());

    auto shifted = cli({"classify", "--input", "3,1@5*2"});
    CHECK(shifted.out == "{\"class\":\"shifted-symmetric\",\"carries\":[1,0]}\n");
}

TEST_CASE("young iso answers in exact bytes both ways") {
    auto yes = cli({"young", "iso", "3,14", "3,22"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "{\"isomorphic\":true}\n");
    auto no = cli({"young", "iso", "9,10", "3,14"});
    CHECK(no.code == 0);
    CHECK(no.out == "{\"isomorphic\":false}\n");
}

TEST_CASE("family reproduces the ternary table through the JSON instance list") {
    auto r = cli({"family", "--theorem", "hoey", "--input", "2,1,2,0,1@3*2", "--alphas", "3"});
    REQUIRE(r.code == 0);
    auto o = json::parse(r.out);
    REQUIRE(o.contains("instances"));
    std::vector<std::string> expect = {"5,3,12,8,10,1@14*3", "8,5,19,13,16,2@22*3",
                                       "11,7,26,18,22,3@30*3"};
    CHECK(o["instances"].get<std::vector<std::string>>() == expect);
    // mandated keys, mandated order
    CHECK(r.out.rfind("{\"nhat\":3,\"base\":{\"a0\":6,\"a1\":8},\"digits\":[", 0) == 0);
    CHECK(o["carries"].get<std::vector<int>>() == std::vector<int>{2, 1, 2, 0, 1, 0});
    CHECK(o["alpha"]["residue"] == 0);
    CHECK(o["alpha"]["modulus"] == 1);
}

TEST_CASE("derive carries the den field only when a digit form needs it") {
    auto r = cli({"derive", "--input", "47,7@55*6", "--mode", "double", "--nhat", "55"});
    REQUIRE(r.code == 0);
    auto o = json::parse(r.out);
    CHECK(o["base"] == json::parse(R"({"a0":0,"a1":432})"));
    CHECK(o["digits"][1] == json::parse(R"({"a0":-1,"a1":2585,"den":7})"));
    CHECK(o["digits"][0] == json::parse(R"({"a0":0,"a1":55})"));
    CHECK(o["alpha"]["residue"] == 4);
    CHECK(o["alpha"]["modulus"] == 7);

    auto plain = cli({"derive", "--input", "2,1,2,0,1@3*2", "--mode", "single", "--nhat", "3"});
    REQUIRE(plain.code == 0);
    CHECK(plain.out.find("den") == std::string::npos);
}

TEST_CASE("enumerate tsv and json forms are stable") {
    auto tsv = cli({"enumerate", "--base", "10", "--mult", "4", "--digits", "4", "--tsv"});
    CHECK(tsv.code == 0);
    CHECK(tsv.out == "literal\tvalue\tclass\n8,7,1,2@10*4\t8712\tsymmetric\n");

    auto js = cli({"enumerate", "--base", "10", "--all-mults", "--digits", "4"});
    CHECK(js.code == 0);
    auto o = json::parse(js.out);
    CHECK(o["count"] == 2);
    CHECK(o["truncated"] == false);
    CHECK(o["instances"][0]["literal"] == "8,7,1,2@10*4");
    CHECK(o["instances"][1]["literal"] == "9,8,0,1@10*9");

    auto empty = cli({"enumerate", "--base", "10", "--mult", "5", "--digits", "4"});
    CHECK(empty.code == 0);
    CHECK(json::parse(empty.out)["count"] == 0);
}

TEST_CASE("instantiate honors the zero flag exactly where the family does") {
    std::vector<std::string> base = {"instantiate", "--input", "8,7,1,2@10*4",
                                     "--theorem", "rho-hoey", "--alpha", "0"};
    auto blocked = cli(base);
    CHECK(blocked.code == 1);
    auto wide = base;
    wide.push_back("--allow-zero");
    auto r = cli(wide);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["literal"] == "42,37,5,14,4@52*10");

    // hoey has no zero member even with the flag: base would collapse to 40
    auto hoey = cli({"instantiate", "--input", "8,7,1,2@10*4", "--theorem", "hoey",
                     "--alpha", "0", "--allow-zero"});
    CHECK(hoey.code == 1);
}

TEST_CASE("permutiple reports witnesses and clean emptiness") {
    auto hit = cli({"permutiple", "--digits", "2,1,0", "--bases", "4..4", "--mults", "2..3"});
    CHECK(hit.code == 0);
    auto o = json::parse(hit.out);
    CHECK(o["count"] == 1);
    CHECK(o["witnesses"][0]["mult"] == 2);
    CHECK(o["witnesses"][0]["target"] == json::array({2, 1, 0}));
    CHECK(o["witnesses"][0]["operand"] == json::array({1, 0, 2}));

    auto miss = cli({"permutiple", "--digits", "3,8,9", "--bases", "10..20", "--mults", "2..10"});
    CHECK(miss.code == 0);
    CHECK(json::parse(miss.out)["count"] == 0);
}

TEST_CASE("palinomial check failures exit 1 and carry the residual") {
    auto good = cli({"palinomial", "--input", "8,7,1,2@10*4", "--check", "all"});
    CHECK(good.code == 0);
    auto o = json::parse(good.out);
    CHECK(o["factors"][0] == json::array({-10, 1}));
    for (const auto& c : o["checks"]) CHECK(c["pass"] == true);

    // asymmetric instance has no digit identity
    auto noident = cli({"palinomial", "--input", "28,25,108,113,2@139*10", "--check", "digit"});
    CHECK(noident.code == 1);

    auto derived = cli({"palinomial", "--input", "28,25,136,138,138,110,113,2@139*10", "--check",
                        "derived", "--derived-from", "8,7,9,9,9,1,2@10*4"});
    CHECK(derived.code == 0);
    auto od = json::parse(derived.out);
    CHECK(od["checks"][0]["identity"] == "derived-forward");
    CHECK(od["checks"][0]["pass"] == true);

    // a rho derivation is detected as such
    auto rho = cli({"palinomial", "--input", "5,1,0,1@8*5", "--check", "derived",
                    "--derived-from", "3,1@5*2"});
    CHECK(rho.code == 0);
    CHECK(json::parse(rho.out)["checks"][0]["identity"] == "derived-rho");
}

TEST_CASE("root output is deterministic across runs") {
    std::vector<std::string> args = {"palinomial", "--input", "9,8,0,1@10*9", "--roots"};
    auto a = cli(args);
    auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto o = json::parse(a.out);
    CHECK(o["unit_circle"]["pass"] == true);
    // different seed, same mathematical roots after the deterministic sort
    auto c = cli({"palinomial", "--input", "9,8,0,1@10*9", "--roots", "--seed", "777"});
    CHECK(json::parse(c.out)["unit_circle"]["pass"] == true);
}

TEST_CASE("young emits the graph, dot output, and correspondence reports") {
    auto g = cli({"young", "--mult", "9", "--base", "10"});
    CHECK(g.code == 0);
    auto o = json::parse(g.out);
    CHECK(o["nodes"].size() == 4);
    CHECK(o["edges"].size() == 6);
    CHECK(o["is_1089"] == true);
    CHECK(o["degenerate"] == false);
    CHECK(o["complete"].is_null());

    auto complete = cli({"young", "--mult", "2", "--base", "5"});
    CHECK(json::parse(complete.out)["complete"] == 2);

    auto dot = cli({"young", "--mult", "2", "--base", "5", "--dot", "-"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph young {", 0) == 0);
    CHECK(dot.out.find("label=\"Y(2,5)\"") != std::string::npos);

    auto canon = cli({"young", "--mult", "9", "--base", "10", "--canonical"});
    auto canon2 = cli({"young", "--mult", "2", "--base", "3", "--canonical"});
    CHECK(json::parse(canon.out)["canonical"] == json::parse(canon2.out)["canonical"]);

    auto corr = cli({"young", "correspond", "2,5", "9,107", "--max-len", "6"});
    CHECK(corr.code == 0);
    auto oc = json::parse(corr.out);
    CHECK(oc["carries_are_digits"] == false);
    CHECK(oc["digits_are_carries"] == true);
    CHECK(oc["carry_issues"][0]["literal"] == "24,80,2@107*9");
}

TEST_CASE("scan pudwell always exits 0 and reports its population") {
    auto r = cli({"scan", "pudwell", "--max-base", "30"});
    CHECK(r.code == 0);
    auto o = json::parse(r.out);
    CHECK(o["count"] == 0);
    CHECK(o["sources_examined"] == 112);
    CHECK(o["population"].get<std::string>().find("b <= 30") != std::string::npos);
    // byte identical rerun, also under threads
    auto again = cli({"scan", "pudwell", "--max-base", "30", "--jobs", "2"});
    CHECK(again.out == r.out);

    auto badlen = cli({"scan", "pudwell", "--max-base", "30", "--lengths", "2,4"});
    CHECK(badlen.code == 2);
}

TEST_CASE("usage problems exit 2, negative answers exit 1") {
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"classify"}).code == 2);                              // missing --input
    CHECK(cli({"classify", "--input", "8,7,1,2@10*4", "--tsv"}).code == 2); // unknown flag
    CHECK(cli({"enumerate", "--base", "10", "--digits", "4"}).code == 2);   // no mult choice
    CHECK(cli({"enumerate", "--base", "10", "--mult", "4", "--all-mults", "--digits", "4"}).code == 2);
    CHECK(cli({"young"}).code == 2);                                 // no pair, no subcommand
    CHECK(cli({"classify", "--input", "1,1@10*4"}).code == 1);       // not a palintiple
    CHECK(cli({"family", "--theorem", "sutcliffe", "--input", "9,4@14*2", "--nhat", "14"}).code == 1);
    CHECK(cli({"derive", "--input", "8,7,1,2@10*4", "--mode", "double", "--nhat", "3"}).code == 1);
    auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("enumerate") != std::string::npos);
    CHECK(help.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("the fixture corpus is complete and the harness can fail loudly") {
    CHECK(fixture_corpus().size() >= 25);
    // one fixture per id
    std::set<std::string> ids;
    for (const auto& f : fixture_corpus()) ids.insert(f.id);
    CHECK(ids.size() == fixture_corpus().size());

    auto all = cli({"verify-paper"});
    CHECK(all.code == 0);
    CHECK(all.out.find("0 failed") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    auto six = cli({"verify-paper", "--section", "6"});
    CHECK(six.code == 0);
    CHECK(six.out == "ok   palinomial-seven-digit\nok   palinomial-derived-eight\n"
                     "2 passed, 0 failed, 0 skipped\n");

    auto broken = cli({"verify-paper", "--inject-fault", "carries-classic-quadruple"});
    CHECK(broken.code == 1);
    std::size_t fails = 0;
    for (auto at = broken.out.find("FAIL"); at != std::string::npos;
         at = broken.out.find("FAIL", at + 1))
        ++fails;
    CHECK(fails == 1);
    CHECK(broken.out.find("FAIL carries-classic-quadruple") != std::string::npos);

    CHECK(cli({"verify-paper", "--inject-fault", "no-such-id"}).code == 2);
    CHECK(cli({"verify-paper", "--section", "9"}).code == 2);
}

TEST_CASE("expectation corruption always changes the string") {
    CHECK(corrupt_expectation("0,3,3,0") == "0,3,3,1");
    CHECK(corrupt_expectation("abc") == "abd");
    CHECK(corrupt_expectation("xyz") == "xya");
    CHECK(corrupt_expectation("a9") == "a0");
    CHECK(corrupt_expectation("...") == "...X");
    for (const auto& f : fixture_corpus()) CHECK(corrupt_expectation(f.expected) != f.expected);
}
