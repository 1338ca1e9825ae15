#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "../support/subprocess.hpp"

using testsupport::run_cli;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/staudt_cli_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("geometry subcommands run and report") {
    auto coord = run_cli("coordinatize --field fp:5");
    CHECK(coord.exit_code == 0);
    CHECK(contains(coord.out, "certified over fp:5: 25 pairs, 125 triples"));

    auto sampled = run_cli("coordinatize --field q --sample 4");
    CHECK(sampled.exit_code == 0);
    CHECK(contains(sampled.out, "16 pairs, 64 triples"));
}

TEST_CASE("coding subcommands run and report") {
    auto pairs = run_cli("encode-pairs --field q --pairs \"{(0,1),(2,3)}\"");
    CHECK(pairs.exit_code == 0);
    CHECK(contains(pairs.out, "alpha = 2, beta = 1"));
    CHECK(contains(pairs.out, "round trip: ok"));

    auto triples = run_cli("encode-triples --field q --triples \"{(1,2,3)}\"");
    CHECK(triples.exit_code == 0);
    CHECK(contains(triples.out, "round trip: ok"));

    auto nat = run_cli("nat-witness --x 3");
    CHECK(nat.exit_code == 0);
    CHECK(contains(nat.out, "witness F = {0, 1, 2, 3} (verified)"));
    auto no_nat = run_cli("nat-witness --x 1/2");
    CHECK(no_nat.exit_code == 0);
    CHECK(contains(no_nat.out, "no witness"));

    auto fold = run_cli("fold --field q --set \"{1,2,3,4}\" --op sum");
    CHECK(fold.exit_code == 0);
    CHECK(contains(fold.out, "sum {1, 2, 3, 4} = 10"));
    auto pow = run_cli("fold --field q --pow 2 --exp 10");
    CHECK(pow.exit_code == 0);
    CHECK(contains(pow.out, "2^10 = 1024"));

    auto dickson = run_cli("dickson --vectors \"(1,2);(2,0);(2,2)\"");
    CHECK(dickson.exit_code == 0);
    CHECK(contains(dickson.out, "basis: (1,2) (2,0)"));
}

TEST_CASE("ideal subcommands run and report") {
    std::string gens = "--gen \"x^2 - y\" --gen \"x*y - 1\" --vars x y";
    auto gb = run_cli("groebner " + gens);
    CHECK(gb.exit_code == 0);
    CHECK(contains(gb.out, "x - y^2"));
    CHECK(contains(gb.out, "y^3 - 1"));

    auto member = run_cli("ideal-member " + gens + " --poly \"y^3 - 1\"");
    CHECK(member.exit_code == 0);
    CHECK(contains(member.out, "member"));
    // a negative answer is still a successful query
    auto non = run_cli("ideal-member " + gens + " --poly \"x\"");
    CHECK(non.exit_code == 0);
    CHECK(contains(non.out, "not a member"));

    auto elim = run_cli("eliminate " + gens + " --keep 1");
    CHECK(elim.exit_code == 0);
    CHECK(contains(elim.out, "y^3 - 1"));

    auto gz = run_cli("generic-zero " + gens);
    CHECK(gz.exit_code == 0);
    CHECK(contains(gz.out, "x: algebraic, min poly x^3 - 1"));
    CHECK(contains(gz.out, "y: algebraic, min poly x^2 - y"));

    // generator files work the same way
    TempFile f("ideal.txt", "x^2 - y\nx*y - 1\n");
    auto from_file = run_cli("groebner --ideal " + f.path + " --vars x y");
    CHECK(from_file.exit_code == 0);
    CHECK(contains(from_file.out, "y^3 - 1"));
}

TEST_CASE("curve subcommands run and report") {
    auto meet = run_cli("intersect --curve-a \"x*z - y^2\" --curve-b \"x - y\"");
    CHECK(meet.exit_code == 0);
    CHECK(contains(meet.out, "{[0:0:1]^1, [1:1:1]^1} total 2"));

    auto tan = run_cli("tangent --curve \"x*z - y^2\" --point \"[1:1:1]\"");
    CHECK(tan.exit_code == 0);
    CHECK(contains(tan.out, "x - 2*y + z"));

    auto cls = run_cli("classify --conic \"x*y\"");
    CHECK(cls.exit_code == 0);
    CHECK(contains(cls.out, "two distinct lines"));

    auto wit = run_cli("witness --curve \"x*z - y^2\" --point \"[1:1:1]\"");
    CHECK(wit.exit_code == 0);
    CHECK(contains(wit.out, "x - 2*y + z"));

    auto divi = run_cli("divisor --conic \"x*z - y^2\" --num z --den x");
    CHECK(divi.exit_code == 0);
    CHECK(contains(divi.out, "-2*[0:0:1] + 2*[1:0:0]   (degree 0)"));

    auto rec = run_cli("recover --curve \"x*z - y^2\" --field fp:7");
    CHECK(rec.exit_code == 0);
    CHECK(contains(rec.out, "degree 2: x*z + 6*y^2   (matches the oracle curve)"));

    TempFile pts("points.txt", "[0:0:1]\n[1:1:1]\n[1:-1:1]\n[4:2:1]\n[4:-2:1]\n[1:0:0]\n[9:3:1]\n");
    auto from_pts = run_cli("recover --points " + pts.path + " --field q --max-degree 2");
    CHECK(from_pts.exit_code == 0);
    CHECK(contains(from_pts.out, "degree 2"));
}

TEST_CASE("logic subcommands run and report") {
    auto eval = run_cli("wso-eval --field fp:3 --formula \"exists F forall x (x in F)\"");
    CHECK(eval.exit_code == 0);
    CHECK(contains(eval.out, "true over fp:3, 8 subsets  (24 element, 8 subset enumerations)"));

    TempFile f("formula.txt", "exists F forall x (x in F)\n");
    auto from_file = run_cli("wso-eval --field fp:3 --formula-file " + f.path);
    CHECK(from_file.exit_code == 0);
    CHECK(contains(from_file.out, "true over fp:3"));

    auto axioms = run_cli("wso-axioms --field fp:3");
    CHECK(axioms.exit_code == 0);
    CHECK(contains(axioms.out, "extensionality: pass"));
    CHECK(contains(axioms.out, "binary unions: pass"));
    CHECK(contains(axioms.out, "all axioms hold"));

    auto dropped = run_cli("wso-axioms --field fp:3 --drop-mask 3");
    CHECK(dropped.exit_code == 0);
    CHECK(contains(dropped.out, "binary unions: FAIL  ({0} union {1} missing)"));
    CHECK(contains(dropped.out, "violations found"));

    auto minimal = run_cli("wso-minimal --field fp:3 --formula \"0 in F\"");
    CHECK(minimal.exit_code == 0);
    CHECK(contains(minimal.out, "{0}"));

    auto k0 = run_cli("wso-k0 --field fp:3");
    CHECK(k0.exit_code == 0);
    CHECK(contains(k0.out, "K0 = {0, 1, 2}"));
    auto k0q = run_cli("wso-k0 --universe \"{-2,...,3,1/2}\"");
    CHECK(k0q.exit_code == 0);
    CHECK(contains(k0q.out, "K0 = {0, 1, 2, 3}"));
}

TEST_CASE("the demo pipeline chains the pieces") {
    auto demo = run_cli("biinterpret-demo");
    CHECK(demo.exit_code == 0);
    CHECK(contains(demo.out, "frame from [0:0:1] [0:1:0] [1:0:0] [1:1:1]"));
    CHECK(contains(demo.out, "field certified over fp:7"));
    CHECK(contains(demo.out, "recovered degree 2: x*z + 6*y^2   (matches the input curve)"));
    CHECK(contains(demo.out, "incidence profile of a line: no"));
}

TEST_CASE("exit codes separate the failure kinds") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("intersect --curve-a \"x*y\" --curve-b \"y*z\"").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("groebner --gen \"x +\" --vars x").exit_code == 2);
    CHECK(run_cli("wso-eval --field fp:5 --budget 100 --formula "
                  "\"exists F exists G exists H exists I (0 in F)\"")
              .exit_code == 3);

    auto shared = run_cli("intersect --curve-a \"x*y\" --curve-b \"y*z\"");
    CHECK(contains(shared.out, "error: curves share a common component"));
}

TEST_CASE("json records parse and repeat byte for byte") {
    std::string cmd = "groebner --gen \"x^2 - y\" --gen \"x*y - 1\" --vars x y --json";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    nlohmann::json rec = nlohmann::json::parse(first.out);
    CHECK(rec["schema"] == "staudt/1");
    CHECK(rec["record"] == "groebner");
    CHECK(rec["basis"][0] == "x - y^2");
    CHECK(rec["basis"][1] == "y^3 - 1");
    CHECK(rec["unit_ideal"] == false);
    REQUIRE(rec["basis_terms"].is_array());
    CHECK(rec["basis_terms"][0][0]["exponents"].size() == 2);

    auto eval = run_cli("wso-eval --field fp:3 --formula \"exists F forall x (x in F)\" --json");
    nlohmann::json ev = nlohmann::json::parse(eval.out);
    CHECK(ev["truth"] == true);
    CHECK(ev["elem_enumerations"] == 24);
    CHECK(ev["set_enumerations"] == 8);

    auto demo1 = run_cli("biinterpret-demo --json");
    auto demo2 = run_cli("biinterpret-demo --json");
    CHECK(demo1.exit_code == 0);
    CHECK(demo1.out == demo2.out);
    CHECK_FALSE(demo1.out.empty());
}
