#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhj/audit.hpp"
#include "bhj/cli.hpp"
#include "bhj/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using namespace bhj;
using nlohmann::json;

namespace {

const std::string kSrc = BHJ_SOURCE_DIR;

std::string fixture(const std::string& name) { return kSrc + "/fixtures/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_subcommand(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("loading the fixture corpus") {
    ObjectGraph g = load_manifests({fixture("k3.json"), fixture("n2.json"),
                                    fixture("k3lm.json"), fixture("k3-adjoint.json")});
    REQUIRE(g.algebras.count("k3"));
    const auto& k3 = g.algebras.at("k3");
    CHECK(k3->space() == SuperSpace(1, 2));
    CHECK(k3->product().constants().size() == 7);
    CHECK(g.representations.count("k3-adjoint"));
    CHECK(g.representations.at("k3-adjoint")->algebra() == k3);
}

TEST_CASE("loader rejections") {
    SUBCASE("scalars must be in lowest terms") {
        std::string doc = R"({"kind":"algebra","name":"bad","space":{"even":1,"odd":0},
            "constants":[[0,0,0,"2/4"]],"alpha":[["1"]],"beta":[["1"]]})";
        CHECK_THROWS_AS(load_manifest_texts({{"mem", doc}}), InvariantViolation);
    }
    SUBCASE("unresolved references are reported") {
        std::string doc = R"({"kind":"representation","name":"r","algebra":"missing",
            "space":{"even":1,"odd":0},"rho":[[["0"]]],
            "alpha_v":[["1"]],"beta_v":[["1"]]})";
        CHECK_THROWS_AS(load_manifest_texts({{"mem", doc}}), UnresolvedReference);
    }
    SUBCASE("malformed json is a parse error") {
        CHECK_THROWS_AS(load_manifest_texts({{"mem", "{oops"}}), ParseError);
    }
    SUBCASE("parity-inhomogeneous matrices are rejected") {
        std::string doc = R"({"kind":"map","name":"m","space":{"even":1,"odd":1},
            "degree":0,"matrix":[["0","1"],["0","0"]]})";
        CHECK_THROWS_AS(load_manifest_texts({{"mem", doc}}), InvariantViolation);
    }
    SUBCASE("duplicate structure constants are rejected") {
        std::string doc = R"({"kind":"algebra","name":"d","space":{"even":1,"odd":0},
            "constants":[[0,0,0,"1"],[0,0,0,"2"]],"alpha":[["1"]],"beta":[["1"]]})";
        CHECK_THROWS_AS(load_manifest_texts({{"mem", doc}}), InvariantViolation);
    }
    SUBCASE("conflicting duplicate names are rejected, exact duplicates pass") {
        std::string a = R"({"kind":"algebra","name":"z","space":{"even":1,"odd":0},
            "constants":[],"alpha":[["1"]],"beta":[["1"]]})";
        std::string b = R"({"kind":"algebra","name":"z","space":{"even":1,"odd":0},
            "constants":[],"alpha":[["2"]],"beta":[["1"]]})";
        CHECK_NOTHROW(load_manifest_texts({{"one", a}, {"two", a}}));
        CHECK_THROWS_AS(load_manifest_texts({{"one", a}, {"two", b}}), InvariantViolation);
    }
}

TEST_CASE("manifest round trips are byte-identical") {
    for (const char* name : {"fix0.json", "k3.json", "n2.json", "k3lm.json",
                             "k3-mutated.json", "alpha-lambda.json", "beta-mu.json",
                             "k3-adjoint.json", "n2-rb.json"}) {
        std::string bytes = slurp(fixture(name));
        ObjectGraph g = load_manifest_texts({{name, bytes}});
        std::vector<json> docs;
        for (const auto& [kind, objname] : g.order) {
            if (kind == "algebra")
                docs.push_back(algebra_to_json(objname, *g.algebras.at(objname)));
            else if (kind == "representation")
                docs.push_back(representation_to_json(
                    objname, "k3", *g.representations.at(objname)));
            else if (kind == "map")
                docs.push_back(map_to_json(objname, *g.maps.at(objname)));
        }
        CHECK(render_manifest_file(docs) == bytes);
    }
}

TEST_CASE("check-algebra on valid and mutated fixtures") {
    CliRun good = run({"check-algebra", "--input", fixture("k3lm.json")});
    CHECK(good.code == 0);
    CHECK(good.out == slurp(kSrc + "/tests/golden/check-k3lm.txt"));

    CliRun bad = run({"check-algebra", "--input", fixture("k3-mutated.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out == slurp(kSrc + "/tests/golden/check-k3-mutated.txt"));
    CHECK(bad.out.find("at (1,2): residual (2, 0, 0)") != std::string::npos);
}

TEST_CASE("audits are deterministic and machine-readable") {
    std::vector<std::string> args = {"check-algebra", "--input", fixture("k3lm.json"),
                                     "--report", "machine"};
    CliRun first = run(args);
    CliRun second = run(args);
    CHECK(first.out == second.out);
    json doc = json::parse(first.out);
    CHECK(doc.at("passed") == true);
    CHECK(doc.at("tool") == kToolVersion);
    CHECK(doc.at("checks").size() == 2);
}

TEST_CASE("untwist via the command line recovers the base fixture") {
    std::string out_path = "tmp-untwist.json";
    CliRun r = run({"untwist", "--input", fixture("k3lm.json"), "--s", "0", "--t", "0",
                    "--output", out_path});
    CHECK(r.code == 0);
    json produced = json::parse(slurp(out_path));
    json original = json::parse(slurp(fixture("k3.json")));
    CHECK(produced.at("constants") == original.at("constants"));
    CHECK(produced.at("alpha") == original.at("alpha"));
    CHECK(produced.at("beta") == original.at("beta"));
    CHECK(produced.at("space") == original.at("space"));
    CHECK(produced.at("name") == "k3lm.untwisted");
}

TEST_CASE("twist via the command line reproduces the committed twisted fixture") {
    std::string out_path = "tmp-twist.json";
    CliRun r = run({"twist", "--input", fixture("k3.json"), "--input",
                    fixture("alpha-lambda.json"), "--input", fixture("beta-mu.json"),
                    "--output", out_path});
    REQUIRE(r.code == 0);
    json produced = json::parse(slurp(out_path));
    json expected = json::parse(slurp(fixture("k3lm.json")));
    for (const char* key : {"space", "constants", "alpha", "beta"})
        CHECK(produced.at(key) == expected.at(key));
}

TEST_CASE("construction outputs reload and pass their own checker") {
    SUBCASE("coadjoint semidirect") {
        std::string out_path = "tmp-coadsemi.json";
        REQUIRE(run({"coadjoint-semidirect", "--input", fixture("k3lm.json"), "--output",
                     out_path})
                    .code == 0);
        CHECK(run({"check-algebra", "--input", out_path}).code == 0);
    }
    SUBCASE("search output reloads as verified operators") {
        std::string out_path = "tmp-search.json";
        CliRun r = run({"search-oop", "--input", fixture("k3.json"), "--input",
                        fixture("k3-adjoint.json"), "--parity", "0", "--coeffs", "-1,0,1",
                        "--budget", "531441", "--output", out_path});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("found 9 operator(s)") != std::string::npos);
        CHECK(run({"check-oop", "--input", out_path}).code == 0);
    }
    SUBCASE("reverse then dual of the adjoint reloads and passes") {
        std::string rev = "tmp-rev.json", dual = "tmp-dual.json";
        REQUIRE(run({"reverse-rep", "--input", fixture("k3.json"), "--input",
                     fixture("k3-adjoint.json"), "--output", rev})
                    .code == 0);
        CHECK(run({"check-rep", "--input", rev}).code == 0);
        REQUIRE(run({"dual-rep", "--input", fixture("k3.json"), "--input",
                     fixture("k3-adjoint.json"), "--output", dual})
                    .code == 0);
        CHECK(run({"check-rep", "--input", dual}).code == 0);
    }
}

TEST_CASE("error paths map to distinct exit codes") {
    SUBCASE("missing inputs are a usage error") {
        CHECK(run({"check-algebra"}).code == 64);
    }
    SUBCASE("unknown file") {
        CliRun r = run({"check-algebra", "--input", "no-such-file.json"});
        CHECK(r.code == 2);
    }
    SUBCASE("wrong input kind") {
        CliRun r = run({"check-bimodule", "--input", fixture("k3.json")});
        CHECK(r.code == 3);
    }
    SUBCASE("search budget exhaustion") {
        CliRun r = run({"search-oop", "--input", fixture("k3.json"), "--input",
                        fixture("k3-adjoint.json"), "--parity", "0", "--budget", "10",
                        "--output", "tmp-never.json"});
        CHECK(r.code == 9);
    }
    SUBCASE("induce with mismatched parity") {
        std::string out_path = "tmp-ops.json";
        REQUIRE(run({"search-oop", "--input", fixture("n2.json"), "--input",
                     fixture("n2-adjoint.json"), "--parity", "0", "--coeffs", "0,1",
                     "--budget", "100", "--output", out_path})
                    .code == 0);
        CliRun r = run({"induce", "--input", out_path, "--parity", "1", "--output",
                        "tmp-ind.json"});
        CHECK(r.code == 8);
    }
}

TEST_CASE("rota-baxter check through the command line") {
    CliRun r = run({"check-rb", "--input", fixture("n2.json"), "--input",
                    fixture("n2-rb.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("check rota-baxter: PASS") != std::string::npos);
}
