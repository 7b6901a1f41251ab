#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ringlab/cli.hpp"
#include "ringlab/json_io.hpp"

using ringlab::json;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("ringlab");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun r;
    r.exit_code = ringlab::run_cli(static_cast<int>(argv.size()), argv.data(),
                                   out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json parse(const CliRun& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("help exits zero and lists the verbs") {
    auto r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("table") != std::string::npos);
    CHECK(r.out.find("inverse") != std::string::npos);
    CHECK(r.out.find("classify") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(r.out.find("report") != std::string::npos);
}

TEST_CASE("missing verb is a usage error") {
    auto r = run({});
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
}

TEST_CASE("table emits the sorted set as a bare JSON array") {
    auto r = run({"table", "Z12", "--set", "sqrtJ"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[\n  \"0\",\n  \"6\"\n]\n");

    auto j = run({"table", "Z12", "--set", "J"});
    CHECK(j.exit_code == 0);
    CHECK(j.out == r.out);

    auto idem = parse(run({"table", "Z4 x Z2", "--set", "idem"}));
    CHECK(idem == json::parse(R"J(["(0,0)","(0,1)","(1,0)","(1,1)"])J"));
}

TEST_CASE("table csv layout") {
    auto r = run({"table", "Z8", "--set", "N", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "element\n0\n2\n4\n6\n");
}

TEST_CASE("inverse certificate for 2 in Z5") {
    auto r = run({"inverse", "Z5", "2", "--kind", "gzhou"});
    CHECK(r.exit_code == 0);
    auto c = parse(r);
    CHECK(c["kind"] == "gzhou");
    CHECK(c["a"] == "2");
    CHECK(c["b"] == "3");
    CHECK(c["n"] == 4);
    CHECK(c["p"] == "1");
    CHECK(c["w"] == "0");
    for (const auto& [name, ok] : c["checks"].items()) {
        CAPTURE(name);
        CHECK(ok == true);
    }

    // Same document, byte for byte, on a second invocation.
    auto again = run({"inverse", "Z5", "2", "--kind", "gzhou"});
    CHECK(again.out == r.out);
}

TEST_CASE("inverse kinds differ only where they should") {
    auto zhou = parse(run({"inverse", "Z8", "2", "--kind", "zhou"}));
    CHECK(zhou["b"] == "0");
    CHECK(zhou["n"] == 1);
    auto pd = parse(run({"inverse", "Z8", "2", "--kind", "pdrazin"}));
    CHECK(pd["b"] == "0");
    CHECK(pd["n"].is_null());
    auto dz = parse(run({"inverse", "Z8", "2", "--kind", "drazin"}));
    CHECK(dz["b"] == "0");
    CHECK(dz["checks"]["residual"] == true);
}

TEST_CASE("matrix backend: scalar 2 has no inverse, conclusively") {
    auto r = run({"inverse", "Q1", "[[2]]", "--kind", "gzhou"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\n"
          "  \"kind\": \"gzhou\",\n"
          "  \"a\": \"[[2]]\",\n"
          "  \"exists\": false,\n"
          "  \"conclusive_bound\": 2\n"
          "}\n");
}

TEST_CASE("matrix backend: nilpotent Jordan block inverts to zero") {
    auto c = parse(run({"inverse", "Q2", "[[0,1],[0,0]]", "--kind", "gzhou"}));
    CHECK(c["exists"] == true);
    CHECK(c["b"] == "[[0,0],[0,0]]");
    for (const auto& [name, ok] : c["checks"].items()) {
        CAPTURE(name);
        CHECK(ok == true);
    }
}

TEST_CASE("matrix backend: quarter-turn rotation") {
    auto c = parse(run({"inverse", "Q2", "[[0,-1],[1,0]]", "--kind", "gzhou"}));
    CHECK(c["exists"] == true);
    CHECK(c["b"] == "[[0,1],[-1,0]]");
    CHECK(c["n"] == 4);
    CHECK(c["p"] == "[[1,0],[0,1]]");
}

TEST_CASE("matrix backend csv for a missing inverse") {
    auto r = run({"inverse", "Q1", "[[2]]", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "field,value\n"
          "kind,gzhou\n"
          "a,[[2]]\n"
          "exists,false\n"
          "conclusive_bound,2\n");
}

TEST_CASE("classify rows carry memberships and all four inverses") {
    auto r = run({"classify", "Z4"});
    CHECK(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["ring"] == "Z4");
    REQUIRE(doc["rows"].size() == 4);
    const auto& two = doc["rows"][2];
    CHECK(two["a"] == "2");
    CHECK(two["nilpotent"] == true);
    CHECK(two["gzhou"] == "0");
    CHECK(two["drazin"] == "0");
    const auto& three = doc["rows"][3];
    CHECK(three["unit"] == true);
    CHECK(three["gzhou"] == "3");
}

TEST_CASE("classify Z5: the inverse of a is a cubed, in every column") {
    auto doc = parse(run({"classify", "Z5"}));
    REQUIRE(doc["rows"].size() == 5);
    for (const auto& row : doc["rows"]) {
        int a = std::stoi(row["a"].get<std::string>());
        std::string cube = std::to_string(a * a * a % 5);
        CHECK(row["gzhou"] == cube);
        CHECK(row["drazin"] == cube);
        CHECK(row["pdrazin"] == cube);
        CHECK(row["zhou"] == cube);
    }
}

TEST_CASE("classify the trivial ring") {
    auto doc = parse(run({"classify", "Z1"}));
    REQUIRE(doc["rows"].size() == 1);
    const auto& row = doc["rows"][0];
    CHECK(row["a"] == "0");
    CHECK(row["gzhou"] == "0");
    CHECK(row["unit"] == true);
    CHECK(row["nilpotent"] == true);
}

TEST_CASE("classify csv header") {
    auto r = run({"classify", "Z1", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("a,unit,nilpotent,in_J,in_sqrtJ,idempotent,"
                      "drazin,pdrazin,zhou,gzhou,n,p\n",
                      0) == 0);
}

TEST_CASE("verify: passing sweep exits zero with a full report") {
    auto r = run({"verify", "cline", "Z6"});
    CHECK(r.exit_code == 0);
    auto rep = parse(r);
    CHECK(rep["theorem"] == "cline");
    CHECK(rep["ring"] == "Z6");
    CHECK(rep["population"] == 515);
    CHECK(rep["passes"] == 515);
    CHECK(rep["fails"] == 0);
    CHECK(rep["counterexamples"].empty());
    CHECK(rep["seed"] == 20250817);
}

TEST_CASE("verify: jacobson report names the reading tallies") {
    auto rep = parse(run({"verify", "jacobson", "Z4"}));
    CHECK(rep["fails"] == 0);
    bool found = false;
    for (const auto& note : rep["notes"]) {
        auto s = note.get<std::string>();
        if (s.find("tail_product 84/108") != std::string::npos &&
            s.find("core_difference 108/108") != std::string::npos) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("verify: overridden bound reports honest misses and exits 2") {
    auto r = run({"verify", "equiv", "Z5", "--bound", "1"});
    CHECK(r.exit_code == 2);
    auto rep = parse(r);
    CHECK(rep["passes"] == 2);
    CHECK(rep["fails"] == 3);
    REQUIRE(rep["counterexamples"].size() == 3);
    auto first = rep["counterexamples"][0].get<std::string>();
    CHECK(first.find("certificate=1") != std::string::npos);
    bool noted = false;
    for (const auto& note : rep["notes"]) {
        if (note.get<std::string>() == "n-search bound overridden: 1")
            noted = true;
    }
    CHECK(noted);
}

TEST_CASE("verify: sweep reports are identical across job counts") {
    auto seq = run({"verify", "unique", "Z12", "--jobs", "1"});
    auto par = run({"verify", "unique", "Z12", "--jobs", "4"});
    CHECK(seq.exit_code == 0);
    CHECK(seq.out == par.out);
}

TEST_CASE("verify csv keeps the scalar columns") {
    auto r = run({"verify", "jacobson", "Z4", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "theorem,ring,population,passes,fails,duration_ms,seed\n"
          "jacobson,Z4,156,156,0,0,20250817\n");
}

TEST_CASE("usage errors exit 1 with a message on stderr") {
    SUBCASE("ring expression typo, with source offset") {
        auto r = run({"table", "Z5 y Z2", "--set", "U"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("offset 3") != std::string::npos);
    }
    SUBCASE("matrix ring given to an enumeration verb") {
        auto r = run({"table", "Q2", "--set", "U"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("not enumerable") != std::string::npos);
    }
    SUBCASE("matrix literal is not square") {
        auto r = run({"inverse", "Q2", "[[1,0],[0,1],[0,0]]"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("square") != std::string::npos);
    }
    SUBCASE("matrix literal dimension disagrees with the ring") {
        auto r = run({"inverse", "Q3", "[[2]]"});
        CHECK(r.exit_code == 1);
    }
    SUBCASE("unknown theorem id") {
        auto r = run({"verify", "nosuch", "Z4"});
        CHECK(r.exit_code == 1);
    }
    SUBCASE("unknown set name") {
        auto r = run({"table", "Z4", "--set", "nope"});
        CHECK(r.exit_code == 1);
    }
    SUBCASE("unknown inverse kind") {
        auto r = run({"inverse", "Z4", "2", "--kind", "nope"});
        CHECK(r.exit_code == 1);
    }
    SUBCASE("cardinality above the cap") {
        auto r = run({"table", "M9(Z9)", "--set", "U"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("cap") != std::string::npos);
    }
    SUBCASE("element outside the ring") {
        auto r = run({"inverse", "Z4", "7"});
        CHECK(r.exit_code == 1);
    }
    SUBCASE("unknown report suite") {
        auto r = run({"report", "--suite", "nightly"});
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("cap flag is honored in both directions") {
    auto low = run({"table", "M2(Z4)", "--set", "U", "--cap", "100"});
    CHECK(low.exit_code == 1);
    auto high = run({"table", "M2(Z4)", "--set", "U", "--cap", "300"});
    CHECK(high.exit_code == 0);
    CHECK(parse(high).size() == 96);
}
