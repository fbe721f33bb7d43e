#include "golden_cases.hpp"

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>

using testing::run_cli;

TEST_SUITE("cli") {

TEST_CASE("golden outputs are reproduced byte for byte") {
    auto cases = testing::golden_cases(GOLDEN_DIR);
    REQUIRE(cases.size() >= 8);
    for (const auto& c : cases) {
        CAPTURE(c.name);
        auto r = run_cli(c.args);
        CHECK(r.code == 0);
        CHECK(r.out == testing::read_file(c.path));
    }
}

TEST_CASE("every subcommand has a golden file") {
    auto cases = testing::golden_cases(GOLDEN_DIR);
    for (const char* sub : {"lazard", "fgl", "weyl", "torsion-index", "twisted", "btpair", "coinv",
                            "verify-duality"}) {
        CAPTURE(sub);
        CHECK(std::any_of(cases.begin(), cases.end(), [&](const auto& c) {
            return std::find(c.args.begin(), c.args.end(), sub) != c.args.end();
        }));
    }
}

TEST_CASE("repeated runs agree") {
    std::vector<std::string> args{"twisted", "--group", "GL2", "--law", "universal", "--order", "2"};
    auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json reports carry the schema") {
    auto r = run_cli({"weyl", "--group", "SL3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "cobord-report/1");
    CHECK(j["command"]["subcommand"] == "weyl");
    CHECK(j["result"]["order"] == 6);
}

TEST_CASE("usage errors") {
    auto r = run_cli({"frobnicate"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());

    r = run_cli({"weyl", "--group", "E9"});
    CHECK(r.code == 1);
    CHECK(r.err.find("Usage") != std::string::npos);

    r = run_cli({"weyl"});
    CHECK(r.code == 1);

    r = run_cli({"lazard", "--max-degree", "0"});
    CHECK(r.code == 1);

    r = run_cli({"--help"});
    CHECK(r.code == 0);
}

TEST_CASE("verify-duality exit status") {
    CHECK(run_cli({"verify-duality", "--group", "SL2", "--max-degree", "3"}).code == 0);
    CHECK(run_cli({"verify-duality", "--group", "PGL2", "--max-degree", "2", "--invert-tau", "0"}).code == 0);
}

TEST_CASE("root datum from a file") {
    auto dumped = run_cli({"weyl", "--group", "Sp4"});
    REQUIRE(dumped.code == 0);
    auto datum = nlohmann::json::parse(dumped.out)["result"]["datum"];
    std::string path = "cli_test_datum.json";
    {
        std::ofstream f(path);
        f << datum.dump();
    }
    auto a = run_cli({"torsion-index", "--root-datum", path});
    auto b = run_cli({"torsion-index", "--group", "Sp4"});
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out)["result"] == nlohmann::json::parse(b.out)["result"]);
    std::remove(path.c_str());
}

}
