#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// Drives the installed binary end to end; H3_BINARY is provided by the build.

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(H3_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("group and reps dumps") {
    auto g = run("group --json");
    REQUIRE(g.code == 0);
    auto doc = nlohmann::json::parse(g.out);
    CHECK(doc["order"] == 120);
    CHECK(doc["reflections"] == 15);
    CHECK(doc["classes"].size() == 10);

    auto r = run("reps --json");
    REQUIRE(r.code == 0);
    auto rd = nlohmann::json::parse(r.out);
    CHECK(rd["characters"].size() == 10);
    CHECK(rd["characters"][2][6] == "1/2 + 1/2*r5");  // chi_{3+} on a 5-cycle
}

TEST_CASE("hweights reproduces the c = 1/3 table") {
    auto r = run("hweights --c 1/3 --json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["hweights"]["1+"] == "-7/2");
    CHECK(doc["hweights"]["1-"] == "13/2");
    CHECK(doc["hweights"]["3+"] == "19/6");
    CHECK(doc["hweights"]["3-"] == "-1/6");
    CHECK(doc["hweights"]["5+"] == "1/2");
    CHECK(doc["hweights"]["5-"] == "5/2");
    CHECK(doc["hweights"]["4+"] == "3/2");
}

TEST_CASE("rank output follows the documented schema") {
    auto r = run("rank --c 1/2 --tau 1+ --deg 5 --json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["c"] == "1/2");
    CHECK(doc["tau"] == "1+");
    CHECK(doc["degree"] == 5);
    CHECK(doc["dim"] == 21);
    CHECK(doc["rank"] == 15);
    REQUIRE(doc["kernel"].is_array());
    CHECK(doc["kernel"] == nlohmann::json::array({"3-", "3~-"}));

    // text mode agrees on the numbers
    auto t = run("rank --c 1/2 --tau 1+ --deg 5");
    REQUIRE(t.code == 0);
    CHECK(t.out.find("dim 21") != std::string::npos);
    CHECK(t.out.find("rank 15") != std::string::npos);
    CHECK(t.out.find("3- + 3~-") != std::string::npos);
}

TEST_CASE("solve emits the published row in lowest-weight order") {
    auto r = run("solve --c 1/2 --tau 1+ --json");
    REQUIRE(r.code == 0);
    // ordered parse: the coefficient object is emitted in lowest-weight order
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["c"] == "1/2");
    CHECK(doc["finite"] == true);
    CHECK(doc["dim"] == "115");
    const std::array<const char*, 8> order = {"1+", "3-", "3~-", "5+",
                                              "5-", "3+", "3~+", "1-"};
    const std::array<long, 8> coeff = {1, -1, -1, 1, -1, 1, 1, -1};
    REQUIRE(doc["coeffs"].size() == 8);
    size_t i = 0;
    for (auto it = doc["coeffs"].begin(); it != doc["coeffs"].end(); ++it, ++i) {
        CHECK(it.key() == order[i]);
        CHECK(it.value() == coeff[i]);
    }
    CHECK(!doc["certificate"].empty());
}

TEST_CASE("formula transport and the semisimple degenerate case") {
    auto r = run("formula --c 0 --tau 5- --json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["coeffs"].size() == 1);
    CHECK(doc["coeffs"]["5-"] == 1);

    auto t = run("formula --c 0 --tau 5-");
    CHECK(t.out.find("M(5-)") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").code == 2);
    CHECK(run("solve --c 1/2").code == 2);       // missing --tau
    CHECK(run("solve --c x --tau 1+").code == 2);
    CHECK(run("solve --c 1/2 --tau zz").code == 2);
    CHECK(run("rank --c 1/2 --tau 1+ --deg 2 --bogus").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("verify emits byte-identical JSON across runs") {
    auto a = run("verify --filter tables --json -");
    auto b = run("verify --filter tables --json -");
    REQUIRE(a.code == 0);
    // the text report carries timings; the JSON block is the determinism
    // contract
    auto pos = a.out.find("{\n");
    auto posb = b.out.find("{\n");
    REQUIRE(pos != std::string::npos);
    REQUIRE(posb != std::string::npos);
    CHECK(a.out.substr(pos) == b.out.substr(posb));
    auto doc = nlohmann::json::parse(a.out.substr(pos));
    CHECK(doc["summary"]["fail"] == 0);
    CHECK(doc["summary"]["pass"].get<int>() > 0);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("kind"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("actual"));
        CHECK(c.contains("status"));
    }
}

TEST_CASE("verify respects the budget env var by skipping, not failing") {
    std::string cmd = std::string("H3_BUDGET=10 ") + H3_BINARY +
                      " verify --filter ranks 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find("SKIP") != std::string::npos);
    CHECK(out.find("FAIL") == std::string::npos);
}
