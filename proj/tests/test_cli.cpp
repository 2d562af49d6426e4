#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

std::string bin() {
    const char* b = std::getenv("LLCW_BIN");
    REQUIRE(b != nullptr);
    return b;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (!stdin_data.empty()) cmd += "printf '%s' '" + stdin_data + "' | ";
    cmd += bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

long line_count(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("llc subcommand produces the expected decompositions") {
    auto r = run("llc --q 3 -",
                 R"({"family":"SO_odd","n_or_N":2,"a_exp":2,"zeta":-1})");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["family"] == "SO_odd");
    CHECK(j["constituents"].size() == 1);
    CHECK(j["constituents"][0]["kind"] == "gl_lift");
    CHECK(j["constituents"][0]["m"] == 4);
    CHECK(j["dim_total"] == 4);
    CHECK(j["swan_total"] == 1);

    auto r2 = run("llc --q 2 -",
                  R"({"family":"SO_even","n_or_N":2,"a_exp":1,"zeta":-1})");
    CHECK(r2.code == 0);
    Json j2 = Json::parse(r2.out);
    CHECK(j2["family"] == "SO_even_p2");
    CHECK(j2["constituents"].size() == 2);
    CHECK(j2["constituents"][0]["kind"] == "gl_lift");
    CHECK(j2["constituents"][0]["m"] == 3);
    CHECK(j2["constituents"][1]["kind"] == "quad");
    CHECK(j2["constituents"][1]["unramified"] == true);
    CHECK(j2["dim_total"] == 4);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("llc --q 2 -",
              R"({"family":"SO_even","n_or_N":2,"xi":-1,"a_exp":0,"zeta":1})")
              .code == 2);
    CHECK(run("llc --q 3 -", "not json at all").code == 2);
    CHECK(run("verify no-such-suite").code == 2);
    CHECK(run("llc -", R"({"family":"SO_odd","n_or_N":2,"a_exp":0,"zeta":1})")
              .code == 2); // no field specified
}

TEST_CASE("verify suites pass at small q") {
    CHECK(run("verify gauss --q 5").code == 0);
    auto r = run("verify gamma-product --q 3 --format pretty");
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
    CHECK(run("verify fdc --q 2").code == 0);
}

TEST_CASE("enumerate emits one line per class with matching counts") {
    CHECK(line_count(run("enumerate SO_5 --q 3").out) == 4);
    CHECK(line_count(run("enumerate SO_4 --q 3").out) == 16);
    CHECK(line_count(run("enumerate SO_4 --q 2").out) == 2);
    // every line is valid JSON with a verified decomposition
    auto r = run("enumerate SO_5 --q 3");
    size_t pos = 0;
    while (pos < r.out.size()) {
        size_t nl = r.out.find('\n', pos);
        Json j = Json::parse(r.out.substr(pos, nl - pos));
        CHECK(j["llc"]["swan_total"] == 1);
        CHECK(j["llc"]["dim_total"] == 4);
        pos = nl + 1;
    }
}

TEST_CASE("fdc subcommand returns the unique solution") {
    Json j = Json::parse(run("fdc --family SO_odd --n 2 --q 3").out);
    CHECK(j["r"] == 0);
    CHECK(j["artin"] == 12);
    CHECK(j["solutions"].size() == 1);
    Json j2 = Json::parse(run("fdc --family SO_even --n 3 --q 2").out);
    CHECK(j2["r"] == 1);
    CHECK(j2["artin"] == 18);
}

TEST_CASE("tame classify verdicts") {
    Json j = Json::parse(run("tame classify --q 3 --d 2 --j 2 --value 1").out);
    CHECK(j["regular"] == true);
    CHECK(j["self_dual"] == true);
    CHECK(j["type"] == "orthogonal");
    CHECK(j["determinant_type"] == "orthogonal");
    Json j2 = Json::parse(run("tame classify --q 3 --d 2 --j 1 --value 1").out);
    CHECK(j2["self_dual"] == false);
}

TEST_CASE("gamma subcommand emits exact and pretty forms") {
    auto r = run("gamma --q 3 --format pretty -",
                 R"({"family":"SO_odd","n_or_N":2,"a_exp":1,"zeta":1})");
    CHECK(r.code == 0);
    CHECK(r.out == "q^{1/2 - s}\n");
    auto r2 = run("gamma --q 3 -",
                  R"({"family":"SO_odd","n_or_N":2,"a_exp":1,"zeta":1})");
    Json j = Json::parse(r2.out);
    CHECK(j["gamma"]["num"].size() == 1);
    CHECK(j["gamma"]["num"][0]["xpow"] == 1);
}

TEST_CASE("iwahori check passes for each family") {
    CHECK(run("iwahori check --family so_odd --n 2 --p 2 --trials 25").code == 0);
    CHECK(run("iwahori check --family so_even --n 3 --p 3 --trials 15").code == 0);
    CHECK(run("iwahori check --family so_odd_bt --n 2 --p 2 --trials 50").code == 0);
    CHECK(run("iwahori check --family gl --n 3 --p 5 --trials 25").code == 0);
}

TEST_CASE("output is byte-deterministic") {
    for (const char* cmd :
         {"verify iwahori --q 3 --list-instances", "enumerate SO_4 --q 3",
          "fdc --family SO_even --n 2 --q 3"}) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
