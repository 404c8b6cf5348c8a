#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "aalpha/fixtures.hpp"
#include "aalpha/graph.hpp"

#ifndef AALPHA_CLI_PATH
#error "AALPHA_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AALPHA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& text) {
    std::ofstream out(name);
    out << text;
    return name;
}

}  // namespace

TEST_CASE("generate writes the complete graph") {
    const RunResult r = run_cli("generate complete 4 2 2");
    CHECK(r.exit_code == 0);
    CHECK(aalpha::parse_graph(r.out) == aalpha::fixtures::k4());
}

TEST_CASE("generate writes the six-vertex path") {
    const RunResult r = run_cli("generate path 6 2 3");
    CHECK(r.exit_code == 0);
    CHECK(aalpha::parse_graph(r.out) == aalpha::fixtures::p6());
}

TEST_CASE("generate is deterministic per seed") {
    const RunResult a = run_cli("generate random 9 3 3 --seed 7");
    const RunResult b = run_cli("generate random 9 3 3 --seed 7");
    const RunResult c = run_cli("generate random 9 3 3 --seed 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK_FALSE(aalpha::parse_graph(a.out) == aalpha::parse_graph(c.out));
}

TEST_CASE("generate rejects unknown families and size mismatches") {
    CHECK(run_cli("generate torus 4 2 2").exit_code == 1);
    CHECK(run_cli("generate path 5 2 2").exit_code == 1);
}

TEST_CASE("analyze emits a certified sweep for the weighted example") {
    const std::string path =
        write_file("cli_g1.graph", aalpha::serialize_graph(aalpha::fixtures::g1()));
    const RunResult r = run_cli("analyze " + path + " --sweep 0.75:1.0:26 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schema_version") == "1");
    bool covered = false;
    for (const auto& run : doc.at("intervals")) {
        if (run.at("criterion") == "frobenius_ppt" && run.at("outcome") == "ppt_certified" &&
            run.at("alpha_lo").get<double>() <= 0.75 + 1e-12 &&
            run.at("alpha_hi").get<double>() >= 1.0 - 1e-12) {
            covered = true;
        }
    }
    CHECK(covered);
}

TEST_CASE("analyze reports entanglement at a single alpha") {
    const std::string path =
        write_file("cli_p4.graph", aalpha::serialize_graph(aalpha::fixtures::p4()));
    const RunResult r = run_cli("analyze " + path + " --alpha 0.55 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    bool entangled = false;
    for (const auto& v : doc.at("verdicts")) {
        if (v.at("criterion") == "peres_horodecki") {
            entangled = v.at("outcome") == "entangled_certified";
        }
    }
    CHECK(entangled);
}

TEST_CASE("analyze output is byte-identical across runs") {
    const std::string path =
        write_file("cli_g4.graph", aalpha::serialize_graph(aalpha::fixtures::g4()));
    const RunResult a = run_cli("analyze " + path + " --sweep 0.4:1.0:13 --refine --format json");
    const RunResult b = run_cli("analyze " + path + " --sweep 0.4:1.0:13 --refine --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("analyze csv has one row per alpha and criterion") {
    const std::string path =
        write_file("cli_p6.graph", aalpha::serialize_graph(aalpha::fixtures::p6()));
    const RunResult r = run_cli("analyze " + path + " --sweep 0.5:1.0:6 --format csv");
    REQUIRE(r.exit_code == 0);
    std::size_t rows = 0;
    for (char ch : r.out) rows += ch == '\n';
    CHECK(rows == 1 + 6 * 5);
}

TEST_CASE("analyze exit codes distinguish parse and state errors") {
    const std::string edgeless = write_file("cli_edgeless.graph", "graph 4 2 2\n");
    CHECK(run_cli("analyze " + edgeless + " --alpha 0.5").exit_code == 3);

    const std::string bad = write_file("cli_bad.graph", "graph 4 2 2\nedge 0 1 1.5\n");
    CHECK(run_cli("analyze " + bad).exit_code == 2);
    CHECK(run_cli("analyze does_not_exist.graph").exit_code == 2);

    const std::string ok = write_file("cli_k4.graph", aalpha::serialize_graph(aalpha::fixtures::k4()));
    CHECK(run_cli("analyze " + ok + " --alpha 1.5").exit_code == 3);
    CHECK(run_cli("analyze " + ok + " --d1 3 --d2 2").exit_code == 3);  // 3*2 != 4
}

TEST_CASE("fixture suite passes and supports filtering") {
    const RunResult all = run_cli("paper-examples");
    CHECK(all.exit_code == 0);
    std::size_t passes = 0;
    for (std::size_t pos = 0; (pos = all.out.find("PASS", pos)) != std::string::npos; ++pos) ++passes;
    CHECK(passes == 9);

    const RunResult only = run_cli("paper-examples --only P4");
    CHECK(only.exit_code == 0);
    CHECK(only.out.find("PASS  P4") != std::string::npos);
    CHECK(only.out.find("K4") == std::string::npos);

    CHECK(run_cli("paper-examples --only NOPE").exit_code == 1);
}
