#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MNK_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string TRIB = R"("[[0,0,1],[1,0,1],[0,1,1]]")";

}  // namespace

TEST_CASE("compute: tribonacci with the Lee twist") {
    RunResult r = run_cli("compute --matrix " + TRIB + " --twist lee");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dims"] == nlohmann::json::array({0, 0, 1, 1, 0}));
    CHECK(j["nullities"] == nlohmann::json::array({0, 0, 1, 0}));
    CHECK(j["euler"] == 0);
    CHECK(j["twist"]["mode"] == "lee");
    CHECK(j["alpha_approx"] == "1.8392");
    CHECK(j["field"].get<std::string>().find("Q(alpha)") == 0);
}

TEST_CASE("compute: untwisted identity matrix via the In shortcut") {
    RunResult r = run_cli("compute --matrix I3 --twist untwisted");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dims"] == nlohmann::json::array({1, 4, 6, 4, 1}));
}

TEST_CASE("compute: built-in oracle cross-check flag") {
    RunResult r = run_cli("compute --matrix " + TRIB + " --twist lee --oracle");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["oracle"] == "agrees");
}

TEST_CASE("oracle subcommand reports the oracle dimensions") {
    RunResult r = run_cli("oracle --matrix " + TRIB + " --twist transcendental");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"] == "pass");
    CHECK(j["dims"] == nlohmann::json::array({0, 0, 0, 0, 0}));
}

TEST_CASE("compute: gamma audit blocks") {
    RunResult r = run_cli("compute --matrix " + TRIB + " --twist lee --audit");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["audit"].size() == 4);
    CHECK(j["audit"][1]["rank"] == 6);
    CHECK(j["audit"][2]["rank"] == 5);
    CHECK(j["audit"][3]["rank"] == 2);
    CHECK(j["audit"][3]["entries"] ==
          nlohmann::json::parse(R"([["1", "-1"], ["1", "-alpha"]])"));
}

TEST_CASE("novikov: tribonacci torsion") {
    RunResult r = run_cli("novikov --matrix " + TRIB);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["betti"] == nlohmann::json::array({0, 0, 0, 0, 0}));
    const auto& t1 = j["torsion"][1];
    REQUIRE(!t1.empty());
    CHECK(t1.back() == "t^3 + t^2 + t - 1");
    // exit code 0 already implies the Pajitnov consistency check passed
    CHECK(j["free_generators"] == 1);
    CHECK(j["period_generator"] == "s*Z");
}

TEST_CASE("verify-lcs exits zero and reports every identity") {
    RunResult r = run_cli("verify-lcs");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["identities"].size() == 11);
    for (const auto& c : j["identities"]) CHECK(c["pass"] == true);
    CHECK(j["negative_controls"].size() == 2);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("markdown output renders the gamma blocks as bracketed matrices") {
    RunResult r = run_cli("compute --matrix " + TRIB + " --twist lee --audit --format markdown");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("## compute") != std::string::npos);
    CHECK(r.out.find("1.8392") != std::string::npos);
    CHECK(r.out.find("### gamma block, degree 3 (rank 2)") != std::string::npos);
    CHECK(r.out.find("-alpha") != std::string::npos);
    CHECK(r.out.find("[ ") != std::string::npos);
}

TEST_CASE("exit code 2 on invalid input") {
    CHECK(run_cli("compute --matrix \"[[2,0],[0,1]]\" --twist untwisted").exit_code == 2);
    CHECK(run_cli("compute --matrix " + TRIB + " --twist bogus").exit_code == 2);
    CHECK(run_cli("compute --matrix \"[[1,2],[3]]\" --twist untwisted").exit_code == 2);
    // Lee mode without an eigenvalue > 1 is a user error, not a crash
    CHECK(run_cli("compute --matrix I3 --twist lee").exit_code == 2);
}

TEST_CASE("batch: independent jobs come back in input order") {
    std::string path = "/tmp/mnk_batch_test.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs(R"([
          {"command": "compute", "matrix": [[0,0,1],[1,0,1],[0,1,1]], "twist": "lee"},
          {"command": "compute", "matrix": [[1,0,0],[0,1,0],[0,0,1]], "twist": "untwisted"},
          {"command": "verify-lcs"}
        ])",
              f);
        fclose(f);
    }
    RunResult r = run_cli("batch " + path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["dims"] == nlohmann::json::array({0, 0, 1, 1, 0}));
    CHECK(j[1]["dims"] == nlohmann::json::array({1, 4, 6, 4, 1}));
    CHECK(j[2]["all_pass"] == true);
}

TEST_CASE("json report round-trips through parse and re-emit") {
    RunResult r = run_cli("compute --matrix " + TRIB + " --twist lee");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("output bytes are deterministic across runs") {
    std::string args = "compute --matrix " + TRIB + " --twist lee --audit --oracle";
    RunResult a = run_cli(args), b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}
