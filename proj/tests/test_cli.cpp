#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "pwlie/pweights.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PWLIE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixtures_dir() { return std::string(PWLIE_SOURCE_DIR) + "/data/appendix"; }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("pwlie_cli_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("pweights listing") {
    auto r = run("pweights --rank 5 --labels 1,0,0,0,0,0 --max-depth 3 --no-cache");
    CHECK(r.exit_code == 0);
    // depth-3 row carries exactly these three entries
    CHECK(r.output.find("(3,3,2,2,2)_3") != std::string::npos);
    CHECK(r.output.find("(2,2,2,0,0)_3") != std::string::npos);
    CHECK(r.output.find("(3,1,1,1,0)_3") != std::string::npos);
    CHECK(r.output.find("(2,1,1,1,1)_1") != std::string::npos);

    auto r0 = run("pweights --rank 5 --labels 1,0,0,0,0,0 --max-depth 0 --no-cache");
    CHECK(r0.exit_code == 0);
    CHECK(r0.output == "(0,0,0,0,0)_0\n");
}

TEST_CASE("pweights output is byte deterministic") {
    const std::string args = "pweights --rank 5 --labels 0,0,1,0,0,1 --max-depth 4 --no-cache";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("pweights json round trips") {
    auto r = run("pweights --rank 5 --labels 1,1,0,0,0,0 --max-depth 2 --no-cache --format json");
    CHECK(r.exit_code == 0);
    pwlie::AlgebraContext ctx(5);
    auto set = pwlie::pweights_from_json(r.output, ctx);
    CHECK(set.horizon() == 2);
    CHECK(set.at_depth(1) ==
          std::vector<pwlie::FiniteWeight>{pwlie::FiniteWeight({3, 1, 1, 1, 1, 0})});
}

TEST_CASE("strings command") {
    auto r = run("strings --rank 1 --labels 1,0 --max-depth 9 --no-cache");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 1 2 3 5 7 11 15 22 30") != std::string::npos);

    auto rs = run("strings --rank 5 --labels 1,1,0,0,0,0 --max-depth 2 --no-cache --series");
    CHECK(rs.exit_code == 0);
    CHECK(rs.output.find("1 + 10 q + 70 q^2 + ...") != std::string::npos);
    CHECK(rs.output.find("q ( 2 + 22 q + ... )") != std::string::npos);
    CHECK(rs.output.find("q^2 ( 5 + ... )") != std::string::npos);

    auto rc = run("strings --rank 1 --labels 1,0 --max-depth 3 --no-cache --format csv");
    CHECK(rc.exit_code == 0);
    CHECK(rc.output.find("class,M0,c0,c1,c2,c3") != std::string::npos);
    CHECK(rc.output.find("\"(0)_0\",0,1,1,2,3") != std::string::npos);

    auto r0 = run("strings --rank 5 --labels 1,1,0,0,0,0 --max-depth 0 --no-cache");
    CHECK(r0.exit_code == 0);
    CHECK(r0.output.find("(1,0,0,0,0)_0 : 1") != std::string::npos);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run("pweights --rank 5 --labels 1,0 --max-depth 2 --no-cache").exit_code == 2);
    CHECK(run("pweights --rank 5 --max-depth 2").exit_code == 2);
    CHECK(run("strings --rank 5 --labels 1,1,0,0,0,0 --max-depth 2 --no-cache --spec 1,1,0,0,0,0")
              .exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("cache failures exit with code 3 but still print") {
    TempDir tmp;
    std::ofstream(tmp.path / "blocker") << "x";
    auto r = run("pweights --rank 5 --labels 1,0,0,0,0,0 --max-depth 1 --cache-dir " +
                 (tmp.path / "blocker").string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("(2,1,1,1,1)_1") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    auto r = run("verify --only a2 --fixtures " + fixtures_dir());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("A.2..A.5: OK") != std::string::npos);

    auto r2 = run("verify --only a4 --only a10 --fixtures " + fixtures_dir());
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("allowlisted misprint") != std::string::npos);

    SUBCASE("corrupted fixtures are reported with exit 5") {
        TempDir tmp;
        for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir()))
            std::filesystem::copy(entry.path(), tmp.path / entry.path().filename());
        {
            std::ofstream out(tmp.path / "a2.txt", std::ios::app);
            out << "(9,9,9,9,9)_2\n";
        }
        auto bad = run("verify --only a2 --fixtures " + tmp.path.string());
        CHECK(bad.exit_code == 5);
        CHECK(bad.output.find("(9,9,9,9,9)_2") != std::string::npos);
        CHECK(bad.output.find("FAIL") != std::string::npos);
    }
}
