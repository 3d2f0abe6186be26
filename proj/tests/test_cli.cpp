#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with the given arguments, capturing stdout (stderr is
// dropped unless merge_stderr).
CmdResult run_cli(const std::string& args, bool merge_stderr = false)
{
    const std::string cmd =
        std::string(RATKNOT_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) result.output += buf;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("det subcommand")
{
    const CmdResult r = run_cli("det 3");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.output) == "signed=3 abs=3 equation=3*(b-a)=0");

    const CmdResult mixed = run_cli("det 4,-3");
    CHECK(mixed.exit_code == 0);
    CHECK(strip(mixed.output) == "signed=-11 abs=11 equation=-11*(b-a)=0");
}

TEST_CASE("poly subcommand")
{
    const CmdResult r = run_cli("poly 4 --part even");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.output) == "1 + n1*n2 + n1*n4 + n3*n4 + n1*n2*n3*n4");

    const CmdResult full = run_cli("poly 4");
    CHECK(strip(full.output) == "1 + n1 + n3 + n1*n2 + n1*n4 + n3*n4 + n1*n2*n3 + n1*n2*n3*n4");
}

TEST_CASE("colors subcommand")
{
    CHECK(strip(run_cli("colors 3 --modulus 3").output) == "9");
    CHECK(strip(run_cli("colors 3 --modulus 5 --method snf").output) == "5");
    CHECK(strip(run_cli("colors 2,2 --modulus 5 --method brute").output) == "25");
}

TEST_CASE("trees subcommand")
{
    CHECK(strip(run_cli("trees 2,2").output) == "5");
    CHECK(strip(run_cli("trees 2,2 --method matrix").output) == "5");
    CHECK(strip(run_cli("trees 1,1,1,1,1,1").output) == "13");
}

TEST_CASE("propagate subcommand")
{
    const CmdResult r = run_cli("propagate 2,2 --a 0 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.output) == "l=5 m=7 r=2");
}

TEST_CASE("verify subcommand")
{
    const CmdResult r = run_cli("verify --max-n 3 --max-len 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all methods agree") != std::string::npos);

    const CmdResult small = run_cli("verify --max-n 2 --max-len 3 --max-modulus 5");
    CHECK(small.exit_code == 0);
}

TEST_CASE("invalid input exits 2")
{
    CHECK(run_cli("det 0").exit_code == 2);
    CHECK(run_cli("det 1,,2").exit_code == 2);
    CHECK(run_cli("colors 3 --modulus 1").exit_code == 2);
    CHECK(run_cli("trees -3").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("exceeded work bound exits 4")
{
    CHECK(run_cli("colors 3,3,3 --modulus 7 --method brute --cap 100").exit_code == 4);
}

TEST_CASE("json output carries the same numeric content as plain")
{
    const json det = json::parse(run_cli("det 4,-3 --format json").output);
    CHECK(det["signed"] == -11);
    CHECK(det["abs"] == 11);
    CHECK(det["equation"] == "-11*(b-a)=0");
    const CmdResult det_plain = run_cli("det 4,-3");
    CHECK(strip(det_plain.output) ==
          "signed=" + det["signed"].dump() + " abs=" + det["abs"].dump() +
              " equation=" + det["equation"].get<std::string>());

    const json colors = json::parse(run_cli("colors 3 --modulus 3 --format json").output);
    CHECK(colors["count"].dump() == strip(run_cli("colors 3 --modulus 3").output));

    const json trees = json::parse(run_cli("trees 2,2 --format json").output);
    CHECK(trees["trees"].dump() == strip(run_cli("trees 2,2").output));

    const json poly = json::parse(run_cli("poly 4 --part even --format json").output);
    CHECK(poly["poly"].get<std::string>() == strip(run_cli("poly 4 --part even").output));

    const json prop = json::parse(run_cli("propagate 2,2 --format json").output);
    CHECK(prop["l"] == 5);
    CHECK(prop["m"] == 7);
    CHECK(prop["r"] == 2);

    const json verify = json::parse(run_cli("verify --max-n 1 --max-len 2 --format json").output);
    CHECK(verify["ok"] == true);
    CHECK(verify["cases"].get<std::uint64_t>() > 0);
}

TEST_CASE("modulus 2 is accepted and flagged on stderr")
{
    const CmdResult quiet = run_cli("colors 3 --modulus 2");
    CHECK(quiet.exit_code == 0);
    CHECK(strip(quiet.output) == "2");
    const CmdResult noisy = run_cli("colors 3 --modulus 2", true);
    CHECK(noisy.output.find("note:") != std::string::npos);
}
