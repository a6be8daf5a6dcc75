#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LNDKIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("bracket on the command line") {
    RunResult r = run_cli("bracket 1 0 0 x");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 , 1\n");
}

TEST_CASE("exit code 1 covers usage and parse problems") {
    CHECK(run_cli("bracket 1 0 0").exit_code == 1);  // wrong arity
    RunResult r = run_cli("div \"x + + y\" 0");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("offset 4") != std::string::npos);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("exit code 2 separates negative data from usage errors") {
    CHECK(run_cli("is-lnd 1 x").exit_code == 0);
    CHECK(run_cli("is-lnd 0 y").exit_code == 2);
    CHECK(run_cli("rectify 'x*y'").exit_code == 2);
    CHECK(run_cli("rectify x").exit_code == 0);
    CHECK(run_cli("triangularize 0 x y 0").exit_code == 2);
}

TEST_CASE("json envelopes") {
    RunResult ok = run_cli("--json is-lnd 1 x");
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.output);
    CHECK(j["format"] == "lndkit.result/1");
    CHECK(j["command"] == "is-lnd");
    CHECK(j["ok"] == true);
    CHECK(j["result"]["is_lnd"] == true);
    CHECK(j["result"]["form"]["a"] == "x^2 - 2*y");

    RunResult neg = run_cli("--json is-lnd 0 y");
    CHECK(neg.exit_code == 2);
    json jn = json::parse(neg.output);
    CHECK(jn["ok"] == true);  // a negative verdict is still a result
    CHECK(jn["result"]["is_lnd"] == false);
    CHECK(jn["result"]["reason"] == "NonzeroDivergence");

    RunResult err = run_cli("--json rentschler 0 y");
    CHECK(err.exit_code == 2);
    json je = json::parse(err.output);
    CHECK(je["ok"] == false);
    CHECK(je["error"]["code"] == "NotLocallyNilpotent");

    RunResult parse_err = run_cli("--json div \"x + + y\" 0");
    CHECK(parse_err.exit_code == 1);
    json jp = json::parse(parse_err.output);
    CHECK(jp["ok"] == false);
    CHECK(jp["error"]["code"] == "ParseError");
}

TEST_CASE("kernel, closure, and triangularize round out the surface") {
    CHECK(run_cli("kernel 1 x").output == "x^2 - 2*y\n");
    RunResult c = run_cli("--json closure 1 0 0 x^2");
    json j = json::parse(c.output);
    CHECK(j["result"]["dimension"] == 4);
    CHECK(j["result"]["series"]["dims"] == json::array({4, 2, 1, 0}));

    RunResult t = run_cli("--json triangularize 0 1 y^2 0");
    CHECK(t.exit_code == 0);
    json jt = json::parse(t.output);
    CHECK(jt["result"]["verified"] == true);
    CHECK(jt["result"]["case"] == "rank-two-nonabelian");
}

TEST_CASE("theta files feed the verifier") {
    RunResult t = run_cli("--json triangularize 0 1 y^2 0");
    json jt = json::parse(t.output);
    std::string path = "cli_test_theta.json";
    {
        std::ofstream f(path);
        f << jt["result"]["theta"].dump();
    }
    RunResult good = run_cli("verify " + path + " 0 1 y^2 0");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("ok: yes") != std::string::npos);
    RunResult bad = run_cli("verify " + path + " 0 x y 0");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("ok: no") != std::string::npos);
    RunResult missing = run_cli("verify no_such_file.json 1 0");
    CHECK(missing.exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("same seed, same bytes") {
    RunResult a = run_cli("--json --seed 11 fuzz --cases 10 --recovery 2");
    RunResult b = run_cli("--json --seed 11 fuzz --cases 10 --recovery 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    json j = json::parse(a.output);
    CHECK(j["result"]["seed"] == 11);
    CHECK(j["result"]["pass"] == true);

    RunResult c = run_cli("--json --seed 12 fuzz --cases 10 --recovery 2");
    CHECK(c.output != a.output);
}

TEST_CASE("timing flag adds a field without disturbing results") {
    RunResult r = run_cli("--json --timing bracket 1 0 0 x");
    CHECK(r.exit_code == 0);
    // stderr carries the note, stdout the document
    CHECK(r.output.find("time:") != std::string::npos);
    auto brace = r.output.find('{');
    auto end = r.output.find('\n', brace);
    json j = json::parse(r.output.substr(brace, end - brace));
    CHECK(j.contains("time_ms"));
    CHECK(j["result"]["p"] == "0");
    CHECK(j["result"]["q"] == "1");
}
