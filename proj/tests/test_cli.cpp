// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// End-to-end checks of the command-line tool (spawned as a subprocess).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(PTHETA_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("eval: exact point")
{
    RunResult r = run_cli("eval --q 0 --x 5+0i");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("1 ± 0", 0) == 0);
}

TEST_CASE("eval: polar form matches the arc anchor")
{
    RunResult r = run_cli("eval --q 0.71 --x-polar 3:0.5188451144pi --abs");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 9) == "0.0141091");
}

TEST_CASE("eval: json shape and oracle value")
{
    RunResult r = run_cli("eval --q 0.5 --x 1+0i --json --target 1e-30");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"re\":[1.6416325606551538662") != std::string::npos);
    CHECK(r.out.find("\"terms\":") != std::string::npos);
}

TEST_CASE("eval: usage errors exit 2")
{
    CHECK(run_cli("eval --q 0.5").exit_code == 2);
    CHECK(run_cli("eval --q 0.5 --x-polar 3x0.25").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("certify round trip with audit; determinism")
{
    std::string f1 = "cli_delta_1.json", f2 = "cli_delta_2.json";
    RunResult a = run_cli("certify --region Delta --q 0.05:0.4 --out " + f1);
    CHECK(a.exit_code == 0);
    RunResult b = run_cli("certify --region Delta --q 0.05:0.4 --out " + f2);
    CHECK(b.exit_code == 0);
    CHECK(slurp(f1) == slurp(f2));
    CHECK(!slurp(f1).empty());

    CHECK(run_cli("audit " + f1).exit_code == 0);

    // corruption flips the audit
    std::string text = slurp(f1);
    auto pos = text.find("\"cells\":[{\"piece\"");
    REQUIRE(pos != std::string::npos);
    auto qpos = text.find("\"q\":[", pos);
    REQUIRE(qpos != std::string::npos);
    text[qpos + 6] = text[qpos + 6] == '1' ? '2' : '1';
    std::ofstream(f1, std::ios::binary) << text;
    CHECK(run_cli("audit " + f1).exit_code == 1);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("certify: malformed ranges exit 2")
{
    CHECK(run_cli("certify --region Delta --q 0.5:0.1").exit_code == 2);
    CHECK(run_cli("certify --region Delta --q 0:0.5").exit_code == 2);
    CHECK(run_cli("certify --region bogus --q 0.1:0.5").exit_code == 2);
}

TEST_CASE("certify: negative control exits 1")
{
    RunResult r =
        run_cli("certify --region segment:-8:-7 --q 0.305:0.315 --max-cells 3000 --out nc.json");
    CHECK(r.exit_code == 1);
    CHECK(slurp("nc.json").find("\"status\":\"failed\"") != std::string::npos);
    CHECK(run_cli("audit nc.json").exit_code == 1);
    std::remove("nc.json");
}

TEST_CASE("zeros: count and list")
{
    RunResult r = run_cli("zeros --q 0.726475 --box -0.5:0.5:2.5:3.3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("count 1", 0) == 0);

    RunResult rj = run_cli("zeros --q 0.726475 --box -0.5:0.5:2.5:3.3 --list --json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.out.find("\"count\":1") != std::string::npos);
    CHECK(rj.out.find("\"re\":") != std::string::npos);
    CHECK(rj.out.find("2.908") != std::string::npos);
}

TEST_CASE("zeros: truncation roots")
{
    RunResult r = run_cli("zeros --q -0.96 --trunc 100");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("8.24") != std::string::npos); // 0.824... printed in e-notation
}

TEST_CASE("trace: csv on stdout")
{
    RunResult r = run_cli("trace --q-from 0.72 --q-to 0.722 --seed 0+2.95i");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("branch,q,re,im,residual\n", 0) == 0);
}

TEST_CASE("spectral: first value quickly")
{
    RunResult r = run_cli("spectral --count 1 --q-from 0.29 --q-to 0.33");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"q\":0.3092493") != std::string::npos);
    CHECK(r.out.find("\"re\":-7.50325") != std::string::npos);
}

TEST_CASE("precision override is honored")
{
    RunResult r = run_cli("--precision-bits 64 eval --q 0.5 --x 1+0i --json");
    CHECK(r.exit_code == 0);
    // the tail inflation dominates at 64 bits; the enclosure still pins 13
    // digits
    CHECK(r.out.find("\"re\":[1.641632560655") != std::string::npos);
}
