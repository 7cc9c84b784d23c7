#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("APD_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "APD_BIN must point at the cli binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli renders symbolic values") {
    const CmdResult latex = run_cli("value --family adnum --n 0 --format latex");
    CHECK(latex.code == 0);
    CHECK(latex.out == "\\frac{\\log \\lambda}{\\lambda - 1}\n");

    const CmdResult text = run_cli("value --family ynum --n 0");
    CHECK(text.code == 0);
    CHECK(text.out == "2/(lambda - 1)\n");
}

TEST_CASE("cli evaluates exactly at rational lambda") {
    const CmdResult r = run_cli("value --family ynum --n 2 --lambda 2 --exact");
    CHECK(r.code == 0);
    CHECK(r.out == "64\n");

    const CmdResult half = run_cli("value --family ynum --n 1 --lambda 1/2 --exact");
    CHECK(half.code == 0);
    CHECK(half.out == "-2\n"); // -2*(1/4)/(1/4)

    const CmdResult log2 = run_cli("value --family adnum --n 0 --lambda 2 --exact");
    CHECK(log2.code == 0);
    CHECK(log2.out == "log(2)\n");
}

TEST_CASE("cli emits json") {
    const CmdResult r = run_cli("value --family daehee --n 3 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "daehee");
    CHECK(j["n"] == 3);
    CHECK(j["k"].is_null());
    CHECK(j["value"] == "-3/2");

    const CmdResult f = run_cli("value --family adpoly --n 1 --x 1 --lambda e --format json");
    CHECK(f.code == 0);
    const auto jf = nlohmann::json::parse(f.out);
    CHECK(jf["value"].is_number());
    CHECK(jf["value"].get<double>() == doctest::Approx(0.66130311266153408).epsilon(1e-15));
}

TEST_CASE("cli rejects bad usage") {
    CHECK(run_cli("value --family bogus --n 1").code == 2);
    CHECK(run_cli("value --family ynum").code == 2);                          // --n missing
    CHECK(run_cli("value --family qpoly --n 1 --x 1 --lambda 2 --exact").code == 2); // --k missing
    CHECK(run_cli("value --family daehee --n 2 --lambda 2").code == 2);
    CHECK(run_cli("value --family ynum --n 1 --lambda 1").code == 2);  // pole in float mode
    CHECK(run_cli("value --family ynum --n 1 --lambda -3").code == 2);
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli verify subcommand") {
    const CmdResult ok = run_cli("verify --max-n 3 --samples 1 --seed 11");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const CmdResult js = run_cli("verify --max-n 2 --samples 1 --json");
    CHECK(js.code == 0);
    std::istringstream lines(js.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["passed"] == true);
        CHECK(j.contains("identity"));
        CHECK(j.contains("params"));
        ++count;
    }
    CHECK(count > 0);

    // an impossible term budget must surface as a reported failure
    const CmdResult bad = run_cli("verify --max-n 2 --samples 1 --series-terms 2");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL series-representation") != std::string::npos);
}

TEST_CASE("cli writes plot csv") {
    const std::string path = "apd_cli_test_plot.csv";
    const std::string args = "plot-data --family adpoly --n-list 0,1 --sweep lambda --fixed 1 "
                             "--min 1.5 --max 3.5 --samples 5 --out " +
                             path;
    CHECK(run_cli(args).code == 0);
    const std::string first = slurp(path);
    std::istringstream lines(first);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "param,D0,D1");
    std::size_t rows = 0;
    std::string row;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 5);
    CHECK(first.substr(first.size() - 1) == "\n");

    // identical request, identical bytes
    CHECK(run_cli(args).code == 0);
    CHECK(slurp(path) == first);

    CHECK(run_cli("plot-data --family adpoly --n-list 0 --sweep lambda --fixed 1 "
                  "--min 0.5 --max 1.5 --samples 3 --out " +
                  path)
              .code == 2); // range crosses the pole
    CHECK(run_cli("plot-data --family adpoly --n-list 0 --sweep x --fixed 1 "
                  "--min 0 --max 1 --samples 3 --out " +
                  path)
              .code == 2); // fixed lambda = 1
    CHECK(run_cli("plot-data --family qpoly --n-list 0 --sweep lambda --fixed 1 "
                  "--min 2 --max 3 --samples 3 --out " +
                  path)
              .code == 2); // qpoly needs k
    std::remove(path.c_str());
}
