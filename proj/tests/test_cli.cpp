#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "dirac/cli.hpp"

using namespace dirac;

namespace {

int run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"darboux"};
    argv.insert(argv.end(), args);
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("grid parsing") {
    const GridSpec g = parse_grid("-10:10:0.05");
    CHECK(g.start == -10.0);
    CHECK(g.stop == 10.0);
    CHECK(g.step == 0.05);
    CHECK_THROWS(parse_grid("1:2"));
    CHECK_THROWS(parse_grid("2:1:0.1"));
    CHECK_THROWS(parse_grid("1:2:-0.1"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"chain", "--spec", "/nonexistent/missing.cfg"}) == 2);
    CHECK(run({"verify"}) == 2);
    CHECK(run({"verify", "--all", "--example", "ex1"}) == 2);
    CHECK(run({"verify", "--example", "ex99"}) == 2);
    CHECK(run({"figure", "--n", "7"}) == 2);
    CHECK(run({"reduce", "--example", "ex9"}) == 2); // no pseudoscalar step
}

TEST_CASE("list and verify succeed") {
    CHECK(run({"list"}) == 0);
    CHECK(run({"verify", "--example", "ex1"}) == 0);
}

TEST_CASE("transform writes a deterministic potential table") {
    const char* out1 = "cli_v1_a.csv";
    const char* out2 = "cli_v1_b.csv";
    CHECK(run({"transform", "--seed", "free_mass:m=1", "--eps", "0.5",
               "--grid", "-10:10:0.5", "--out", out1}) == 0);
    CHECK(run({"transform", "--seed", "free_mass:m=1", "--eps", "0.5",
               "--grid", "-10:10:0.5", "--out", out2}) == 0);
    const std::string a = slurp(out1);
    CHECK(a == slurp(out2));
    CHECK(a.substr(0, a.find('\n')) == "x,p,q");
    // q column ends with ~ k tanh(10k) = 0.866...
    CHECK(a.find("0.86602") != std::string::npos);
    std::remove(out1);
    std::remove(out2);
}

TEST_CASE("chain subcommand with a spec file") {
    const char* cfg = "cli_chain.cfg";
    {
        std::ofstream out(cfg);
        out << "# two-soliton chain\n";
        out << "potential=free_mass:m=1\n";
        out << "step 1: seed=one/sinh, lambda=1, mu=0.5\n";
        out << "step 2: seed=sinh/expm, lambda=-0.5, mu=0.3\n";
    }
    const char* csv = "cli_chain.csv";
    CHECK(run({"chain", "--spec", cfg, "--grid", "-6:6:0.5", "--out", csv,
               "--cross-check"}) == 0);
    const std::string table = slurp(csv);
    CHECK(table.substr(0, table.find('\n')) == "x,p,q");
    std::remove(cfg);
    std::remove(csv);
}

TEST_CASE("figure subcommand emits the catalog CSV") {
    const char* csv = "cli_fig3.csv";
    CHECK(run({"figure", "--n", "3", "--out", csv}) == 0);
    const std::string table = slurp(csv);
    CHECK(table.substr(0, table.find('\n')) == "x,B=1.0002,B=1.2,q0");
    std::remove(csv);
    CHECK(run({"figure", "--n", "2", "--figure-variant", "--out", csv}) == 0);
    std::remove(csv);
}

TEST_CASE("reduce subcommand reports the diagram check") {
    const char* csv = "cli_red.csv";
    CHECK(run({"reduce", "--example", "ex1", "--grid", "-6:6:0.5", "--out",
               csv}) == 0);
    const std::string table = slurp(csv);
    CHECK(table.substr(0, table.find('\n')) ==
          "x,U0_plus,U0_minus,U1_plus,U1_minus");
    std::remove(csv);
}
