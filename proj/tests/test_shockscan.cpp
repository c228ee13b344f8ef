#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "shockprof/errors.hpp"
#include "shockscan/config.hpp"
#include "shockscan/scan.hpp"

using namespace shockscan;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string &name) {
    const fs::path p = fs::temp_directory_path() / ("shockscan_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(const std::string &args) {
    const std::string cmd = std::string(SHOCKSCAN_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture_cli(const std::string &args, const fs::path &file) {
    const std::string cmd = std::string(SHOCKSCAN_BINARY) + " " + args + " >" + file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    static_cast<void>(status);
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string csv_of(const std::vector<ScanRecord> &records) {
    std::ostringstream os;
    write_scan_csv(os, records);
    return os.str();
}

}  // namespace

TEST_CASE("grid syntax") {
    const auto g = parse_grid("0:1:5");
    REQUIRE(g.size() == 5);
    CHECK(g[1] == Approx(0.25));
    CHECK(g.back() == 1.0);
    CHECK(parse_grid("0.1, 4/3").size() == 2);
    CHECK(parse_grid("2")[0] == 2.0);
    CHECK(parse_grid("0.01:0.99:50").size() == 50);
    CHECK_THROWS_AS(parse_grid(""), shockprof::ConfigError);
    CHECK_THROWS_AS(parse_grid("0:1:0"), shockprof::ConfigError);
    CHECK_THROWS_AS(parse_grid("a:b:c"), shockprof::ConfigError);
}

TEST_CASE("INI settings") {
    const fs::path dir = scratch_dir("ini");
    {
        std::ofstream f(dir / "run.ini");
        f << "[shock]\nq1 = 3\nstrength = 0.2, 0.4\n[model]\nname = ft\nchi = 0.5\n[solver]\nrel_tol = 1e-9\n";
    }
    Settings s;
    load_ini(dir / "run.ini", s);
    const RunConfig c = build_config(s);
    CHECK(c.strength.size() == 2);
    CHECK(c.chi[0] == 0.5);
    CHECK(c.solver.rel_tol == 1e-9);

    {
        std::ofstream f(dir / "bad.ini");
        f << "[shock]\nq1 = 3\nspeed = 2\n";
    }
    Settings bad;
    CHECK_THROWS_AS(load_ini(dir / "bad.ini", bad), shockprof::ConfigError);
}

TEST_CASE("configuration rules") {
    CHECK_THROWS_AS(build_config({{"shock.q0", "3.2"}, {"shock.strength", "0.5"}}), shockprof::ConfigError);
    CHECK_THROWS_AS(build_config({{"model.name", "bdn"}, {"model.mu", "1"}}), shockprof::ConfigError);
    CHECK_THROWS_AS(build_config({{"model.name", "bdn"}, {"model.mu", "4/3"}, {"model.nu", "4"}, {"eos.name", "power-law:5"}}),
                    shockprof::ConfigError);
    CHECK_THROWS_AS(build_config({{"model.name", "navier"}}), shockprof::ConfigError);
    CHECK_THROWS_AS(build_config({{"model.mu", "1"}}), shockprof::ConfigError);
    const RunConfig c = build_config({{"shock.strength", "0.9, 0.1, 0.1"}});
    CHECK(c.strength == std::vector<double>{0.1, 0.9});
}

TEST_CASE("scans are deterministic and independent of the worker count") {
    const RunConfig c = build_config({{"model.name", "bdn"},
                                      {"model.mu", "4/3"},
                                      {"model.nu", "4"},
                                      {"shock.q1", "0.5, 3"},
                                      {"shock.strength", "0.05:0.95:10"}});
    const std::string serial = csv_of(run_scan(c, 1));
    CHECK(serial == csv_of(run_scan(c, 1)));
    CHECK(serial == csv_of(run_scan(c, 4)));
    CHECK(std::count(serial.begin(), serial.end(), '\n') == 21);
}

TEST_CASE("failures become rows") {
    const RunConfig c = build_config({{"shock.strength", "0, 0.5"}});
    const auto records = run_scan(c, 1);
    REQUIRE(records.size() == 2);
    CHECK(records[0].classification == "no_shock");
    CHECK(records[1].classification == "connected_monotone");
}

TEST_CASE("command-line exit codes") {
    const fs::path dir = scratch_dir("cli");
    const std::string out = " --out " + dir.string();
    CHECK(run_cli("rh --q1 3 --strength 0.5") == 0);
    CHECK(run_cli("rh --q1 3 --strength 0") == 2);
    CHECK(run_cli("rh --eos power-law:5 --q1 1 --strength 0.5") == 0);
    CHECK(run_cli("profile" + out) == 0);
    CHECK(fs::exists(dir / "profile.csv"));
    CHECK(fs::exists(dir / "profile.json"));
    CHECK(run_cli("profile --model bdn --mu 4/3 --nu 4 --eos power-law:5" + out) == 1);
    CHECK(run_cli("scan --strength ''" + out) == 1);
    CHECK(run_cli("scan --q1 3 --strength 0.2:0.3:0" + out) == 1);
    CHECK(run_cli("causality 1 4/3 4") == 0);
    CHECK(run_cli("causality 1 0 4") == 1);
    CHECK(run_cli("frobnicate") == 1);
    CHECK(run_cli("--help") == 0);
}

TEST_CASE("command-line output") {
    const fs::path dir = scratch_dir("cli_out");
    const auto rh = nlohmann::json::parse(capture_cli("rh --q1 3 --strength 0.5", dir / "rh.json"));
    CHECK(rh["rho_minus"].get<double>() == Approx(0.87868).epsilon(1e-5));
    CHECK(rh["rho_plus"].get<double>() == Approx(5.12132).epsilon(1e-5));
    CHECK(rh["lax"].get<bool>());
    const auto k5 = nlohmann::json::parse(capture_cli("rh --eos power-law:5 --q1 1 --strength 0.5", dir / "k5.json"));
    CHECK(k5["rho_minus"].get<double>() == Approx(1.5 - 1.5 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(k5["rho_plus"].get<double>() == Approx(1.5 + 1.5 / std::sqrt(2.0)).epsilon(1e-10));

    CHECK(capture_cli("causality 1 4/3 4", dir / "c1.txt").starts_with("sharply_causal (bound 4)\n"));
    CHECK(capture_cli("causality 1 4/3 2", dir / "c2.txt").starts_with("strictly_causal\n"));
    CHECK(capture_cli("causality 1 1 1", dir / "c3.txt").starts_with("acausal\n"));
    CHECK(capture_cli("profile --out " + dir.string(), dir / "p.txt").find("connected_monotone") != std::string::npos);
}

TEST_CASE("scan command output files") {
    const fs::path a = scratch_dir("scan_a"), b = scratch_dir("scan_b");
    const std::string args = "scan --model ft --chi 0.5 --strength 0.1:0.9:5 --gnuplot";
    REQUIRE(run_cli(args + " --workers 1 --out " + a.string()) == 0);
    REQUIRE(run_cli(args + " --workers 3 --out " + b.string()) == 0);
    CHECK(slurp(a / "scan.csv") == slurp(b / "scan.csv"));
    CHECK(fs::exists(a / "scan.gp"));
    const auto summary = nlohmann::json::parse(slurp(a / "scan_summary.json"));
    CHECK(summary["points"].get<int>() == 5);
    CHECK(summary["counts"]["connected_monotone"].get<int>() == 5);

    // Without a strength the scan covers the default strength grid.
    const fs::path d = scratch_dir("scan_default");
    REQUIRE(run_cli("scan --model bdn --mu 4/3 --nu 4 --out " + d.string()) == 0);
    const auto s = nlohmann::json::parse(slurp(d / "scan_summary.json"));
    CHECK(s["points"].get<int>() == 50);
}
