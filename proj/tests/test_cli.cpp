// End-to-end checks of the command-line binary: exit codes, CSV schemas,
// determinism and manifest digests. The binary path arrives as argv[1].
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tailsum/manifest.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_bin;
int g_failures = 0;

#define CLI_CHECK(cond, what)                                              \
    do {                                                                   \
        if (!(cond)) {                                                     \
            ++g_failures;                                                  \
            std::cerr << "FAILED: " << what << " at line " << __LINE__     \
                      << "\n";                                             \
        }                                                                  \
    } while (0)

int run(const std::string& args) {
    const std::string cmd = g_bin + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string l;
    while (std::getline(is, l)) out.push_back(l);
    return out;
}

fs::path fresh_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("tailsum_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

void test_exit_codes() {
    auto d = fresh_dir("codes");
    CLI_CHECK(run("definitely-not-a-command") == 2, "unknown subcommand");
    CLI_CHECK(run("--help") == 0, "help exits 0");
    CLI_CHECK(run("sample --family centered-pareto --xi 1.5 --n 100 --reps 10 --out-dir " +
                  d.string()) == 2,
              "invalid xi");
    CLI_CHECK(run("compare --family centered-pareto --xi 0.45 --n 100 --variant bogus "
                  "--reps 10 --out-dir " + d.string()) == 2,
              "unknown variant");
    CLI_CHECK(run("moments --family centered-pareto --xi 0.4 --t-grid -5 --out-dir " +
                  d.string()) == 2,
              "t below support");
    CLI_CHECK(run("compare --family centered-pareto --xi 0.45 --n 2000000000 "
                  "--reps 100000 --out-dir " + d.string()) == 3,
              "budget refusal");
    CLI_CHECK(run("sweep --family centered-pareto --xi 0.45 --n-grid 1000 "
                  "--variant unified --reps 100 --out-dir " + d.string()) == 2,
              "single-n sweep grid");
    CLI_CHECK(run("compare --family student-t --nu 1.5 --n 1000 --k 10 "
                  "--variant unified --reps 100 --out-dir " + d.string()) == 2,
              "divergent one-sided student-t config");
}

void test_moments_schema() {
    auto d = fresh_dir("moments");
    CLI_CHECK(run("moments --family centered-pareto --xi 0.4 --t-grid 1,10,100,1000 "
                  "--out-dir " + d.string()) == 0,
              "moments run");
    auto ls = lines_of(slurp(d / "moments.csv"));
    CLI_CHECK(ls.size() == 5, "moments row count");
    CLI_CHECK(ls[0] == "t,mu,sigma_sq,mu_tail_approx,sigma_sq_tail_approx",
              "moments header");
    // final row: closed-form tail approximations are close at t = 1000
    std::istringstream last(ls[4]);
    std::string cell;
    std::vector<double> row;
    while (std::getline(last, cell, ',')) row.push_back(std::stod(cell));
    CLI_CHECK(row.size() == 5, "moments column count");
    // gap scaled by max(1, |exact|): the plain mu-relative gap decays like 1/t
    // and is ~3.5e-3 here, while the absolute gap is ~2e-7
    CLI_CHECK(std::abs(row[1] - row[3]) / std::max(1.0, std::abs(row[1])) < 1e-3,
              "mu tail approx gap at t=1000");
    CLI_CHECK(std::abs(row[2] - row[4]) / std::max(1.0, std::abs(row[2])) < 1e-3,
              "sigma_sq tail approx gap at t=1000");
}

void test_rates_schema() {
    auto d = fresh_dir("rates");
    CLI_CHECK(run("rates --xi-grid 0.35:0.95:0.05 --delta 1 --svg --out-dir " +
                  d.string()) == 0,
              "rates run");
    auto ls = lines_of(slurp(d / "rates.csv"));
    CLI_CHECK(ls.size() == 14, "rates row count (13 grid points + header)");
    CLI_CHECK(ls[0] == "xi,beta_star,alpha_star,benchmark,regime", "rates header");
    CLI_CHECK(fs::exists(d / "rates.svg"), "rates svg emitted");
    CLI_CHECK(run("rates --xi-grid 0.1,0.2 --out-dir " + d.string()) == 2,
              "xi grid outside domain");
}

void test_compare_determinism_and_manifest() {
    auto d1 = fresh_dir("cmp1");
    auto d2 = fresh_dir("cmp2");
    const std::string common =
        "compare --family centered-pareto --xi 0.45 --n 1000 --k auto "
        "--variant shifted,normal-baseline --reps 20000 --seed 7 --out-dir ";
    CLI_CHECK(run(common + d1.string()) == 0, "compare run 1");
    CLI_CHECK(run(common + d2.string() + " --workers 8") == 0, "compare run 2");
    const std::string c1 = slurp(d1 / "compare.csv");
    CLI_CHECK(c1 == slurp(d2 / "compare.csv"),
              "compare byte-identical across runs and workers");

    auto ls = lines_of(c1);
    CLI_CHECK(ls[0] ==
                  "variant,n,k,ks,dkw,reps,clamp_count,rate_bound,beta_star,noise_limited",
              "compare header");
    CLI_CHECK(ls.size() == 3, "compare row count");

    // the manifest digest matches the file it describes
    auto manifest = nlohmann::json::parse(slurp(d1 / "compare_manifest.json"));
    CLI_CHECK(manifest["command"] == "compare", "manifest command");
    CLI_CHECK(manifest["seed"] == 7, "manifest seed");
    bool digest_ok = false;
    for (const auto& f : manifest["outputs"]) {
        if (f["file"].get<std::string>().find("compare.csv") != std::string::npos)
            digest_ok = f["sha256"] == tailsum::sha256_file((d1 / "compare.csv").string());
    }
    CLI_CHECK(digest_ok, "manifest sha256 matches csv");
}

void test_sweep_and_config_file() {
    auto d1 = fresh_dir("sweep1");
    auto d2 = fresh_dir("sweep2");
    const std::string common =
        "sweep --family centered-pareto --xi 0.45 --n-grid 100,1000,10000 "
        "--variant unified --reps 5000 --seed 11 --out-dir ";
    CLI_CHECK(run(common + d1.string()) == 0, "sweep run");
    CLI_CHECK(run(common + d2.string() + " --workers 8") == 0, "sweep run workers=8");
    CLI_CHECK(slurp(d1 / "sweep.csv") == slurp(d2 / "sweep.csv"),
              "sweep byte-identical across workers");
    auto ls = lines_of(slurp(d1 / "sweep.csv"));
    CLI_CHECK(ls.size() == 4, "sweep row count");
    CLI_CHECK(ls[0] ==
                  "n,variant,ks,dkw,reps,clamp_count,noise_limited,slope,"
                  "beta_star_ref,benchmark_ref",
              "sweep header");

    // flags > config json > defaults
    auto d3 = fresh_dir("sweepcfg");
    std::ofstream cfg(d3 / "cfg.json");
    cfg << R"({"family":"centered-pareto","xi":0.45,"n_grid":"100,1000,10000",)"
        << R"("variants":"unified","reps":5000,"seed":11})";
    cfg.close();
    CLI_CHECK(run("sweep --config " + (d3 / "cfg.json").string() + " --out-dir " +
                  d3.string()) == 0,
              "sweep from config file");
    CLI_CHECK(slurp(d3 / "sweep.csv") == slurp(d1 / "sweep.csv"),
              "config file reproduces flag run");
    CLI_CHECK(run("sweep --config " + (d3 / "cfg.json").string() +
                  " --seed 12 --out-dir " + d3.string()) == 0,
              "flag override of config");
    CLI_CHECK(slurp(d3 / "sweep.csv") != slurp(d1 / "sweep.csv"),
              "explicit flag beats config value");
}

void test_sample_and_kstar() {
    auto d = fresh_dir("sample");
    CLI_CHECK(run("sample --family centered-pareto --xi 0.45 --n 1000 --k 10 "
                  "--variant unified --reps 500 --seed 3 --out-dir " + d.string()) == 0,
              "sample run");
    auto ls = lines_of(slurp(d / "sample.csv"));
    CLI_CHECK(ls.size() == 501, "sample row count");
    CLI_CHECK(ls[0] == "replicate,value", "sample header");
    CLI_CHECK(run("sample --family centered-pareto --xi 0.45 --n 1000 "
                  "--variant true-sums --reps 200 --seed 3 --out-dir " + d.string()) == 0,
              "true-sums sample run");

    CLI_CHECK(run("kstar --xi 0.45 --delta 1 --n-grid 100,10000 --out-dir " +
                  d.string()) == 0,
              "kstar run");
    auto ks = lines_of(slurp(d / "kstar.csv"));
    CLI_CHECK(ks.size() == 3, "kstar row count");
    CLI_CHECK(ks[2].find(",69") != std::string::npos, "k*(10^4, 0.45, 1) = 69");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-binary>\n";
        return 2;
    }
    g_bin = argv[1];
    test_exit_codes();
    test_moments_schema();
    test_rates_schema();
    test_compare_determinism_and_manifest();
    test_sweep_and_config_file();
    test_sample_and_kstar();
    if (g_failures == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli check(s) failed\n";
    return 1;
}
