#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <woagwo/config_io.hpp>
#include <woagwo/report.hpp>

// End-to-end checks of the installed subcommands, driving the real binary.

namespace fs = std::filesystem;
using woagwo::read_file;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const fs::path& dir) {
    const fs::path out = dir / "stdout.txt";
    const std::string cmd = std::string(WOAGWO_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WEXITSTATUS(status);
    if (fs::exists(out)) r.out = read_file(out.string());
    return r;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("woagwo_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const std::string kTinyFlags =
    "--algo woa --algo woagwo --functions 1,16 --dim 4 --pop 6 --iters 8 --runs 3 --seed 11";

} // namespace

TEST_CASE("list-functions prints the catalog") {
    const fs::path dir = fresh_dir("list");
    const CliResult r = run_cli("list-functions", dir);
    CHECK(r.exit_code == 0);
    CHECK(r.out == woagwo::catalog_csv());
}

TEST_CASE("run emits the full report set") {
    const fs::path dir = fresh_dir("run");
    const std::string out = (dir / "out").string();
    const CliResult r = run_cli("run " + kTinyFlags + " --out " + out, dir);
    REQUIRE(r.exit_code == 0);
    for (const char* name :
         {"config.json", "raw_runs.csv", "summary.csv", "summary.md", "boxdata.csv",
          "wilcoxon.csv"})
        CHECK(fs::exists(fs::path(out) / name));

    const auto report = woagwo::parse_raw_csv(read_file(out + "/raw_runs.csv"));
    CHECK(report.records.size() == 2 * 2 * 3);

    // config round-trips through the emitted file
    const auto config = woagwo::parse_config(read_file(out + "/config.json"));
    CHECK(config.runs == 3);
    CHECK(config.optimizer.pop_size == 6);
    CHECK(config.master_seed == 11);
}

TEST_CASE("worker count does not change any output byte") {
    const fs::path dir = fresh_dir("threads");
    const std::string out1 = (dir / "t1").string(), out3 = (dir / "t3").string();
    REQUIRE(run_cli("run " + kTinyFlags + " --threads 1 --out " + out1, dir).exit_code == 0);
    REQUIRE(run_cli("run " + kTinyFlags + " --threads 3 --out " + out3, dir).exit_code == 0);
    for (const char* name : {"raw_runs.csv", "summary.csv", "summary.md", "boxdata.csv",
                             "wilcoxon.csv"})
        CHECK(read_file(out1 + "/" + name) == read_file(out3 + "/" + name));
}

TEST_CASE("report subcommands recompute from raw_runs.csv") {
    const fs::path dir = fresh_dir("reports");
    const std::string out = (dir / "out").string();
    REQUIRE(run_cli("run " + kTinyFlags + " --out " + out, dir).exit_code == 0);
    const std::string summary = read_file(out + "/summary.csv");
    const std::string wilcoxon = read_file(out + "/wilcoxon.csv");
    const std::string boxdata = read_file(out + "/boxdata.csv");

    CHECK(run_cli("compare --out " + out, dir).exit_code == 0);
    CHECK(run_cli("wilcoxon --out " + out, dir).exit_code == 0);
    CHECK(run_cli("boxdata --out " + out, dir).exit_code == 0);
    CHECK(read_file(out + "/summary.csv") == summary);
    CHECK(read_file(out + "/wilcoxon.csv") == wilcoxon);
    CHECK(read_file(out + "/boxdata.csv") == boxdata);
}

TEST_CASE("vessel pipeline") {
    const fs::path dir = fresh_dir("vessel");
    const std::string out = (dir / "out").string();
    const CliResult r = run_cli(
        "run --algo woagwo --algo gwo --suite vessel --pop 8 --iters 30 --runs 3 --seed 2 "
        "--penalty static:1e6 --out " + out, dir);
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(fs::path(out) / "vessel.csv"));
    CHECK(fs::exists(fs::path(out) / "vessel.md"));

    const CliResult again = run_cli("vessel --out " + out, dir);
    CHECK(again.exit_code == 0);
    CHECK(again.out.find("| Algorithm |") != std::string::npos);
}

TEST_CASE("config file drives a run and flags override it") {
    const fs::path dir = fresh_dir("config");
    woagwo::ExperimentConfig c;
    c.algorithms = {woagwo::Algorithm::gwo};
    c.suite = woagwo::Suite::explicit_list;
    c.functions = {9};
    c.dim = 3;
    c.runs = 2;
    c.optimizer.pop_size = 5;
    c.optimizer.max_iter = 6;
    c.out_dir = (dir / "from_config").string();
    woagwo::write_file((dir / "exp.json").string(), woagwo::emit_config(c));

    REQUIRE(run_cli("run --config " + (dir / "exp.json").string(), dir).exit_code == 0);
    auto report = woagwo::parse_raw_csv(read_file(c.out_dir + "/raw_runs.csv"));
    CHECK(report.records.size() == 2);

    // --runs overrides the file value
    REQUIRE(run_cli("run --config " + (dir / "exp.json").string() + " --runs 4 --out " +
                        (dir / "override").string(),
                    dir).exit_code == 0);
    report = woagwo::parse_raw_csv(read_file((dir / "override").string() + "/raw_runs.csv"));
    CHECK(report.records.size() == 4);
}

TEST_CASE("failures exit nonzero with a one-line diagnostic") {
    const fs::path dir = fresh_dir("errors");
    CHECK(run_cli("run --algo banana --functions 1", dir).exit_code != 0);
    CHECK(run_cli("compare --raw /nonexistent/raw.csv", dir).exit_code != 0);
    const std::string err = read_file((dir / "stderr.txt").string());
    CHECK(err.rfind("error:", 0) == 0);
}
