// Experiment CLI: run the WOA / GWO / WOAGWO benchmark protocol and emit the
// report tables. See README.md for the output schemas.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <woagwo/woagwo.hpp>

namespace {

using namespace woagwo;

struct ExperimentFlags {
    std::string config_path;
    std::vector<std::string> algos;
    std::string suite;
    std::string functions;
    int dim = 0;
    int pop = 0;
    int iters = 0;
    int runs = 0;
    std::uint64_t seed = 0;
    std::string hunt_condition;
    std::string fallback;
    std::string greedy_ref;
    std::string gwo_granularity;
    std::string a_formula;
    std::string penalty;
    std::string constraints;
    std::string out_dir;
    int threads = -1;
    double spiral_b = 0;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
    cmd->add_option("--algo", f.algos, "algorithm: woa|gwo|woagwo (repeatable)");
    cmd->add_option("--suite", f.suite, "classic23|vessel");
    cmd->add_option("--functions", f.functions, "comma-separated classic ids, e.g. 1,9,16");
    cmd->add_option("--dim", f.dim, "dimension for the variable-dimension functions");
    cmd->add_option("--pop", f.pop, "population size");
    cmd->add_option("--iters", f.iters, "iterations per run");
    cmd->add_option("--runs", f.runs, "independent runs per (algorithm, function)");
    cmd->add_option("--seed", f.seed, "master seed (u64)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--hunt-condition", f.hunt_condition, "conjunctive|literal");
    cmd->add_option("--fallback", f.fallback, "stay|spiral");
    cmd->add_option("--greedy-ref", f.greedy_ref, "own|global");
    cmd->add_option("--gwo-granularity", f.gwo_granularity, "default|per_dimension|per_agent");
    cmd->add_option("--a-formula", f.a_formula, "range_consistent|literal_plus");
    cmd->add_option("--penalty", f.penalty, "static:<coef>|death (vessel only)");
    cmd->add_option("--constraints", f.constraints, "corrected|literal (vessel only)");
    cmd->add_option("--spiral-b", f.spiral_b, "spiral constant b");
    cmd->add_option("--out", f.out_dir, "output directory");
    cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
}

ExperimentConfig build_config(const CLI::App& cmd, const ExperimentFlags& f) {
    ExperimentConfig c;
    if (cmd.count("--config")) c = parse_config(read_file(f.config_path));
    if (cmd.count("--algo")) {
        c.algorithms.clear();
        for (const auto& a : f.algos) c.algorithms.push_back(parse_algorithm(a));
    }
    if (cmd.count("--suite")) c.suite = parse_suite(f.suite);
    if (cmd.count("--functions")) {
        c.suite = Suite::explicit_list;
        c.functions.clear();
        for (const auto& tok : detail::split(f.functions, ','))
            c.functions.push_back(static_cast<int>(detail::parse_u64(tok)));
    }
    if (cmd.count("--dim")) c.dim = f.dim;
    if (cmd.count("--pop")) c.optimizer.pop_size = static_cast<std::size_t>(f.pop);
    if (cmd.count("--iters")) c.optimizer.max_iter = static_cast<std::size_t>(f.iters);
    if (cmd.count("--runs")) c.runs = static_cast<std::size_t>(f.runs);
    if (cmd.count("--seed")) c.master_seed = f.seed;
    if (cmd.count("--hunt-condition"))
        c.optimizer.hunt_condition =
            f.hunt_condition == "literal" ? HuntCondition::literal : HuntCondition::conjunctive;
    if (cmd.count("--fallback"))
        c.optimizer.exploitation_fallback =
            f.fallback == "spiral" ? ExploitFallback::spiral : ExploitFallback::stay;
    if (cmd.count("--greedy-ref"))
        c.optimizer.greedy_reference = f.greedy_ref == "global" ? GreedyReference::global_best
                                                                : GreedyReference::own_previous;
    if (cmd.count("--gwo-granularity")) {
        if (f.gwo_granularity == "default")
            c.optimizer.gwo_coeff_granularity.reset();
        else if (f.gwo_granularity == "per_dimension")
            c.optimizer.gwo_coeff_granularity = CoeffGranularity::per_dimension;
        else if (f.gwo_granularity == "per_agent")
            c.optimizer.gwo_coeff_granularity = CoeffGranularity::per_agent;
        else
            throw std::invalid_argument("unknown --gwo-granularity: " + f.gwo_granularity);
    }
    if (cmd.count("--a-formula")) {
        if (f.a_formula == "range_consistent")
            c.optimizer.a_formula = AFormula::range_consistent;
        else if (f.a_formula == "literal_plus")
            c.optimizer.a_formula = AFormula::literal_plus;
        else
            throw std::invalid_argument("unknown --a-formula: " + f.a_formula);
    }
    if (cmd.count("--penalty")) c.penalty = parse_penalty(f.penalty);
    if (cmd.count("--constraints")) {
        if (f.constraints == "corrected")
            c.constraint_forms = ConstraintForms::corrected;
        else if (f.constraints == "literal")
            c.constraint_forms = ConstraintForms::literal;
        else
            throw std::invalid_argument("unknown --constraints: " + f.constraints);
    }
    if (cmd.count("--spiral-b")) c.optimizer.spiral_b = f.spiral_b;
    if (cmd.count("--out")) c.out_dir = f.out_dir;
    if (cmd.count("--threads")) c.threads = static_cast<unsigned>(f.threads);
    return c;
}

std::string raw_path(const std::string& raw, const std::string& out_dir) {
    if (!raw.empty()) return raw;
    return (std::filesystem::path(out_dir) / "raw_runs.csv").string();
}

void write_out(const std::string& out_dir, const std::string& name,
               const std::string& content) {
    std::filesystem::create_directories(out_dir);
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    write_file(path, content);
    std::cerr << "wrote " << path << "\n";
}

int cmd_run(const CLI::App& cmd, const ExperimentFlags& f) {
    const ExperimentConfig config = build_config(cmd, f);
    const ExperimentReport report = run_experiment(config);
    write_out(config.out_dir, "config.json", emit_config(config));
    write_out(config.out_dir, "raw_runs.csv", emit_raw_csv(report));
    write_out(config.out_dir, "summary.csv", emit_summary_csv(report));
    write_out(config.out_dir, "summary.md", emit_summary_md(report));
    write_out(config.out_dir, "boxdata.csv", emit_boxdata_csv(report));
    if (config.algorithms.size() >= 2)
        write_out(config.out_dir, "wilcoxon.csv", emit_wilcoxon_csv(report));
    if (config.suite == Suite::vessel) {
        write_out(config.out_dir, "vessel.csv", emit_vessel_csv(report, config.constraint_forms));
        write_out(config.out_dir, "vessel.md", emit_vessel_md(report, config.constraint_forms));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"WOA / GWO / WOAGWO benchmark harness"};
    app.require_subcommand(1);

    ExperimentFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "execute an experiment and emit all tables");
    add_experiment_flags(run_cmd, run_flags);

    std::string raw_file, out_dir = "out", constraints = "corrected";
    double alpha = 0.05;

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "avg/std table from an existing raw_runs.csv");
    compare_cmd->add_option("--raw", raw_file, "raw_runs.csv path (default <out>/raw_runs.csv)");
    compare_cmd->add_option("--out", out_dir, "output directory");

    CLI::App* wilcoxon_cmd =
        app.add_subcommand("wilcoxon", "pairwise rank-sum table from raw_runs.csv");
    wilcoxon_cmd->add_option("--raw", raw_file, "raw_runs.csv path");
    wilcoxon_cmd->add_option("--out", out_dir, "output directory");
    wilcoxon_cmd->add_option("--alpha", alpha, "significance level (default 0.05)");

    CLI::App* boxdata_cmd =
        app.add_subcommand("boxdata", "five-number summaries from raw_runs.csv");
    boxdata_cmd->add_option("--raw", raw_file, "raw_runs.csv path");
    boxdata_cmd->add_option("--out", out_dir, "output directory");

    CLI::App* vessel_cmd =
        app.add_subcommand("vessel", "pressure-vessel design report from raw_runs.csv");
    vessel_cmd->add_option("--raw", raw_file, "raw_runs.csv path");
    vessel_cmd->add_option("--out", out_dir, "output directory");
    vessel_cmd->add_option("--constraints", constraints, "corrected|literal");

    CLI::App* list_cmd = app.add_subcommand("list-functions", "print the function catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(*run_cmd, run_flags);
        if (list_cmd->parsed()) {
            std::cout << woagwo::catalog_csv();
            return 0;
        }
        const woagwo::ExperimentReport report =
            woagwo::parse_raw_csv(woagwo::read_file(raw_path(raw_file, out_dir)));
        if (compare_cmd->parsed()) {
            write_out(out_dir, "summary.csv", woagwo::emit_summary_csv(report));
            write_out(out_dir, "summary.md", woagwo::emit_summary_md(report));
            std::cout << woagwo::emit_summary_md(report);
        } else if (wilcoxon_cmd->parsed()) {
            const std::string csv = woagwo::emit_wilcoxon_csv(report, alpha);
            write_out(out_dir, "wilcoxon.csv", csv);
            std::cout << csv;
        } else if (boxdata_cmd->parsed()) {
            const std::string csv = woagwo::emit_boxdata_csv(report);
            write_out(out_dir, "boxdata.csv", csv);
            std::cout << csv;
        } else if (vessel_cmd->parsed()) {
            const woagwo::ConstraintForms forms = constraints == "literal"
                                                      ? woagwo::ConstraintForms::literal
                                                      : woagwo::ConstraintForms::corrected;
            write_out(out_dir, "vessel.csv", woagwo::emit_vessel_csv(report, forms));
            write_out(out_dir, "vessel.md", woagwo::emit_vessel_md(report, forms));
            std::cout << woagwo::emit_vessel_md(report, forms);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
