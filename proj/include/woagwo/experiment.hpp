#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "benchmarks.hpp"
#include "optimizer.hpp"
#include "pressure_vessel.hpp"
#include "prng.hpp"

// Experiment orchestration: a config names algorithms x functions x runs;
// every run gets its own substream addressed by hash(algorithm, function,
// run) under the master seed, so results never depend on scheduling and
// adding an algorithm never perturbs another's runs.

namespace woagwo {

enum class Suite { classic23, vessel, explicit_list };

// Synthetic function id for the pressure vessel in records and reports.
inline constexpr int kVesselFunctionId = 100;

struct ExperimentConfig {
    std::vector<Algorithm> algorithms{Algorithm::woa, Algorithm::gwo, Algorithm::woagwo};
    Suite suite = Suite::classic23;
    std::vector<int> functions; // explicit_list only
    int dim = 30;
    std::size_t runs = 30;
    OptimizerParams optimizer;
    std::uint64_t master_seed = 42;
    PenaltyPolicy penalty;
    ConstraintForms constraint_forms = ConstraintForms::corrected;
    std::string out_dir = "out";
    unsigned threads = 0; // 0: hardware concurrency

    bool operator==(const ExperimentConfig&) const = default;
};

struct RunRecord {
    int function_id = 0;
    Algorithm algorithm = Algorithm::woa;
    std::uint32_t run = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0;
    std::uint64_t evals = 0;
    std::vector<double> best_position;
};

struct ExperimentReport {
    std::vector<int> function_ids;      // row order
    std::vector<Algorithm> algorithms;  // column order
    std::vector<RunRecord> records;     // sorted by (function, algorithm, run)

    std::vector<double> final_bests(int function_id, Algorithm algorithm) const {
        std::vector<double> out;
        for (const auto& r : records)
            if (r.function_id == function_id && r.algorithm == algorithm)
                out.push_back(r.best_fitness);
        return out;
    }
};

inline std::uint64_t algorithm_code(Algorithm a) {
    switch (a) {
        case Algorithm::woa: return 1;
        case Algorithm::gwo: return 2;
        case Algorithm::woagwo: return 3;
    }
    return 0;
}

// hash(algorithm, function, run) for substream addressing
inline std::uint64_t run_stream_index(Algorithm algorithm, int function_id, std::uint32_t run) {
    std::uint64_t h = mix64(algorithm_code(algorithm));
    h = mix64(h ^ static_cast<std::uint64_t>(function_id));
    h = mix64(h ^ run);
    return h;
}

inline std::vector<int> suite_function_ids(const ExperimentConfig& config) {
    switch (config.suite) {
        case Suite::classic23: {
            std::vector<int> ids(23);
            for (int i = 0; i < 23; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
            return ids;
        }
        case Suite::vessel: return {kVesselFunctionId};
        case Suite::explicit_list: return config.functions;
    }
    throw std::invalid_argument("suite_function_ids: unknown suite");
}

inline Problem build_problem(const ExperimentConfig& config, int function_id) {
    if (function_id == kVesselFunctionId)
        return pressure_vessel(config.penalty, config.constraint_forms);
    int fd = kClassic23.at(static_cast<std::size_t>(function_id - 1)).fixed_dim;
    return classic23(function_id, fd > 0 ? fd : config.dim);
}

inline void validate(const ExperimentConfig& config) {
    if (config.algorithms.empty())
        throw std::invalid_argument("ExperimentConfig: no algorithms selected");
    for (std::size_t i = 0; i < config.algorithms.size(); ++i)
        for (std::size_t j = i + 1; j < config.algorithms.size(); ++j)
            if (config.algorithms[i] == config.algorithms[j])
                throw std::invalid_argument("ExperimentConfig: duplicate algorithm");
    if (config.runs < 1) throw std::invalid_argument("ExperimentConfig: runs must be >= 1");
    if (config.dim < 1) throw std::invalid_argument("ExperimentConfig: dim must be >= 1");
    if (config.suite == Suite::explicit_list) {
        if (config.functions.empty())
            throw std::invalid_argument("ExperimentConfig: explicit suite needs function ids");
        for (int id : config.functions)
            if ((id < 1 || id > 23) && id != kVesselFunctionId)
                throw std::invalid_argument("ExperimentConfig: unknown function id " +
                                            std::to_string(id));
    }
    validate(config.optimizer);
}

inline ExperimentReport run_experiment(const ExperimentConfig& config) {
    validate(config);
    const std::vector<int> function_ids = suite_function_ids(config);

    std::vector<Problem> problems;
    problems.reserve(function_ids.size());
    for (int fid : function_ids) problems.push_back(build_problem(config, fid));

    struct Task {
        std::size_t problem_index;
        std::size_t algorithm_index;
        std::uint32_t run;
    };
    std::vector<Task> tasks;
    tasks.reserve(function_ids.size() * config.algorithms.size() * config.runs);
    for (std::size_t f = 0; f < function_ids.size(); ++f)
        for (std::size_t a = 0; a < config.algorithms.size(); ++a)
            for (std::uint32_t r = 0; r < config.runs; ++r)
                tasks.push_back({f, a, r});

    ExperimentReport report;
    report.function_ids = function_ids;
    report.algorithms = config.algorithms;
    report.records.resize(tasks.size());

    const RandomStream master(config.master_seed);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error_message;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size() || failed.load()) return;
            const Task& task = tasks[t];
            const Algorithm algo = config.algorithms[task.algorithm_index];
            const int fid = function_ids[task.problem_index];
            try {
                RandomStream stream = master.split(run_stream_index(algo, fid, task.run));
                RunTrace trace =
                    run(algo, problems[task.problem_index], config.optimizer, stream);
                report.records[t] = {fid,          algo,        task.run,
                                     trace.seed,   trace.best_fitness,
                                     trace.evals,  std::move(trace.best_position)};
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    error_message = std::string("run failed: algorithm=") + to_string(algo) +
                                    " function=" + std::to_string(fid) +
                                    " run=" + std::to_string(task.run) + ": " + e.what();
            }
        }
    };

    unsigned thread_count = config.threads != 0 ? config.threads
                                                : std::max(1u, std::thread::hardware_concurrency());
    thread_count = static_cast<unsigned>(
        std::min<std::size_t>(thread_count, tasks.size()));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error(error_message);
    return report;
}

} // namespace woagwo
