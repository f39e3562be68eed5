#pragma once

#include <string>

#include <json.hpp>

#include "experiment.hpp"
#include "report.hpp"

// JSON round trip for ExperimentConfig. The file carries the same tokens the
// CLI flags accept, so a committed config fully reproduces an experiment.

namespace woagwo {

inline std::string to_string(Suite s) {
    switch (s) {
        case Suite::classic23: return "classic23";
        case Suite::vessel: return "vessel";
        case Suite::explicit_list: return "explicit";
    }
    return "?";
}

inline Suite parse_suite(const std::string& s) {
    if (s == "classic23") return Suite::classic23;
    if (s == "vessel") return Suite::vessel;
    if (s == "explicit") return Suite::explicit_list;
    throw std::invalid_argument("unknown suite: " + s);
}

inline std::string penalty_token(const PenaltyPolicy& p) {
    if (p.mode == PenaltyMode::death) return "death";
    return "static:" + format_full(p.coefficient);
}

inline PenaltyPolicy parse_penalty(const std::string& s) {
    if (s == "death") return {PenaltyMode::death, 1e6};
    if (s.rfind("static:", 0) == 0) {
        PenaltyPolicy p;
        p.mode = PenaltyMode::static_penalty;
        p.coefficient = detail::parse_double(s.substr(7));
        if (!(p.coefficient > 0))
            throw std::invalid_argument("penalty coefficient must be > 0");
        return p;
    }
    throw std::invalid_argument("unknown penalty policy: " + s + " (want static:<coef> or death)");
}

inline std::string algorithm_token(Algorithm a) {
    switch (a) {
        case Algorithm::woa: return "woa";
        case Algorithm::gwo: return "gwo";
        case Algorithm::woagwo: return "woagwo";
    }
    return "?";
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    nlohmann::json algos = nlohmann::json::array();
    for (Algorithm a : c.algorithms) algos.push_back(algorithm_token(a));
    j["algorithms"] = algos;
    j["suite"] = to_string(c.suite);
    j["functions"] = c.functions;
    j["dim"] = c.dim;
    j["runs"] = c.runs;
    j["pop_size"] = c.optimizer.pop_size;
    j["max_iter"] = c.optimizer.max_iter;
    j["spiral_b"] = c.optimizer.spiral_b;
    j["master_seed"] = c.master_seed;
    j["hunt_condition"] =
        c.optimizer.hunt_condition == HuntCondition::conjunctive ? "conjunctive" : "literal";
    j["fallback"] =
        c.optimizer.exploitation_fallback == ExploitFallback::stay ? "stay" : "spiral";
    j["greedy_reference"] =
        c.optimizer.greedy_reference == GreedyReference::own_previous ? "own" : "global";
    if (c.optimizer.gwo_coeff_granularity)
        j["gwo_coeff_granularity"] =
            *c.optimizer.gwo_coeff_granularity == CoeffGranularity::per_dimension
                ? "per_dimension"
                : "per_agent";
    else
        j["gwo_coeff_granularity"] = "default";
    j["leader_update"] =
        c.optimizer.leader_update == LeaderUpdate::three_best ? "three_best" : "overwrite";
    j["a_formula"] = c.optimizer.a_formula == AFormula::range_consistent ? "range_consistent"
                                                                         : "literal_plus";
    j["penalty"] = penalty_token(c.penalty);
    j["constraints"] = c.constraint_forms == ConstraintForms::corrected ? "corrected" : "literal";
    j["out_dir"] = c.out_dir;
    j["threads"] = c.threads;
    return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    if (j.contains("algorithms")) {
        c.algorithms.clear();
        for (const auto& a : j.at("algorithms"))
            c.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    }
    if (j.contains("suite")) c.suite = parse_suite(j.at("suite").get<std::string>());
    if (j.contains("functions")) c.functions = j.at("functions").get<std::vector<int>>();
    if (j.contains("dim")) c.dim = j.at("dim").get<int>();
    if (j.contains("runs")) c.runs = j.at("runs").get<std::size_t>();
    if (j.contains("pop_size")) c.optimizer.pop_size = j.at("pop_size").get<std::size_t>();
    if (j.contains("max_iter")) c.optimizer.max_iter = j.at("max_iter").get<std::size_t>();
    if (j.contains("spiral_b")) c.optimizer.spiral_b = j.at("spiral_b").get<double>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("hunt_condition")) {
        const auto s = j.at("hunt_condition").get<std::string>();
        if (s == "conjunctive") c.optimizer.hunt_condition = HuntCondition::conjunctive;
        else if (s == "literal") c.optimizer.hunt_condition = HuntCondition::literal;
        else throw std::invalid_argument("unknown hunt_condition: " + s);
    }
    if (j.contains("fallback")) {
        const auto s = j.at("fallback").get<std::string>();
        if (s == "stay") c.optimizer.exploitation_fallback = ExploitFallback::stay;
        else if (s == "spiral") c.optimizer.exploitation_fallback = ExploitFallback::spiral;
        else throw std::invalid_argument("unknown fallback: " + s);
    }
    if (j.contains("greedy_reference")) {
        const auto s = j.at("greedy_reference").get<std::string>();
        if (s == "own") c.optimizer.greedy_reference = GreedyReference::own_previous;
        else if (s == "global") c.optimizer.greedy_reference = GreedyReference::global_best;
        else throw std::invalid_argument("unknown greedy_reference: " + s);
    }
    if (j.contains("gwo_coeff_granularity")) {
        const auto s = j.at("gwo_coeff_granularity").get<std::string>();
        if (s == "default") c.optimizer.gwo_coeff_granularity.reset();
        else if (s == "per_dimension")
            c.optimizer.gwo_coeff_granularity = CoeffGranularity::per_dimension;
        else if (s == "per_agent")
            c.optimizer.gwo_coeff_granularity = CoeffGranularity::per_agent;
        else throw std::invalid_argument("unknown gwo_coeff_granularity: " + s);
    }
    if (j.contains("a_formula")) {
        const auto s = j.at("a_formula").get<std::string>();
        if (s == "range_consistent") c.optimizer.a_formula = AFormula::range_consistent;
        else if (s == "literal_plus") c.optimizer.a_formula = AFormula::literal_plus;
        else throw std::invalid_argument("unknown a_formula: " + s);
    }
    if (j.contains("penalty")) c.penalty = parse_penalty(j.at("penalty").get<std::string>());
    if (j.contains("constraints")) {
        const auto s = j.at("constraints").get<std::string>();
        if (s == "corrected") c.constraint_forms = ConstraintForms::corrected;
        else if (s == "literal") c.constraint_forms = ConstraintForms::literal;
        else throw std::invalid_argument("unknown constraints mode: " + s);
    }
    if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
    return c;
}

inline std::string emit_config(const ExperimentConfig& c) { return to_json(c).dump(2) + "\n"; }

inline ExperimentConfig parse_config(const std::string& text) {
    return config_from_json(nlohmann::json::parse(text));
}

} // namespace woagwo
