#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "pressure_vessel.hpp"
#include "stats.hpp"

// Report emission. Two float formats:
//   format_sci  - scientific with a 6-decimal mantissa and a bare exponent
//                 ("1.200000e-74", "0.000000e0"), used in the aggregate
//                 tables;
//   format_full - shortest round-trip representation, used in raw_runs.csv
//                 so aggregates recomputed from the file match exactly.

namespace woagwo {

inline std::string format_sci(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0.000000e0";
    int exp = static_cast<int>(std::floor(std::log10(std::fabs(v))));
    auto mantissa = [&](int e) {
        // two-step scaling keeps subnormal inputs exact
        if (e < -300) return (v * 1e300) / std::pow(10.0, e + 300);
        if (e > 300) return (v / 1e300) / std::pow(10.0, e - 300);
        return v / std::pow(10.0, e);
    };
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", mantissa(exp));
    if (std::strncmp(buf, "10.", 3) == 0 || std::strncmp(buf, "-10.", 4) == 0) {
        ++exp; // rounding carried into the next decade
        std::snprintf(buf, sizeof buf, "%.6f", mantissa(exp));
    }
    return std::string(buf) + "e" + std::to_string(exp);
}

inline std::string format_full(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string format_p(double p) {
    return p < 1e-15 ? "<1e-15" : format_sci(p);
}

inline std::string function_label(int function_id) {
    if (function_id == kVesselFunctionId) return "vessel";
    return "f" + std::to_string(function_id);
}

inline int parse_function_label(const std::string& label) {
    if (label == "vessel") return kVesselFunctionId;
    if (label.size() >= 2 && label[0] == 'f') {
        int id = 0;
        auto res = std::from_chars(label.data() + 1, label.data() + label.size(), id);
        if (res.ec == std::errc() && res.ptr == label.data() + label.size()) return id;
    }
    throw std::invalid_argument("unknown function label: " + label);
}

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "WOA" || s == "woa") return Algorithm::woa;
    if (s == "GWO" || s == "gwo") return Algorithm::gwo;
    if (s == "WOAGWO" || s == "woagwo") return Algorithm::woagwo;
    throw std::invalid_argument("unknown algorithm: " + s);
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline double parse_double(const std::string& s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad float field: " + s);
    return v;
}

inline std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer field: " + s);
    return v;
}

} // namespace detail

// ---- raw per-run records ----

inline std::string emit_raw_csv(const ExperimentReport& report) {
    std::string out = "function_id,algorithm,run,seed,best_fitness,evals,best_position\n";
    for (const auto& r : report.records) {
        out += function_label(r.function_id);
        out += ',';
        out += to_string(r.algorithm);
        out += ',';
        out += std::to_string(r.run);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_full(r.best_fitness);
        out += ',';
        out += std::to_string(r.evals);
        out += ',';
        for (std::size_t i = 0; i < r.best_position.size(); ++i) {
            if (i) out += ';';
            out += format_full(r.best_position[i]);
        }
        out += '\n';
    }
    return out;
}

inline ExperimentReport parse_raw_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "function_id,algorithm,run,seed,best_fitness,evals,best_position")
        throw std::invalid_argument("raw_runs.csv: bad header");
    ExperimentReport report;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = detail::split(line, ',');
        if (fields.size() != 7)
            throw std::invalid_argument("raw_runs.csv: expected 7 fields, got line: " + line);
        RunRecord r;
        r.function_id = parse_function_label(fields[0]);
        r.algorithm = parse_algorithm(fields[1]);
        r.run = static_cast<std::uint32_t>(detail::parse_u64(fields[2]));
        r.seed = detail::parse_u64(fields[3]);
        r.best_fitness = detail::parse_double(fields[4]);
        r.evals = detail::parse_u64(fields[5]);
        if (!fields[6].empty())
            for (const auto& c : detail::split(fields[6], ';'))
                r.best_position.push_back(detail::parse_double(c));
        if (std::find(report.function_ids.begin(), report.function_ids.end(), r.function_id) ==
            report.function_ids.end())
            report.function_ids.push_back(r.function_id);
        if (std::find(report.algorithms.begin(), report.algorithms.end(), r.algorithm) ==
            report.algorithms.end())
            report.algorithms.push_back(r.algorithm);
        report.records.push_back(std::move(r));
    }
    if (report.records.empty()) throw std::invalid_argument("raw_runs.csv: no records");
    return report;
}

// ---- aggregate tables ----

inline std::string emit_summary_csv(const ExperimentReport& report) {
    std::string out = "function_id,algorithm,mean,std,min,q1,median,q3,max\n";
    for (int fid : report.function_ids)
        for (Algorithm algo : report.algorithms) {
            const auto bests = report.final_bests(fid, algo);
            if (bests.empty()) continue;
            const SampleStats s = describe(bests);
            out += function_label(fid);
            out += ',';
            out += to_string(algo);
            for (double v : {s.mean, s.std, s.min, s.q1, s.median, s.q3, s.max}) {
                out += ',';
                out += format_sci(v);
            }
            out += '\n';
        }
    return out;
}

inline std::string emit_summary_md(const ExperimentReport& report) {
    std::string out = "| F |";
    for (Algorithm algo : report.algorithms) {
        out += std::string(" ") + to_string(algo) + " avg | " + to_string(algo) + " std |";
    }
    out += "\n|---|";
    for (std::size_t i = 0; i < report.algorithms.size(); ++i) out += "---|---|";
    out += '\n';
    for (int fid : report.function_ids) {
        out += "| " + function_label(fid) + " |";
        for (Algorithm algo : report.algorithms) {
            const auto bests = report.final_bests(fid, algo);
            if (bests.empty()) {
                out += " | |";
                continue;
            }
            const SampleStats s = describe(bests);
            out += " " + format_sci(s.mean) + " | " + format_sci(s.std) + " |";
        }
        out += '\n';
    }
    return out;
}

inline std::string emit_wilcoxon_csv(const ExperimentReport& report, double alpha = 0.05) {
    if (report.algorithms.size() < 2)
        throw std::invalid_argument("wilcoxon: need at least two algorithms");
    std::string out = "function_id,algo_a,algo_b,u,z,p,significant\n";
    for (int fid : report.function_ids)
        for (std::size_t i = 0; i < report.algorithms.size(); ++i)
            for (std::size_t j = i + 1; j < report.algorithms.size(); ++j) {
                const auto a = report.final_bests(fid, report.algorithms[i]);
                const auto b = report.final_bests(fid, report.algorithms[j]);
                if (a.empty() || b.empty()) continue;
                const WilcoxonOutcome w = ranksum(a, b, alpha);
                out += function_label(fid);
                out += ',';
                out += to_string(report.algorithms[i]);
                out += ',';
                out += to_string(report.algorithms[j]);
                out += ',';
                out += format_sci(w.u_statistic);
                out += ',';
                out += format_sci(w.z);
                out += ',';
                out += format_p(w.p_two_sided);
                out += ',';
                out += w.significant ? "true" : "false";
                out += '\n';
            }
    return out;
}

inline std::string emit_boxdata_csv(const ExperimentReport& report) {
    std::string out = "function_id,algorithm,min,q1,median,q3,max\n";
    for (int fid : report.function_ids)
        for (Algorithm algo : report.algorithms) {
            const auto bests = report.final_bests(fid, algo);
            if (bests.empty()) continue;
            const SampleStats s = describe(bests);
            out += function_label(fid);
            out += ',';
            out += to_string(algo);
            for (double v : {s.min, s.q1, s.median, s.q3, s.max}) {
                out += ',';
                out += format_sci(v);
            }
            out += '\n';
        }
    return out;
}

// ---- pressure-vessel report ----

struct VesselSummary {
    Algorithm algorithm;
    SampleStats penalized; // over final best (penalized) costs
    double feasibility_rate = 0;
    bool has_feasible = false;
    double best_raw_cost = 0;
    std::vector<double> best_design;
    ConstraintReport best_constraints;
};

inline std::vector<VesselSummary> summarize_vessel(const ExperimentReport& report,
                                                   ConstraintForms forms) {
    std::vector<VesselSummary> out;
    for (Algorithm algo : report.algorithms) {
        VesselSummary s;
        s.algorithm = algo;
        const auto bests = report.final_bests(kVesselFunctionId, algo);
        if (bests.empty()) continue;
        s.penalized = describe(bests);
        std::size_t feasible_count = 0, total = 0;
        for (const auto& r : report.records) {
            if (r.function_id != kVesselFunctionId || r.algorithm != algo) continue;
            ++total;
            const ConstraintReport rep = vessel_constraints(r.best_position, forms);
            if (!rep.feasible) continue;
            ++feasible_count;
            const double raw = vessel_cost(r.best_position);
            if (!s.has_feasible || raw < s.best_raw_cost) {
                s.has_feasible = true;
                s.best_raw_cost = raw;
                s.best_design = r.best_position;
                s.best_constraints = rep;
            }
        }
        s.feasibility_rate =
            total ? static_cast<double>(feasible_count) / static_cast<double>(total) : 0.0;
        out.push_back(std::move(s));
    }
    return out;
}

inline std::string emit_vessel_csv(const ExperimentReport& report,
                                   ConstraintForms forms = ConstraintForms::corrected) {
    std::string out =
        "algorithm,mean,std,feasibility_rate,best_feasible_raw_cost,x1,x2,x3,x4,g1,g2,g3,g4\n";
    for (const auto& s : summarize_vessel(report, forms)) {
        out += to_string(s.algorithm);
        out += ',';
        out += format_sci(s.penalized.mean);
        out += ',';
        out += format_sci(s.penalized.std);
        out += ',';
        out += format_sci(s.feasibility_rate);
        if (s.has_feasible) {
            out += ',';
            out += format_sci(s.best_raw_cost);
            for (double v : s.best_design) {
                out += ',';
                out += format_sci(v);
            }
            for (double g : s.best_constraints.g) {
                out += ',';
                out += format_sci(g);
            }
        } else {
            for (int i = 0; i < 9; ++i) out += ",na";
        }
        out += '\n';
    }
    return out;
}

inline std::string emit_vessel_md(const ExperimentReport& report,
                                  ConstraintForms forms = ConstraintForms::corrected) {
    std::string out =
        "| Algorithm | Avg. | Std. | Feasible runs | Best feasible cost | Best design (x1, x2, "
        "x3, x4) |\n|---|---|---|---|---|---|\n";
    for (const auto& s : summarize_vessel(report, forms)) {
        out += "| " + std::string(to_string(s.algorithm)) + " | " + format_sci(s.penalized.mean) +
               " | " + format_sci(s.penalized.std) + " | " + format_sci(s.feasibility_rate) +
               " | ";
        if (s.has_feasible) {
            out += format_sci(s.best_raw_cost) + " | ";
            for (std::size_t i = 0; i < s.best_design.size(); ++i)
                out += (i ? ", " : "") + format_sci(s.best_design[i]);
            out += " |";
        } else {
            out += "na | na |";
        }
        out += '\n';
    }
    return out;
}

// ---- function catalog ----

// Machine-readable catalog of the 23 classical functions at their default
// dimensions; data/classic23.csv ships this exact text.
inline std::string catalog_csv() {
    std::string out = "id,name,dim,lower,upper,known_best,kind\n";
    for (const auto& e : kClassic23) {
        const int dim = e.fixed_dim > 0 ? e.fixed_dim : 30;
        const Problem p = classic23(e.id, dim);
        out += std::to_string(e.id);
        out += ',';
        out += e.name;
        out += ',';
        out += std::to_string(dim);
        out += ',';
        out += format_full(e.lower);
        out += ',';
        out += format_full(e.upper);
        out += ',';
        out += format_full(*p.known_best);
        out += ',';
        out += to_string(e.kind);
        out += '\n';
    }
    return out;
}

// ---- file helpers ----

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace woagwo
