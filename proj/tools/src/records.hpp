#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperopic/metrics.hpp"
#include "hyperopic/solver.hpp"

#include "json.hpp"

namespace hyperopic::cli {

// Everything one solve/certificate run learned about one graph. Exact solver
// values are reported with "="; strategy certificates only ever justify "<=".
struct RunRecord {
    std::string descriptor;
    int n = 0;
    int m = 0;
    GraphMetrics metrics;

    std::optional<int> classical;          // exact c
    std::optional<int> hyperopic;          // exact c_H
    std::optional<int> hyperopic_upper;    // strategy certificate bound
    std::optional<int> k_test;             // single-k win query
    std::optional<bool> k_win;
    std::string mode = "hyperopic";
    std::string method = "solver"; // or "strategy-certificate"
    std::optional<int> rounds_bound;

    double elapsed_seconds = 0.0;
    std::size_t positions = 0;
    SolveLimits limits;
    std::vector<std::string> limits_hit;
};

void print_human(std::ostream& out, const RunRecord& rec);
nlohmann::ordered_json to_json(const RunRecord& rec);
std::string csv_header();
std::string to_csv(const RunRecord& rec);

} // namespace hyperopic::cli
