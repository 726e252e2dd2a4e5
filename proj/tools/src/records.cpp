#include "records.hpp"

#include <sstream>

namespace hyperopic::cli {
namespace {

std::string join_hits(const std::vector<std::string>& hits) {
    if (hits.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i) out += ',';
        out += hits[i];
    }
    return out;
}

std::string girth_text(const GraphMetrics& m) {
    return m.girth ? std::to_string(*m.girth) : "acyclic";
}

} // namespace

void print_human(std::ostream& out, const RunRecord& rec) {
    out << rec.descriptor << "\n";
    out << "  n=" << rec.n << " m=" << rec.m << " diameter=" << rec.metrics.diameter
        << " girth=" << girth_text(rec.metrics) << " min_degree=" << rec.metrics.min_degree
        << " max_degree=" << rec.metrics.max_degree
        << (rec.metrics.is_tree ? " tree" : "")
        << (rec.metrics.triangle_free ? " triangle-free" : "") << "\n";
    if (rec.k_test) {
        out << "  " << rec.mode << " with k=" << *rec.k_test << " cops: ";
        if (!rec.k_win) {
            out << "undecided (limit hit)";
        } else {
            out << (*rec.k_win ? "cop win" : "cop loss");
            if (*rec.k_win && rec.rounds_bound)
                out << ", capture within " << *rec.rounds_bound << " rounds";
        }
        out << "\n";
    }
    if (rec.classical) out << "  c = " << *rec.classical << "\n";
    if (rec.hyperopic) out << "  c_H = " << *rec.hyperopic << "\n";
    if (rec.hyperopic_upper) {
        out << "  c_H <= " << *rec.hyperopic_upper << " (strategy certificate";
        if (rec.rounds_bound) out << ", capture within " << *rec.rounds_bound << " rounds";
        out << ")\n";
    }
    out << "  method=" << rec.method << " positions=" << rec.positions << " elapsed="
        << rec.elapsed_seconds << "s\n";
    out << "  limits: positions<=" << rec.limits.max_positions << " seconds<="
        << rec.limits.max_seconds << " hit=" << join_hits(rec.limits_hit) << "\n";
}

nlohmann::ordered_json to_json(const RunRecord& rec) {
    nlohmann::ordered_json j;
    j["descriptor"] = rec.descriptor;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["metrics"] = {
        {"connected", rec.metrics.connected},
        {"diameter", rec.metrics.diameter},
        {"girth", rec.metrics.girth ? nlohmann::ordered_json(*rec.metrics.girth)
                                    : nlohmann::ordered_json(nullptr)},
        {"min_degree", rec.metrics.min_degree},
        {"max_degree", rec.metrics.max_degree},
        {"is_tree", rec.metrics.is_tree},
        {"triangle_free", rec.metrics.triangle_free},
        {"cut_vertices", rec.metrics.cut_vertices},
    };
    if (rec.k_test) {
        j["k"] = *rec.k_test;
        j["mode"] = rec.mode;
        j["cop_win"] = rec.k_win ? nlohmann::ordered_json(*rec.k_win)
                                 : nlohmann::ordered_json(nullptr);
    }
    j["c"] = rec.classical ? nlohmann::ordered_json(*rec.classical)
                           : nlohmann::ordered_json(nullptr);
    j["c_H"] = rec.hyperopic ? nlohmann::ordered_json(*rec.hyperopic)
                             : nlohmann::ordered_json(nullptr);
    if (rec.hyperopic_upper) j["c_H_upper"] = *rec.hyperopic_upper;
    j["method"] = rec.method;
    j["rounds_bound"] = rec.rounds_bound ? nlohmann::ordered_json(*rec.rounds_bound)
                                         : nlohmann::ordered_json(nullptr);
    j["elapsed_seconds"] = rec.elapsed_seconds;
    j["positions"] = rec.positions;
    j["limits"] = {
        {"max_positions", rec.limits.max_positions},
        {"max_seconds", rec.limits.max_seconds},
        {"hit", rec.limits_hit},
    };
    return j;
}

std::string csv_header() {
    return "descriptor,n,m,diameter,girth,min_degree,max_degree,is_tree,triangle_free,"
           "k,mode,cop_win,c,c_H,c_H_upper,method,rounds_bound,elapsed_seconds,positions,"
           "limits_hit";
}

std::string to_csv(const RunRecord& rec) {
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
    std::ostringstream out;
    out << '"' << rec.descriptor << '"' << ',' << rec.n << ',' << rec.m << ','
        << rec.metrics.diameter << ',' << girth_text(rec.metrics) << ','
        << rec.metrics.min_degree << ',' << rec.metrics.max_degree << ','
        << rec.metrics.is_tree << ',' << rec.metrics.triangle_free << ','
        << opt(rec.k_test) << ',' << rec.mode << ','
        << (rec.k_win ? (*rec.k_win ? "1" : "0") : "") << ',' << opt(rec.classical) << ','
        << opt(rec.hyperopic) << ',' << opt(rec.hyperopic_upper) << ',' << rec.method << ','
        << opt(rec.rounds_bound) << ',' << rec.elapsed_seconds << ',' << rec.positions << ','
        << join_hits(rec.limits_hit);
    return out.str();
}

} // namespace hyperopic::cli
