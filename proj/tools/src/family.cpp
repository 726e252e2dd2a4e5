#include "family.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperopic/errors.hpp"
#include "hyperopic/generators.hpp"
#include "hyperopic/io.hpp"

namespace hyperopic::cli {
namespace {

std::vector<std::pair<Vertex, Vertex>> parse_removals(const std::string& text) {
    std::vector<std::pair<Vertex, Vertex>> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dash = part.find('-');
        detail::require(dash != std::string::npos && dash > 0 && dash + 1 < part.size(),
                        "removals must look like \"0-1,2-3\"");
        try {
            out.emplace_back(std::stoi(part.substr(0, dash)), std::stoi(part.substr(dash + 1)));
        } catch (const std::exception&) {
            throw InputError("removals must look like \"0-1,2-3\"");
        }
    }
    detail::require(!out.empty(), "empty removal list");
    return out;
}

Graph read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_graph(text);
}

} // namespace

Graph build_graph(const FamilySpec& spec) {
    detail::require(spec.family.empty() != spec.input.empty(),
                    "choose exactly one of --family and --input");
    if (!spec.input.empty()) return read_input(spec.input);

    const std::string& f = spec.family;
    if (f == "clique") return clique(spec.n);
    if (f == "clique-minus-edges") {
        detail::require(!spec.remove.empty(), "clique-minus-edges needs --remove");
        return clique_minus_edges(spec.n, parse_removals(spec.remove));
    }
    if (f == "path") return path(spec.n);
    if (f == "cycle") return cycle(spec.n);
    if (f == "tree") return random_tree(spec.n, spec.seed);
    if (f == "complete-bipartite") return complete_bipartite(spec.a, spec.b);
    if (f == "co-clique") return co_clique(spec.n);
    if (f == "join-coclique") return clique_join_coclique(spec.r, spec.s);
    if (f == "petersen") return petersen();
    if (f == "incidence-plane") return incidence_plane(spec.q);
    if (f == "grid") return grid(spec.rows, spec.cols);
    if (f == "outerplanar") return maximal_outerplanar(spec.n, spec.seed);
    if (f == "random") return random_connected(spec.n, spec.p, spec.seed);
    throw InputError("unknown family: " + f +
                     " (known: clique, clique-minus-edges, path, cycle, tree, "
                     "complete-bipartite, co-clique, join-coclique, petersen, "
                     "incidence-plane, grid, outerplanar, random)");
}

std::string describe(const FamilySpec& spec) {
    if (!spec.input.empty()) return "input=" + (spec.input == "-" ? "stdin" : spec.input);
    std::ostringstream out;
    out << "family=" << spec.family;
    const std::string& f = spec.family;
    if (f == "clique" || f == "path" || f == "cycle" || f == "co-clique")
        out << " n=" << spec.n;
    if (f == "clique-minus-edges") out << " n=" << spec.n << " remove=" << spec.remove;
    if (f == "tree" || f == "outerplanar") out << " n=" << spec.n << " seed=" << spec.seed;
    if (f == "complete-bipartite") out << " a=" << spec.a << " b=" << spec.b;
    if (f == "join-coclique") out << " r=" << spec.r << " s=" << spec.s;
    if (f == "incidence-plane") out << " q=" << spec.q;
    if (f == "grid") out << " rows=" << spec.rows << " cols=" << spec.cols;
    if (f == "random") out << " n=" << spec.n << " p=" << spec.p << " seed=" << spec.seed;
    return out.str();
}

} // namespace hyperopic::cli
