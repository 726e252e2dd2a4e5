#include "hyperopic/io.hpp"

#include <cctype>
#include <sstream>

namespace hyperopic {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw InputError("edge list: malformed header, expected \"n m\"");
    detail::require(n >= 1 && n <= 1'000'000, "edge list: order out of range");
    detail::require(m >= 0, "edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        detail::require(u >= 0 && v >= 0 && u < n && v < n, "edge list: endpoint out of range");
        detail::require(u < v, "edge list: edges must be written \"u v\" with u < v");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string rest;
    if (in >> rest) throw InputError("edge list: trailing content after declared edges");
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph6_decode(const std::string& text) {
    std::string s = strip(text);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    detail::require(!s.empty(), "graph6: empty input");
    for (char c : s)
        detail::require(c >= 63 && c <= 126, "graph6: byte outside printable range");

    std::size_t pos = 0;
    long long n;
    if (s[pos] == 126) {
        detail::require(s.size() >= 4, "graph6: truncated order field");
        detail::require(s[1] != 126, "graph6: orders above 258047 unsupported");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
        pos = 4;
    } else {
        n = s[pos] - 63;
        pos = 1;
    }
    detail::require(n >= 1, "graph6: empty graph order");

    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    detail::require(static_cast<long long>(s.size() - pos) == need,
                    "graph6: body length does not match order");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        detail::require(n <= 258047, "graph6: orders above 258047 unsupported");
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::edge_list) return parse_edge_list(text);
    if (format == GraphFormat::graph6) return graph6_decode(text);
    std::string s = strip(text);
    detail::require(!s.empty(), "empty graph input");
    if (std::isdigit(static_cast<unsigned char>(s[0]))) return parse_edge_list(text);
    return graph6_decode(text);
}

} // namespace hyperopic
