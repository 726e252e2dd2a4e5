#include "hyperopic/game.hpp"

#include <algorithm>

#include "hyperopic/errors.hpp"

namespace hyperopic {

CopConfig canonical_config(CopConfig c) {
    std::sort(c.begin(), c.end());
    return c;
}

std::string config_to_string(const CopConfig& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    out += ']';
    return out;
}

VertexSet config_common_neighborhood(const Graph& g, const CopConfig& c) {
    return common_neighborhood(g, std::span<const Vertex>(c.data(), c.size()));
}

namespace {

// Where a robber can stand unseen: the common neighborhood for hyperopic
// cops, nowhere for classical ones.
VertexSet hidden_zone(const Graph& g, const CopConfig& cops, GameMode mode) {
    if (mode == GameMode::classical) return VertexSet(g.order());
    return config_common_neighborhood(g, cops);
}

} // namespace

bool robber_visible(const Graph& g, const CopConfig& cops, Vertex robber, GameMode mode) {
    g.check_vertex(robber);
    for (Vertex c : cops) {
        if (c == robber) return true;
    }
    return !hidden_zone(g, cops, mode).contains(robber);
}

namespace {

void option_product(const Graph& g, const CopConfig& cops, std::size_t index,
                    CopConfig& current, std::vector<CopConfig>& out) {
    if (index == cops.size()) {
        out.push_back(canonical_config(current));
        return;
    }
    Vertex at = cops[index];
    current.push_back(at);
    option_product(g, cops, index + 1, current, out);
    current.back() = -1;
    for (Vertex v : g.neighbors(at).to_vector()) {
        current.back() = v;
        option_product(g, cops, index + 1, current, out);
    }
    current.pop_back();
}

} // namespace

std::vector<CopConfig> cop_move_options(const Graph& g, const CopConfig& cops) {
    std::vector<CopConfig> out;
    CopConfig current;
    current.reserve(cops.size());
    option_product(g, cops, 0, current, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool match_cops(const Graph& g, const CopConfig& from, std::vector<bool>& used,
                std::size_t index, const CopConfig& to) {
    if (index == from.size()) return true;
    Vertex src = from[index];
    for (std::size_t j = 0; j < to.size(); ++j) {
        if (used[j]) continue;
        Vertex dst = to[j];
        if (dst != src && !g.has_edge(src, dst)) continue;
        used[j] = true;
        if (match_cops(g, from, used, index + 1, to)) return true;
        used[j] = false;
    }
    return false;
}

} // namespace

bool legal_cop_transition(const Graph& g, const CopConfig& from, const CopConfig& to) {
    if (from.size() != to.size()) return false;
    std::vector<bool> used(to.size(), false);
    return match_cops(g, from, used, 0, to);
}

namespace {

Branch captured_branch(int order) {
    return Branch{Observation{ObsKind::captured, -1}, VertexSet(order)};
}

// Seen branches in vertex order, then at most one unseen branch.
std::vector<Branch> split_by_visibility(const VertexSet& candidates, const VertexSet& hidden_set) {
    std::vector<Branch> out;
    VertexSet hidden = candidates;
    hidden &= hidden_set;
    VertexSet seen = candidates;
    seen -= hidden;
    for (Vertex v : seen.to_vector()) {
        out.push_back(Branch{Observation{ObsKind::seen, v},
                             VertexSet::singleton(hidden_set.universe(), v)});
    }
    if (!hidden.empty()) out.push_back(Branch{Observation{ObsKind::unseen, -1}, hidden});
    return out;
}

} // namespace

std::vector<Branch> initial_branches(const Graph& g, const CopConfig& cops, GameMode mode) {
    VertexSet free = VertexSet::full(g.order());
    for (Vertex c : cops) free.erase(c);
    return split_by_visibility(free, hidden_zone(g, cops, mode));
}

std::vector<Branch> observe_after_cop_move(const Graph& g, const CopConfig& to,
                                           const VertexSet& belief, GameMode mode) {
    detail::invariant(!belief.empty(), "belief must stay nonempty");
    VertexSet remaining = belief;
    for (Vertex c : to) remaining.erase(c);
    if (remaining.empty()) return {captured_branch(g.order())};
    return split_by_visibility(remaining, hidden_zone(g, to, mode));
}

std::vector<Branch> robber_move_branches(const Graph& g, const CopConfig& cops,
                                         const VertexSet& belief, GameMode mode) {
    detail::invariant(!belief.empty(), "belief must stay nonempty");
    VertexSet candidates(g.order());
    for (Vertex b : belief.to_vector()) {
        candidates.insert(b);
        candidates |= g.neighbors(b);
    }
    for (Vertex c : cops) candidates.erase(c);
    if (candidates.empty()) return {captured_branch(g.order())};
    return split_by_visibility(candidates, hidden_zone(g, cops, mode));
}

std::string observation_to_string(const Observation& obs) {
    switch (obs.kind) {
    case ObsKind::seen: return "seen " + std::to_string(obs.vertex);
    case ObsKind::unseen: return "unseen";
    case ObsKind::captured: return "captured";
    }
    return "?";
}

namespace {

const Branch& select_branch(const std::vector<Branch>& branches, const Observation& obs) {
    for (const Branch& b : branches) {
        if (b.obs.kind != obs.kind) continue;
        if (obs.kind == ObsKind::seen && b.obs.vertex != obs.vertex) continue;
        return b;
    }
    throw Error("observation does not match any information branch");
}

} // namespace

void BeliefTracker::set_initial(const CopConfig& cops, const Observation& obs) {
    detail::invariant(obs.kind != ObsKind::captured, "placement cannot capture");
    cops_ = cops;
    belief_ = select_branch(initial_branches(*graph_, cops, mode_), obs).belief;
}

void BeliefTracker::apply_cop_move(const CopConfig& to, const Observation& obs) {
    belief_ = select_branch(observe_after_cop_move(*graph_, to, belief_, mode_), obs).belief;
    cops_ = to;
}

void BeliefTracker::apply_robber_move(const Observation& obs) {
    belief_ = select_branch(robber_move_branches(*graph_, cops_, belief_, mode_), obs).belief;
}

} // namespace hyperopic
