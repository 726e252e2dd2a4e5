#include "oracle/naive_game.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace hyperopic::oracle {
namespace {

using Mask = std::uint64_t;

constexpr int kInf = 1 << 28;

Mask bit(Vertex v) { return Mask(1) << v; }

struct Arena {
    const Graph& g;
    GameMode mode;
    int n;
    Mask full;
    std::vector<Mask> open;
    std::vector<Mask> closed;
    std::vector<std::vector<Vertex>> configs;
    std::map<std::vector<Vertex>, int> config_index;
    std::vector<std::vector<std::vector<Vertex>>> moves;
    std::vector<Mask> beliefs;
    std::vector<int> belief_index;

    Arena(const Graph& graph, int k, GameMode m)
        : g(graph), mode(m), n(graph.order()), full((Mask(1) << n) - 1), open(n), closed(n) {
        if (n > 20) throw std::runtime_error("naive oracle: graph too large");
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v : g.neighbors(u).to_vector()) open[u] |= bit(v);
            closed[u] = open[u] | bit(u);
        }
        std::vector<Vertex> cur;
        enumerate_configs(0, k, cur);
        moves.resize(configs.size());
        for (std::size_t i = 0; i < configs.size(); ++i) moves[i] = cop_moves(configs[i]);
        if (mode == GameMode::classical) {
            for (Vertex v = 0; v < n; ++v) beliefs.push_back(bit(v));
        } else {
            for (Mask m2 = 1; m2 <= full; ++m2) beliefs.push_back(m2);
        }
        belief_index.assign(std::size_t(full) + 1, -1);
        for (std::size_t i = 0; i < beliefs.size(); ++i) belief_index[beliefs[i]] = int(i);
    }

    void enumerate_configs(Vertex lo, int left, std::vector<Vertex>& cur) {
        if (left == 0) {
            config_index.emplace(cur, int(configs.size()));
            configs.push_back(cur);
            return;
        }
        for (Vertex v = lo; v < n; ++v) {
            cur.push_back(v);
            enumerate_configs(v, left - 1, cur);
            cur.pop_back();
        }
    }

    std::vector<std::vector<Vertex>> cop_moves(const std::vector<Vertex>& from) const {
        std::set<std::vector<Vertex>> out;
        std::vector<Vertex> cur;
        build_moves(from, 0, cur, out);
        return {out.begin(), out.end()};
    }

    void build_moves(const std::vector<Vertex>& from, std::size_t slot, std::vector<Vertex>& cur,
                     std::set<std::vector<Vertex>>& out) const {
        if (slot == from.size()) {
            std::vector<Vertex> sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.insert(std::move(sorted));
            return;
        }
        cur.push_back(from[slot]);
        build_moves(from, slot + 1, cur, out);
        cur.pop_back();
        for (Vertex v : g.neighbors(from[slot]).to_vector()) {
            cur.push_back(v);
            build_moves(from, slot + 1, cur, out);
            cur.pop_back();
        }
    }

    Mask cop_mask(const std::vector<Vertex>& c) const {
        Mask m = 0;
        for (Vertex v : c) m |= bit(v);
        return m;
    }

    // Vertices where the robber would be invisible: the common open neighborhood
    // of every cop. Empty in classical mode, so every belief stays a singleton.
    Mask hidden(const std::vector<Vertex>& c) const {
        if (mode == GameMode::classical) return 0;
        Mask m = full;
        for (Vertex v : c) m &= open[v];
        return m;
    }

    int bidx(Mask b) const {
        int i = belief_index[b];
        if (i < 0) throw std::runtime_error("naive oracle: unindexed belief");
        return i;
    }
};

struct Values {
    // Indexed [config][belief]; kInf means no forced capture known (yet).
    std::vector<std::vector<int>> cop, rob;
};

// One observation split: visible candidates become singleton branches, the
// hidden remainder one joint branch. Returns worst child value or kInf.
int split_worst(const Arena& a, const std::vector<int>& row, Mask candidates, Mask hid) {
    int worst = 0;
    Mask unseen = candidates & hid;
    Mask visible = candidates & ~hid;
    for (Vertex v = 0; v < a.n; ++v) {
        if (!(visible & bit(v))) continue;
        int f = row[a.bidx(bit(v))];
        if (f >= kInf) return kInf;
        worst = std::max(worst, f);
    }
    if (unseen) {
        int f = row[a.bidx(unseen)];
        if (f >= kInf) return kInf;
        worst = std::max(worst, f);
    }
    return worst;
}

int eval_cop(const Arena& a, const Values& val, int ci, Mask b) {
    int best = kInf;
    for (std::size_t mi = 0; mi < a.moves[ci].size(); ++mi) {
        const auto& next = a.moves[ci][mi];
        Mask nm = a.cop_mask(next);
        Mask left = b & ~nm;
        if (left == 0) {
            best = std::min(best, 1);
            continue;
        }
        int nci = a.config_index.at(next);
        int worst = split_worst(a, val.rob[nci], left, a.hidden(next));
        if (worst < kInf) best = std::min(best, 1 + worst);
    }
    return best;
}

int eval_rob(const Arena& a, const Values& val, int ci, Mask b) {
    const auto& cops = a.configs[ci];
    Mask cm = a.cop_mask(cops);
    // Beliefs touching a cop vertex never survive a cop move, so these rows
    // are unreachable; value them benignly instead of choking the sweep.
    if (b & cm) return 0;
    Mask candidates = 0;
    for (Vertex v = 0; v < a.n; ++v)
        if (b & bit(v)) candidates |= a.closed[v];
    candidates &= ~cm;
    if (candidates == 0) throw std::runtime_error("naive oracle: robber with no legal vertex");
    return split_worst(a, val.cop[ci], candidates, a.hidden(cops));
}

} // namespace

NaiveSolve naive_solve(const Graph& g, int k, GameMode mode) {
    Arena a(g, k, mode);
    Values val;
    val.cop.assign(a.configs.size(), std::vector<int>(a.beliefs.size(), kInf));
    val.rob = val.cop;

    std::size_t states = a.configs.size() * a.beliefs.size() * 2;
    bool changed = true;
    for (std::size_t sweep = 0; changed && sweep <= states + 1; ++sweep) {
        changed = false;
        for (std::size_t ci = 0; ci < a.configs.size(); ++ci) {
            for (std::size_t bi = 0; bi < a.beliefs.size(); ++bi) {
                int r = eval_rob(a, val, int(ci), a.beliefs[bi]);
                if (r != val.rob[ci][bi]) { val.rob[ci][bi] = r; changed = true; }
                int c = eval_cop(a, val, int(ci), a.beliefs[bi]);
                if (c != val.cop[ci][bi]) { val.cop[ci][bi] = c; changed = true; }
            }
        }
    }
    if (changed) throw std::runtime_error("naive oracle: value iteration did not settle");

    NaiveSolve out;
    int best = kInf;
    for (std::size_t ci = 0; ci < a.configs.size(); ++ci) {
        Mask free = a.full & ~a.cop_mask(a.configs[ci]);
        int value;
        if (free == 0) {
            value = 0;
        } else {
            value = split_worst(a, val.cop[ci], free, a.hidden(a.configs[ci]));
        }
        best = std::min(best, value);
    }
    if (best < kInf) {
        out.cop_win = true;
        out.rounds = best;
    }
    return out;
}

int naive_cop_number(const Graph& g, GameMode mode) {
    int cap = (g.order() + 1) / 2;
    for (int k = 1; k <= cap; ++k)
        if (naive_solve(g, k, mode).cop_win) return k;
    throw std::runtime_error("naive oracle: cop number above ceil(n/2)");
}

} // namespace hyperopic::oracle
