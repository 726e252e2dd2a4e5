#include "hyperopic/strategy.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperopic/errors.hpp"
#include "hyperopic/game.hpp"
#include "hyperopic/graph.hpp"
#include "hyperopic/metrics.hpp"
#include "hyperopic/solver.hpp"

namespace hyperopic {
namespace {

enum class Cadence { fresh, placement_obs, cop_turn, cop_obs, robber_obs };

const char* cadence_name(Cadence c) {
    switch (c) {
    case Cadence::fresh: return "fresh";
    case Cadence::placement_obs: return "placement";
    case Cadence::cop_turn: return "turn";
    case Cadence::cop_obs: return "cop-obs";
    case Cadence::robber_obs: return "robber-obs";
    }
    return "?";
}

// Base controller: keeps identity-indexed cop positions, routes observations
// into an exact belief tracker, and enforces the play-loop cadence. Derived
// strategies implement place() and decide() over positions and belief.
class TrackedStrategy : public Strategy {
  public:
    explicit TrackedStrategy(const Graph& g) : graph_(&g), tracker_(g) {}

    int cop_count() const final { return k_; }

    CopConfig init() final {
        detail::invariant(cadence_ == Cadence::fresh, "init ran twice");
        positions_ = place();
        detail::invariant(static_cast<int>(positions_.size()) == k_,
                          "placement size disagrees with the cop count");
        for (Vertex v : positions_) graph_->check_vertex(v);
        cadence_ = Cadence::placement_obs;
        return canonical_config(positions_);
    }

    void observe(const Observation& obs) final {
        detail::invariant(obs.kind != ObsKind::captured,
                          "captured observations are never delivered");
        switch (cadence_) {
        case Cadence::placement_obs:
            tracker_.set_initial(canonical_config(positions_), obs);
            cadence_ = Cadence::cop_turn;
            break;
        case Cadence::cop_obs:
            tracker_.apply_cop_move(canonical_config(positions_), obs);
            cadence_ = Cadence::robber_obs;
            break;
        case Cadence::robber_obs:
            tracker_.apply_robber_move(obs);
            cadence_ = Cadence::cop_turn;
            break;
        default:
            detail::invariant(false, "observation out of cadence");
        }
    }

    CopConfig move() final {
        detail::invariant(cadence_ == Cadence::cop_turn, "move out of cadence");
        std::vector<Vertex> next = decide();
        detail::invariant(next.size() == positions_.size(),
                          "decide changed the number of cops");
        for (std::size_t i = 0; i < next.size(); ++i)
            detail::invariant(next[i] == positions_[i] ||
                                  graph_->has_edge(positions_[i], next[i]),
                              "decide moved a cop across a non-edge");
        positions_ = std::move(next);
        cadence_ = Cadence::cop_obs;
        return canonical_config(positions_);
    }

    std::string state_key() const final {
        std::ostringstream out;
        out << name() << '|' << cadence_name(cadence_) << '|';
        for (std::size_t i = 0; i < positions_.size(); ++i)
            out << (i ? "," : "") << positions_[i];
        out << '|' << tracker_.belief().to_string() << '|' << derived_key();
        return out.str();
    }

  protected:
    const Graph& graph() const { return *graph_; }
    const VertexSet& belief() const { return tracker_.belief(); }
    const std::vector<Vertex>& positions() const { return positions_; }

    // Identity-indexed starting positions, size k_.
    virtual std::vector<Vertex> place() = 0;
    // New position per cop identity; stays and co-occupation are legal.
    virtual std::vector<Vertex> decide() = 0;
    // Behavioral state beyond positions and belief.
    virtual std::string derived_key() const { return {}; }

    int k_ = 0;

  private:
    const Graph* graph_;
    BeliefTracker tracker_;
    std::vector<Vertex> positions_;
    Cadence cadence_ = Cadence::fresh;
};

// First cop adjacent to v crosses onto it; everyone else holds.
std::optional<std::vector<Vertex>> capture_single(const Graph& g,
                                                  const std::vector<Vertex>& pos,
                                                  Vertex v) {
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (g.has_edge(pos[i], v)) {
            auto np = pos;
            np[i] = v;
            return np;
        }
    return std::nullopt;
}

// Sends the lowest-positioned cops onto the target vertices in sorted order;
// fails unless every assigned cop sits on or beside its target.
std::optional<std::vector<Vertex>> cover_assignment(const Graph& g,
                                                    const std::vector<Vertex>& pos,
                                                    const VertexSet& targets) {
    auto tv = targets.to_vector();
    if (tv.size() > pos.size()) return std::nullopt;
    std::vector<std::size_t> order(pos.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pos[a] != pos[b] ? pos[a] < pos[b] : a < b;
    });
    auto np = pos;
    for (std::size_t j = 0; j < tv.size(); ++j) {
        std::size_t i = order[j];
        if (pos[i] != tv[j] && !g.has_edge(pos[i], tv[j])) return std::nullopt;
        np[i] = tv[j];
    }
    return np;
}

// Occupies the whole belief in one move when adjacency allows it, which ends
// the game regardless of what the robber knows.
std::optional<std::vector<Vertex>> cover_move(const Graph& g,
                                              const std::vector<Vertex>& pos,
                                              const VertexSet& targets) {
    detail::invariant(!targets.empty(), "cover of an empty belief");
    if (targets.count() == 1) return capture_single(g, pos, targets.first());
    return cover_assignment(g, pos, targets);
}

bool match_slots(const Graph& g, const std::vector<Vertex>& from, const CopConfig& to,
                 std::size_t i, std::vector<bool>& used, std::vector<Vertex>& out) {
    if (i == from.size()) return true;
    for (std::size_t j = 0; j < to.size(); ++j) {
        if (used[j]) continue;
        if (j > 0 && to[j] == to[j - 1] && !used[j - 1]) continue;
        if (to[j] != from[i] && !g.has_edge(from[i], to[j])) continue;
        used[j] = true;
        out[i] = to[j];
        if (match_slots(g, from, to, i + 1, used, out)) return true;
        used[j] = false;
    }
    return false;
}

// Realizes a prescribed multiset move as one step per cop identity; first
// feasible assignment in index order wins.
std::vector<Vertex> match_transition(const Graph& g, const std::vector<Vertex>& from,
                                     const CopConfig& to) {
    detail::invariant(from.size() == to.size(), "transition changes the cop count");
    std::vector<bool> used(to.size(), false);
    std::vector<Vertex> out(from.size(), -1);
    detail::invariant(match_slots(g, from, to, 0, used, out),
                      "prescribed move is unreachable from the tracked positions");
    return out;
}

// Smallest neighbor strictly closer to the target; stays when already there.
Vertex step_toward(const Graph& g, Vertex from, Vertex to) {
    if (from == to) return from;
    auto dist = bfs_distances(g, to);
    detail::invariant(dist[from] > 0, "no path toward the target");
    for (Vertex w : g.neighbors(from).to_vector())
        if (dist[w] == dist[from] - 1) return w;
    detail::invariant(false, "a closer neighbor must exist");
    return from;
}

// Exact classical table at the classical cop number.
std::shared_ptr<const StrategyTable> classical_table(const Graph& g) {
    CopNumberResult num = cop_number(g, GameMode::classical);
    if (!num.exact())
        throw Error("classical cop number did not resolve within default limits");
    SolveOptions opts;
    opts.mode = GameMode::classical;
    auto table = extract_strategy(g, num.value(), opts);
    detail::invariant(table.has_value(), "classical number must admit a winning table");
    return std::make_shared<StrategyTable>(std::move(*table));
}

VertexSet pin(const Graph& g, Vertex v) { return VertexSet::singleton(g.order(), v); }

// One cop on a leaf. The belief stays a single vertex forever: Seen pins it,
// and in a tree the unseen candidates after any move form at most one vertex
// (two would close a cycle through the cop). Chase it down the unique path.
class TreeStrategy final : public TrackedStrategy {
  public:
    explicit TreeStrategy(const Graph& g) : TrackedStrategy(g) { k_ = 1; }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        if (!compute_metrics(g).is_tree)
            throw InapplicableError("tree: graph is not a tree");
        return std::make_unique<TreeStrategy>(g);
    }

    std::string name() const override { return "tree"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<TreeStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        for (Vertex v = 0; v < graph().order(); ++v)
            if (graph().degree(v) <= 1) return {v};
        detail::invariant(false, "a tree always has a leaf");
        return {};
    }

    std::vector<Vertex> decide() override {
        detail::invariant(belief().count() == 1, "leaf start keeps the belief pinned");
        Vertex r = belief().first();
        Vertex c = positions()[0];
        if (graph().has_edge(c, r)) return {r};
        return {step_toward(graph(), c, r)};
    }
};

// ceil(n/2) distinct cops on a dominating set padded to full strength. Seen
// robbers are adjacent to a cop; unseen ones hide among at most floor(n/2)
// common neighbors, all adjacent to every cop. Either way one move covers.
class DominatingSetStrategy final : public TrackedStrategy {
  public:
    explicit DominatingSetStrategy(const Graph& g) : TrackedStrategy(g) {
        k_ = (g.order() + 1) / 2;
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        if (!g.is_connected())
            throw InapplicableError("dominating_set: graph must be connected");
        return std::make_unique<DominatingSetStrategy>(g);
    }

    std::string name() const override { return "dominating_set"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<DominatingSetStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        auto out = greedy_dominating_set(graph()).vertices;
        VertexSet used(graph().order());
        for (Vertex v : out) used.insert(v);
        for (Vertex v = 0; v < graph().order() && static_cast<int>(out.size()) < k_; ++v)
            if (!used.contains(v)) {
                used.insert(v);
                out.push_back(v);
            }
        detail::invariant(static_cast<int>(out.size()) == k_,
                          "half the order always fits distinctly");
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Vertex> decide() override {
        auto mv = cover_move(graph(), positions(), belief());
        detail::invariant(mv.has_value(), "a padded dominating set covers every belief");
        return *mv;
    }
};

// Complete graph missing the single edge uv, n >= 4: one cop on u and
// floor(n/2)-1 more on other vertices distinct from v. Everything free is
// either adjacent to a cop or among the at most k common neighbors.
class CliqueMinusEdgeStrategy final : public TrackedStrategy {
  public:
    CliqueMinusEdgeStrategy(const Graph& g, Vertex u, Vertex v)
        : TrackedStrategy(g), u_(u), v_(v) {
        k_ = g.order() / 2;
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        int n = g.order();
        long long want = static_cast<long long>(n) * (n - 1) / 2 - 1;
        if (n < 4 || g.size() != want)
            throw InapplicableError(
                "clique_minus_edge: need a complete graph on >= 4 vertices minus one edge");
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v))
                    return std::make_unique<CliqueMinusEdgeStrategy>(g, u, v);
        detail::invariant(false, "edge count promised a missing edge");
        return nullptr;
    }

    std::string name() const override { return "clique_minus_edge"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<CliqueMinusEdgeStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out{u_};
        for (Vertex x = 0; x < graph().order() && static_cast<int>(out.size()) < k_; ++x)
            if (x != u_ && x != v_) out.push_back(x);
        detail::invariant(static_cast<int>(out.size()) == k_,
                          "enough vertices beside the missing edge");
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Vertex> decide() override {
        auto mv = cover_move(graph(), positions(), belief());
        detail::invariant(mv.has_value(), "one round suffices on a near-clique");
        return *mv;
    }

  private:
    Vertex u_, v_;
};

// Complete graph missing two edges, n >= 5, ceil(n/2)-1 cops. Anchors sit on
// one endpoint per missing edge (one suffices when the edges share it); the
// rest fill vertices untouched by the missing edges. One move covers.
class CliqueMinusTwoStrategy final : public TrackedStrategy {
  public:
    CliqueMinusTwoStrategy(const Graph& g, std::vector<Vertex> anchors,
                           std::vector<Vertex> excluded)
        : TrackedStrategy(g), anchors_(std::move(anchors)), excluded_(std::move(excluded)) {
        k_ = (g.order() + 1) / 2 - 1;
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        int n = g.order();
        long long want = static_cast<long long>(n) * (n - 1) / 2 - 2;
        if (n < 5 || g.size() != want)
            throw InapplicableError(
                "clique_minus_two_edges: need a complete graph on >= 5 vertices minus two edges");
        std::vector<std::pair<Vertex, Vertex>> missing;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) missing.push_back({u, v});
        detail::invariant(missing.size() == 2, "edge count promised two missing edges");
        auto [a, b] = missing[0];
        auto [c, d] = missing[1];
        std::vector<Vertex> anchors, excluded;
        if (a == c || a == d || b == c || b == d) {
            Vertex shared = (a == c || a == d) ? a : b;
            anchors = {shared};
            excluded = {a, b, c, d};
            std::sort(excluded.begin(), excluded.end());
            excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
        } else {
            anchors = {a, c};
            excluded = {a, b, c, d};
            std::sort(excluded.begin(), excluded.end());
        }
        return std::make_unique<CliqueMinusTwoStrategy>(g, std::move(anchors),
                                                        std::move(excluded));
    }

    std::string name() const override { return "clique_minus_two_edges"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<CliqueMinusTwoStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out = anchors_;
        for (Vertex x = 0; x < graph().order() && static_cast<int>(out.size()) < k_; ++x)
            if (std::find(excluded_.begin(), excluded_.end(), x) == excluded_.end())
                out.push_back(x);
        detail::invariant(static_cast<int>(out.size()) == k_,
                          "enough vertices beside the missing edges");
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Vertex> decide() override {
        auto mv = cover_move(graph(), positions(), belief());
        detail::invariant(mv.has_value(), "one round suffices on a near-clique");
        return *mv;
    }

  private:
    std::vector<Vertex> anchors_, excluded_;
};

// Cut vertex u with neighbors v, w in different components of G - u. One cop
// guards from v or w (whichever faces away from the robber) so hiding is
// only possible on u itself, which the guard covers; the rest replay a
// classical winning table on the robber's side.
class CutVertexStrategy final : public TrackedStrategy {
  public:
    CutVertexStrategy(const Graph& g, Vertex u, std::shared_ptr<const StrategyTable> table)
        : TrackedStrategy(g), u_(u), table_(std::move(table)) {
        c_ = table_->k;
        k_ = c_ + 1;
        comp_.assign(g.order(), -1);
        int label = 0;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (s == u_ || comp_[s] >= 0) continue;
            std::vector<Vertex> queue{s};
            comp_[s] = label;
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (Vertex nb : g.neighbors(queue[head]).to_vector())
                    if (nb != u_ && comp_[nb] < 0) {
                        comp_[nb] = label;
                        queue.push_back(nb);
                    }
            ++label;
        }
        v_ = w_ = -1;
        for (Vertex nb : g.neighbors(u_).to_vector()) {
            if (v_ < 0) v_ = nb;
            else if (comp_[nb] != comp_[v_]) {
                w_ = nb;
                break;
            }
        }
        detail::invariant(v_ >= 0 && w_ >= 0, "a cut vertex touches two components");
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        GraphMetrics m = compute_metrics(g);
        if (!m.connected)
            throw InapplicableError("cut_vertex_composite: graph must be connected");
        if (m.cut_vertices.empty())
            throw InapplicableError("cut_vertex_composite: no cut vertex");
        Vertex u = *std::min_element(m.cut_vertices.begin(), m.cut_vertices.end());
        return std::make_unique<CutVertexStrategy>(g, u, classical_table(g));
    }

    std::string name() const override { return "cut_vertex_composite"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<CutVertexStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out(k_, w_);
        out[0] = v_;
        return out;
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        detail::invariant(belief().count() == 1, "the guard pins the belief");
        Vertex r = belief().first();
        if (auto mv = capture_single(g, positions(), r)) return *mv;
        detail::invariant(r != u_, "the hub is always covered by the guard");
        if (side_ < 0) {
            side_ = comp_[r];
            sentinel_ = comp_[v_] != side_ ? 0 : 1;
            targets_.assign(k_, -1);
            int j = 0;
            for (int i = 0; i < k_; ++i)
                if (i != sentinel_) targets_[i] = table_->initial[j++];
        }
        detail::invariant(comp_[r] == side_, "a crossing robber dies on the hub");
        auto np = positions();
        bool arrived = true;
        for (int i = 0; i < k_; ++i)
            if (i != sentinel_ && np[i] != targets_[i]) arrived = false;
        if (!arrived) {
            for (int i = 0; i < k_; ++i)
                if (i != sentinel_) np[i] = step_toward(g, np[i], targets_[i]);
            return np;
        }
        std::vector<Vertex> active_pos;
        std::vector<int> active_idx;
        for (int i = 0; i < k_; ++i)
            if (i != sentinel_) {
                active_idx.push_back(i);
                active_pos.push_back(np[i]);
            }
        const StrategyTable::Entry* entry =
            table_->find(canonical_config(active_pos), pin(g, r));
        detail::invariant(entry != nullptr, "classical table covers every pinned position");
        std::vector<Vertex> matched = match_transition(g, active_pos, entry->move);
        for (std::size_t t = 0; t < active_idx.size(); ++t) np[active_idx[t]] = matched[t];
        return np;
    }

    std::string derived_key() const override {
        return "side=" + std::to_string(side_) + ";sent=" + std::to_string(sentinel_);
    }

  private:
    Vertex u_, v_ = -1, w_ = -1;
    std::shared_ptr<const StrategyTable> table_;
    int c_ = 0;
    std::vector<int> comp_;
    int side_ = -1;
    int sentinel_ = -1;
    std::vector<Vertex> targets_;
};

// Triangle-free graph: classical cops play their table while one extra cop
// shadows the lead cop from an adjacent vertex. An adjacent pair has no
// common neighbor here, so the robber never vanishes.
class TriangleFreeShadowStrategy final : public TrackedStrategy {
  public:
    TriangleFreeShadowStrategy(const Graph& g, std::shared_ptr<const StrategyTable> table)
        : TrackedStrategy(g), table_(std::move(table)) {
        c_ = table_->k;
        k_ = c_ + 1;
        shadow_start_ = g.neighbors(table_->initial[0]).first();
        detail::invariant(shadow_start_ >= 0, "lead cop must have a neighbor");
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        GraphMetrics m = compute_metrics(g);
        if (!m.connected)
            throw InapplicableError("triangle_free_shadow: graph must be connected");
        if (!m.triangle_free)
            throw InapplicableError("triangle_free_shadow: graph has a triangle");
        if (g.order() < 2)
            throw InapplicableError("triangle_free_shadow: single vertex has no shadow post");
        return std::make_unique<TriangleFreeShadowStrategy>(g, classical_table(g));
    }

    std::string name() const override { return "triangle_free_shadow"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<TriangleFreeShadowStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out(table_->initial.begin(), table_->initial.end());
        out.push_back(shadow_start_);
        return out;
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        detail::invariant(belief().count() == 1, "an adjacent pair keeps the robber visible");
        Vertex r = belief().first();
        if (auto mv = capture_single(g, positions(), r)) return *mv;
        std::vector<Vertex> active_pos(positions().begin(), positions().begin() + c_);
        const StrategyTable::Entry* entry =
            table_->find(canonical_config(active_pos), pin(g, r));
        detail::invariant(entry != nullptr, "classical table covers every visible position");
        std::vector<Vertex> matched = match_transition(g, active_pos, entry->move);
        auto np = positions();
        Vertex lead_old = positions()[0];
        for (int i = 0; i < c_; ++i) np[i] = matched[i];
        np[c_] = matched[0] == lead_old ? positions()[c_] : lead_old;
        return np;
    }

  private:
    std::shared_ptr<const StrategyTable> table_;
    int c_ = 0;
    Vertex shadow_start_ = -1;
};

// Diameter >= 3: two stationary cops at distance >= 3 share no common
// neighbor, so the robber stays visible while the classical cops hunt.
class DistantSentinelsStrategy final : public TrackedStrategy {
  public:
    DistantSentinelsStrategy(const Graph& g, std::shared_ptr<const StrategyTable> table)
        : TrackedStrategy(g), table_(std::move(table)) {
        c_ = table_->k;
        k_ = c_ + 2;
        u_ = v_ = -1;
        for (Vertex u = 0; u < g.order() && u_ < 0; ++u) {
            auto dist = bfs_distances(g, u);
            for (Vertex v = 0; v < g.order(); ++v)
                if (dist[v] >= 3) {
                    u_ = u;
                    v_ = v;
                    break;
                }
        }
        detail::invariant(u_ >= 0, "diameter promised a distant pair");
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        GraphMetrics m = compute_metrics(g);
        if (!m.connected)
            throw InapplicableError("diameter3_sentinels: graph must be connected");
        if (m.diameter < 3)
            throw InapplicableError("diameter3_sentinels: diameter must be at least 3");
        return std::make_unique<DistantSentinelsStrategy>(g, classical_table(g));
    }

    std::string name() const override { return "diameter3_sentinels"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<DistantSentinelsStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out(table_->initial.begin(), table_->initial.end());
        out.push_back(u_);
        out.push_back(v_);
        return out;
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        detail::invariant(belief().count() == 1, "distant sentinels keep the robber visible");
        Vertex r = belief().first();
        if (auto mv = capture_single(g, positions(), r)) return *mv;
        std::vector<Vertex> active_pos(positions().begin(), positions().begin() + c_);
        const StrategyTable::Entry* entry =
            table_->find(canonical_config(active_pos), pin(g, r));
        detail::invariant(entry != nullptr, "classical table covers every visible position");
        std::vector<Vertex> matched = match_transition(g, active_pos, entry->move);
        auto np = positions();
        for (int i = 0; i < c_; ++i) np[i] = matched[i];
        return np;
    }

  private:
    std::shared_ptr<const StrategyTable> table_;
    int c_ = 0;
    Vertex u_ = -1, v_ = -1;
};

// Diameter >= 3 and minimum degree at most the classical cop number: one cop
// posts on a minimum-degree vertex forever. A hidden robber must sit among
// that vertex's neighbors, few enough to cover in one move; otherwise the
// classical cops walk to their table start and hunt the visible robber.
class MinDegreePostStrategy final : public TrackedStrategy {
  public:
    MinDegreePostStrategy(const Graph& g, std::shared_ptr<const StrategyTable> table)
        : TrackedStrategy(g), table_(std::move(table)) {
        c_ = table_->k;
        k_ = c_ + 1;
        post_ = 0;
        for (Vertex v = 1; v < g.order(); ++v)
            if (g.degree(v) < g.degree(post_)) post_ = v;
        targets_.assign(k_, -1);
        for (int i = 1; i < k_; ++i) targets_[i] = table_->initial[i - 1];
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        GraphMetrics m = compute_metrics(g);
        if (!m.connected)
            throw InapplicableError("min_degree_sentinel: graph must be connected");
        if (m.diameter < 3)
            throw InapplicableError("min_degree_sentinel: diameter must be at least 3");
        auto table = classical_table(g);
        if (m.min_degree > table->k)
            throw InapplicableError(
                "min_degree_sentinel: minimum degree exceeds the classical cop number");
        return std::make_unique<MinDegreePostStrategy>(g, std::move(table));
    }

    std::string name() const override { return "min_degree_sentinel"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<MinDegreePostStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        auto nbrs = graph().neighbors(post_).to_vector();
        std::vector<Vertex> out(k_, nbrs[0]);
        out[0] = post_;
        for (int i = 1; i < k_ && i <= static_cast<int>(nbrs.size()); ++i)
            out[i] = nbrs[i - 1];
        return out;
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        if (auto mv = cover_move(g, positions(), belief())) return *mv;
        detail::invariant(belief().count() == 1,
                          "a hidden robber hides among coverable neighbors");
        Vertex r = belief().first();
        auto np = positions();
        bool arrived = true;
        for (int i = 1; i < k_; ++i)
            if (np[i] != targets_[i]) arrived = false;
        if (!arrived) {
            for (int i = 1; i < k_; ++i) np[i] = step_toward(g, np[i], targets_[i]);
            return np;
        }
        std::vector<Vertex> active_pos(positions().begin() + 1, positions().end());
        const StrategyTable::Entry* entry =
            table_->find(canonical_config(active_pos), pin(g, r));
        detail::invariant(entry != nullptr, "classical table covers every visible position");
        std::vector<Vertex> matched = match_transition(g, active_pos, entry->move);
        for (int i = 1; i < k_; ++i) np[i] = matched[i - 1];
        return np;
    }

  private:
    std::shared_ptr<const StrategyTable> table_;
    int c_ = 0;
    Vertex post_ = -1;
    std::vector<Vertex> targets_;
};

// Diameter <= 2: occupy the closed neighborhood of a minimum-degree vertex.
// That set dominates the graph and nothing outside it can hide, so whatever
// the first observation says, one move covers.
class Diameter2DeltaStrategy final : public TrackedStrategy {
  public:
    explicit Diameter2DeltaStrategy(const Graph& g) : TrackedStrategy(g) {
        post_ = 0;
        for (Vertex v = 1; v < g.order(); ++v)
            if (g.degree(v) < g.degree(post_)) post_ = v;
        k_ = g.degree(post_) + 1;
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        GraphMetrics m = compute_metrics(g);
        if (!m.connected)
            throw InapplicableError("diameter2_delta: graph must be connected");
        if (m.diameter > 2)
            throw InapplicableError("diameter2_delta: diameter must be at most 2");
        return std::make_unique<Diameter2DeltaStrategy>(g);
    }

    std::string name() const override { return "diameter2_delta"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<Diameter2DeltaStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        auto out = graph().closed_neighbors(post_).to_vector();
        detail::invariant(static_cast<int>(out.size()) == k_, "closed neighborhood size");
        return out;
    }

    std::vector<Vertex> decide() override {
        auto mv = cover_move(graph(), positions(), belief());
        detail::invariant(mv.has_value(), "a closed neighborhood at diameter two dominates");
        return *mv;
    }

  private:
    Vertex post_ = -1;
};

// Diameter <= 2 with max-degree many cops: cover N[u] except one neighbor v.
// A robber that is neither adjacent nor on v must be visible; then the u-cop
// slides to v, making the cops exactly N(u), which dominates, and a degree
// argument keeps every robber reply visible. Capture follows.
class Diameter2MaxDegStrategy final : public TrackedStrategy {
  public:
    explicit Diameter2MaxDegStrategy(const Graph& g) : TrackedStrategy(g) {
        hub_ = 0;
        for (Vertex v = 1; v < g.order(); ++v)
            if (g.degree(v) > g.degree(hub_)) hub_ = v;
        spare_ = g.neighbors(hub_).first();
        k_ = g.degree(hub_);
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        GraphMetrics m = compute_metrics(g);
        if (!m.connected)
            throw InapplicableError("diameter2_maxdeg: graph must be connected");
        if (m.diameter > 2)
            throw InapplicableError("diameter2_maxdeg: diameter must be at most 2");
        if (g.order() < 2)
            throw InapplicableError("diameter2_maxdeg: single vertex has no neighbor to spare");
        return std::make_unique<Diameter2MaxDegStrategy>(g);
    }

    std::string name() const override { return "diameter2_maxdeg"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<Diameter2MaxDegStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out{hub_};
        for (Vertex nb : graph().neighbors(hub_).to_vector())
            if (nb != spare_) out.push_back(nb);
        detail::invariant(static_cast<int>(out.size()) == k_, "hub plus all neighbors but one");
        return out;
    }

    std::vector<Vertex> decide() override {
        if (auto mv = cover_move(graph(), positions(), belief())) return *mv;
        detail::invariant(shifted_ == 0, "after the slide everything is adjacent");
        detail::invariant(belief().count() == 1, "only the spare neighbor can hide");
        auto np = positions();
        np[0] = spare_;
        shifted_ = 1;
        return np;
    }

    std::string derived_key() const override { return "shift=" + std::to_string(shifted_); }

  private:
    Vertex hub_ = -1, spare_ = -1;
    int shifted_ = 0;
};

// Join G v J where some vertex of J has no neighbors inside J: a cop parks
// there, shrinking the common neighborhood to G's own, so the hidden game on
// the join is exactly the hidden game on G. The other cops replay a winning
// table for G; a robber in J is visible and adjacent to every G cop.
class JoinIsolatedStrategy final : public TrackedStrategy {
  public:
    JoinIsolatedStrategy(const Graph& g, Vertex anchor, int offset,
                         std::shared_ptr<const Graph> part,
                         std::shared_ptr<const StrategyTable> table)
        : TrackedStrategy(g), anchor_(anchor), offset_(offset), part_(std::move(part)),
          table_(std::move(table)), part_set_(g.order()) {
        c_ = table_->k;
        k_ = c_ + 1;
        for (Vertex v = 0; v < part_->order(); ++v) part_set_.insert(offset_ + v);
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        if (g.meta.family != "join")
            throw InapplicableError("join_isolated: graph was not built as a join");
        int n = g.order();
        int split = static_cast<int>(g.meta.params.at("left_n"));
        auto block_isolated = [&](Vertex v, int lo, int hi) {
            for (Vertex w = lo; w < hi; ++w)
                if (w != v && g.has_edge(v, w)) return false;
            return true;
        };
        for (Vertex v = 0; v < n; ++v) {
            bool in_right = v >= split;
            int blo = in_right ? split : 0, bhi = in_right ? n : split;
            int plo = in_right ? 0 : split, phi = in_right ? split : n;
            if (!block_isolated(v, blo, bhi)) continue;
            auto part = std::make_shared<Graph>(phi - plo);
            for (Vertex a = plo; a < phi; ++a)
                for (Vertex b = a + 1; b < phi; ++b)
                    if (g.has_edge(a, b)) part->add_edge(a - plo, b - plo);
            if (!part->is_connected()) continue;
            CopNumberResult num = cop_number(*part, GameMode::hyperopic);
            if (!num.exact())
                throw Error("partner-block cop number did not resolve within default limits");
            auto table = extract_strategy(*part, num.value());
            detail::invariant(table.has_value(), "cop number must admit a winning table");
            return std::make_unique<JoinIsolatedStrategy>(
                g, v, plo, std::move(part),
                std::make_shared<StrategyTable>(std::move(*table)));
        }
        throw InapplicableError(
            "join_isolated: no isolated-side vertex with a connected partner block");
    }

    std::string name() const override { return "join_isolated"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<JoinIsolatedStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        std::vector<Vertex> out;
        for (Vertex v : table_->initial) out.push_back(v + offset_);
        out.push_back(anchor_);
        return out;
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        if (belief().count() == 1)
            if (auto mv = capture_single(g, positions(), belief().first())) return *mv;
        detail::invariant(belief().subset_of(part_set_),
                          "an uncaptured robber plays inside the partner block");
        VertexSet pb(part_->order());
        for (Vertex v : belief().to_vector()) pb.insert(v - offset_);
        std::vector<Vertex> active_pos(positions().begin(), positions().begin() + c_);
        std::vector<Vertex> mapped = active_pos;
        for (Vertex& v : mapped) v -= offset_;
        const StrategyTable::Entry* entry = table_->find(canonical_config(mapped), pb);
        detail::invariant(entry != nullptr, "partner table covers every reachable belief");
        std::vector<Vertex> matched = match_transition(*part_, mapped, entry->move);
        auto np = positions();
        for (int i = 0; i < c_; ++i) np[i] = matched[i] + offset_;
        return np;
    }

  private:
    Vertex anchor_ = -1;
    int offset_ = 0;
    std::shared_ptr<const Graph> part_;
    std::shared_ptr<const StrategyTable> table_;
    int c_ = 0;
    VertexSet part_set_;
};

// Point-line incidence graph of a projective plane of prime order q: q+1
// cops hold the points of one line. Hiding is possible only on that line
// itself; a visible robber on a point is met by moving one cop onto the
// unique line through both, after which mixed cop types pin every reply.
class IncidencePlaneStrategy final : public TrackedStrategy {
  public:
    explicit IncidencePlaneStrategy(const Graph& g) : TrackedStrategy(g) {
        q_ = static_cast<int>(g.meta.params.at("q"));
        points_ = static_cast<int>(g.meta.params.at("points"));
        k_ = q_ + 1;
        line0_ = points_;
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        if (g.meta.family != "incidence-plane")
            throw InapplicableError("incidence_plane: graph was not built as an incidence plane");
        return std::make_unique<IncidencePlaneStrategy>(g);
    }

    std::string name() const override { return "incidence_plane"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<IncidencePlaneStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        auto out = graph().neighbors(line0_).to_vector();
        detail::invariant(static_cast<int>(out.size()) == k_, "a line carries q+1 points");
        return out;
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        detail::invariant(belief().count() == 1, "plane geometry pins the robber");
        Vertex r = belief().first();
        if (auto mv = capture_single(g, positions(), r)) return *mv;
        detail::invariant(forced_ == 0, "after the forcing move every reply is adjacent");
        detail::invariant(r < points_, "an uncapturable robber sits on a point");
        std::size_t idx = 0;
        for (std::size_t i = 1; i < positions().size(); ++i)
            if (positions()[i] < positions()[idx]) idx = i;
        std::vector<Vertex> pair{positions()[idx], r};
        VertexSet line = common_neighborhood(g, pair);
        detail::invariant(line.count() == 1, "two points lie on exactly one line");
        auto np = positions();
        np[idx] = line.first();
        forced_ = 1;
        return np;
    }

    std::string derived_key() const override { return "forced=" + std::to_string(forced_); }

  private:
    int q_ = 0, points_ = 0;
    Vertex line0_ = -1;
    int forced_ = 0;
};

// Smallest d for which the graph has no K_{d,d+1} and d never-stacking cops
// win the classical game: replay that table against the visible robber; on
// invisibility the belief lies in the common neighborhood of d distinct
// vertices, hence has at most d members, all adjacent to every cop. Cover.
class LonelyLiftStrategy final : public TrackedStrategy {
  public:
    LonelyLiftStrategy(const Graph& g, std::shared_ptr<const StrategyTable> table)
        : TrackedStrategy(g), table_(std::move(table)) {
        k_ = table_->k;
    }

    static std::unique_ptr<Strategy> make(const Graph& g) {
        if (!g.is_connected())
            throw InapplicableError("lonely_lift: graph must be connected");
        int cap = (g.order() + 1) / 2;
        for (int d = 1; d <= cap; ++d) {
            if (contains_biclique(g, d)) continue;
            SolveOptions opts;
            opts.mode = GameMode::classical;
            opts.distinct_only = true;
            auto table = extract_strategy(g, d, opts);
            if (!table) continue;
            detail::invariant(lonely_check(*table), "distinct-move solve never stacks cops");
            return std::make_unique<LonelyLiftStrategy>(
                g, std::make_shared<StrategyTable>(std::move(*table)));
        }
        throw InapplicableError(
            "lonely_lift: no stack-free winning cop count below the biclique bound");
    }

    std::string name() const override { return "lonely_lift"; }
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<LonelyLiftStrategy>(*this);
    }

  protected:
    std::vector<Vertex> place() override {
        return {table_->initial.begin(), table_->initial.end()};
    }

    std::vector<Vertex> decide() override {
        const Graph& g = graph();
        if (auto mv = cover_move(g, positions(), belief())) return *mv;
        detail::invariant(belief().count() == 1, "biclique-free beliefs are coverable");
        Vertex r = belief().first();
        const StrategyTable::Entry* entry =
            table_->find(canonical_config(positions()), pin(g, r));
        detail::invariant(entry != nullptr, "classical table covers every visible position");
        return match_transition(g, positions(), entry->move);
    }

  private:
    std::shared_ptr<const StrategyTable> table_;
};

} // namespace

const std::vector<StrategyInfo>& strategy_catalog() {
    static const std::vector<StrategyInfo> catalog{
        {"tree", "one cop chases down the unique paths of a tree",
         &TreeStrategy::make},
        {"dominating_set", "ceil(n/2) cops capture in one round from a padded dominating set",
         &DominatingSetStrategy::make},
        {"clique_minus_edge", "floor(n/2) cops on a complete graph missing one edge",
         &CliqueMinusEdgeStrategy::make},
        {"clique_minus_two_edges", "ceil(n/2)-1 cops on a complete graph missing two edges",
         &CliqueMinusTwoStrategy::make},
        {"cut_vertex_composite", "classical cops plus a guard beside a cut vertex",
         &CutVertexStrategy::make},
        {"triangle_free_shadow", "classical cops plus an adjacent shadow on a triangle-free graph",
         &TriangleFreeShadowStrategy::make},
        {"diameter3_sentinels", "classical cops plus two stationary sentinels at distance 3",
         &DistantSentinelsStrategy::make},
        {"min_degree_sentinel", "classical cops plus a post on a minimum-degree vertex",
         &MinDegreePostStrategy::make},
        {"diameter2_delta", "min degree plus one cops cover a closed neighborhood at diameter 2",
         &Diameter2DeltaStrategy::make},
        {"diameter2_maxdeg", "max degree cops slide across a hub at diameter 2",
         &Diameter2MaxDegStrategy::make},
        {"join_isolated", "a parked cop reduces a join to the hidden game on one side",
         &JoinIsolatedStrategy::make},
        {"incidence_plane", "q+1 cops hold a line of a projective incidence plane",
         &IncidencePlaneStrategy::make},
        {"lonely_lift", "a never-stacking classical strategy lifted to the hidden game",
         &LonelyLiftStrategy::make},
    };
    return catalog;
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, const Graph& g) {
    for (const StrategyInfo& info : strategy_catalog())
        if (info.name == name) return info.make(g);
    throw InputError("unknown strategy: " + name);
}

} // namespace hyperopic
