#include "hyperopic/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <unordered_map>

#include "hyperopic/errors.hpp"

namespace hyperopic {

namespace {

struct LimitHit {
    SolveStatus status;
};

struct NodeKey {
    CopConfig cops;
    VertexSet belief;
    bool cop_to_move = true;

    bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = k.belief.hash();
        for (Vertex v : k.cops) h = h * 1000003ULL ^ static_cast<std::size_t>(v + 1);
        return h * 2 + (k.cop_to_move ? 1 : 0);
    }
};

struct PredRef {
    int node;
    int slot;
};

constexpr int kUnset = -1;

// One expanded position. Cop nodes carry one slot per surviving move, rob
// nodes a single slot; a slot resolves when its last open child wins.
struct Node {
    NodeKey key;
    enum class State : unsigned char { open, win, lose } state = State::open;
    int f = kUnset;
    std::vector<int> pending;
    std::vector<int> maxf;
    std::vector<PredRef> preds;
};

// Beliefs already decided for a (config, mover) pair. Winning entries form a
// maximal antichain with round bounds, losing entries a minimal one.
struct DominanceEntry {
    std::vector<std::pair<VertexSet, int>> wins;
    std::vector<VertexSet> loses;
};

struct DomKey {
    CopConfig cops;
    bool cop_to_move = true;

    bool operator==(const DomKey&) const = default;
};

struct DomKeyHash {
    std::size_t operator()(const DomKey& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (Vertex v : k.cops) h = h * 1099511628211ULL ^ static_cast<std::size_t>(v + 1);
        return h * 2 + (k.cop_to_move ? 1 : 0);
    }
};

// Ascending lexicographic odometers over sorted configs.
bool next_multiset(CopConfig& c, int n) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - 1) {
            Vertex v = ++c[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < c.size(); ++j) c[j] = v;
            return true;
        }
    }
    return false;
}

bool next_subset(CopConfig& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < c.size(); ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool all_distinct(const CopConfig& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] == c[i - 1]) return false;
    return true;
}

VertexSet config_set(int order, const CopConfig& c) {
    VertexSet s(order);
    for (Vertex v : c) s.insert(v);
    return s;
}

class Solver {
  public:
    Solver(const Graph& g, int k, const SolveOptions& opts)
        : g_(g), k_(k), opts_(opts), start_(std::chrono::steady_clock::now()) {}

    SolveResult run();
    StrategyTable build_table(const SolveResult& result);

  private:
    using Heap = std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                                     std::greater<>>;

    const std::vector<CopConfig>& options_for(const CopConfig& c);
    int lookup(const NodeKey& key) const;
    int allocate(NodeKey key);
    void expand_cop(int id);
    void expand_rob(int id);
    void drain_worklist();
    void retro_pass();
    void finish_placement();
    void check_budget();

    // Dominance queries; only consulted when the exact node is absent.
    const std::pair<VertexSet, int>* dominated_win(const CopConfig& c, bool cop_to_move,
                                                   const VertexSet& belief);
    bool dominated_lose(const CopConfig& c, bool cop_to_move, const VertexSet& belief);
    void record_dominance(const Node& node);

    // Placement evaluation; f or kUnset when the placement loses.
    int evaluate_placement(const CopConfig& placement);

    struct MoveValue {
        bool winning = false;
        bool capture = false;
        int value = 0;
    };
    MoveValue evaluate_move(const VertexSet& belief, const CopConfig& move);

    const Graph& g_;
    int k_;
    SolveOptions opts_;
    std::chrono::steady_clock::time_point start_;

    std::vector<Node> nodes_;
    std::unordered_map<NodeKey, int, NodeKeyHash> memo_;
    std::unordered_map<DomKey, DominanceEntry, DomKeyHash> dominance_;
    std::map<CopConfig, std::vector<CopConfig>> options_;

    std::vector<int> worklist_;
    Heap heap_;
    std::size_t placement_first_node_ = 0;
    std::size_t tick_ = 0;
};

const std::vector<CopConfig>& Solver::options_for(const CopConfig& c) {
    auto it = options_.find(c);
    if (it != options_.end()) return it->second;
    std::vector<CopConfig> opts = cop_move_options(g_, c);
    if (opts_.distinct_only) {
        std::erase_if(opts, [](const CopConfig& o) { return !all_distinct(o); });
    }
    return options_.emplace(c, std::move(opts)).first->second;
}

int Solver::lookup(const NodeKey& key) const {
    auto it = memo_.find(key);
    return it == memo_.end() ? kUnset : it->second;
}

int Solver::allocate(NodeKey key) {
    check_budget();
    int id = static_cast<int>(nodes_.size());
    memo_.emplace(key, id);
    nodes_.push_back(Node{std::move(key), Node::State::open, kUnset, {}, {}, {}});
    worklist_.push_back(id);
    return id;
}

void Solver::check_budget() {
    if (nodes_.size() >= opts_.limits.max_positions) throw LimitHit{SolveStatus::position_limit};
    if ((++tick_ & 1023) == 0) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > opts_.limits.max_seconds) throw LimitHit{SolveStatus::time_limit};
    }
}

const std::pair<VertexSet, int>* Solver::dominated_win(const CopConfig& c, bool cop_to_move,
                                                       const VertexSet& belief) {
    if (!opts_.use_dominance) return nullptr;
    auto it = dominance_.find(DomKey{c, cop_to_move});
    if (it == dominance_.end()) return nullptr;
    for (const auto& entry : it->second.wins) {
        if (belief.subset_of(entry.first)) return &entry;
    }
    return nullptr;
}

bool Solver::dominated_lose(const CopConfig& c, bool cop_to_move, const VertexSet& belief) {
    if (!opts_.use_dominance) return false;
    auto it = dominance_.find(DomKey{c, cop_to_move});
    if (it == dominance_.end()) return false;
    for (const VertexSet& lose : it->second.loses) {
        if (lose.subset_of(belief)) return true;
    }
    return false;
}

void Solver::record_dominance(const Node& node) {
    DominanceEntry& entry = dominance_[DomKey{node.key.cops, node.key.cop_to_move}];
    if (node.state == Node::State::win) {
        for (auto& kept : entry.wins) {
            if (node.key.belief.subset_of(kept.first)) return;
        }
        std::erase_if(entry.wins, [&](const auto& kept) {
            return kept.first.subset_of(node.key.belief);
        });
        entry.wins.emplace_back(node.key.belief, node.f);
    } else {
        for (auto& kept : entry.loses) {
            if (kept.subset_of(node.key.belief)) return;
        }
        std::erase_if(entry.loses, [&](const VertexSet& kept) {
            return node.key.belief.subset_of(kept);
        });
        entry.loses.push_back(node.key.belief);
    }
}

// Builds the slots of a cop node. A move with a known losing branch is
// dropped; a capturing move settles the node at one round outright.
void Solver::expand_cop(int id) {
    const NodeKey key = nodes_[static_cast<std::size_t>(id)].key;
    const auto& options = options_for(key.cops);
    for (const CopConfig& move : options) {
        if (key.belief.subset_of(config_set(g_.order(), move))) {
            heap_.emplace(1, id);
            return;
        }
    }
    std::vector<int> pending, maxf;
    std::vector<std::vector<int>> open_children;
    for (const CopConfig& move : options) {
        auto branches = observe_after_cop_move(g_, move, key.belief, opts_.mode);
        int slot_pending = 0;
        int slot_maxf = kUnset;
        bool dropped = false;
        std::vector<int> opens;
        for (const Branch& br : branches) {
            detail::invariant(br.obs.kind != ObsKind::captured, "capture slipped past the move scan");
            NodeKey ckey{move, br.belief, false};
            int cid = lookup(ckey);
            if (cid != kUnset) {
                const Node& child = nodes_[static_cast<std::size_t>(cid)];
                if (child.state == Node::State::lose) {
                    dropped = true;
                    break;
                }
                if (child.state == Node::State::win) {
                    slot_maxf = std::max(slot_maxf, child.f);
                } else {
                    ++slot_pending;
                    opens.push_back(cid);
                }
                continue;
            }
            if (dominated_lose(move, false, br.belief)) {
                dropped = true;
                break;
            }
            if (const auto* win = dominated_win(move, false, br.belief)) {
                slot_maxf = std::max(slot_maxf, win->second);
                continue;
            }
            ++slot_pending;
            opens.push_back(allocate(std::move(ckey)));
        }
        if (dropped) continue;
        pending.push_back(slot_pending);
        maxf.push_back(slot_maxf);
        open_children.push_back(std::move(opens));
        if (slot_pending == 0) heap_.emplace(1 + slot_maxf, id);
    }
    Node& node = nodes_[static_cast<std::size_t>(id)];
    if (pending.empty()) {
        node.state = Node::State::lose;
        return;
    }
    node.pending = std::move(pending);
    node.maxf = std::move(maxf);
    for (int slot = 0; slot < static_cast<int>(open_children.size()); ++slot) {
        for (int cid : open_children[static_cast<std::size_t>(slot)]) {
            nodes_[static_cast<std::size_t>(cid)].preds.push_back(PredRef{id, slot});
        }
    }
}

void Solver::expand_rob(int id) {
    const NodeKey key = nodes_[static_cast<std::size_t>(id)].key;
    auto branches = robber_move_branches(g_, key.cops, key.belief, opts_.mode);
    if (branches.size() == 1 && branches[0].obs.kind == ObsKind::captured) {
        heap_.emplace(0, id);
        return;
    }
    int slot_pending = 0;
    int slot_maxf = kUnset;
    bool dropped = false;
    std::vector<int> opens;
    for (const Branch& br : branches) {
        NodeKey ckey{key.cops, br.belief, true};
        int cid = lookup(ckey);
        if (cid != kUnset) {
            const Node& child = nodes_[static_cast<std::size_t>(cid)];
            if (child.state == Node::State::lose) {
                dropped = true;
                break;
            }
            if (child.state == Node::State::win) {
                slot_maxf = std::max(slot_maxf, child.f);
            } else {
                ++slot_pending;
                opens.push_back(cid);
            }
            continue;
        }
        if (dominated_lose(key.cops, true, br.belief)) {
            dropped = true;
            break;
        }
        if (const auto* win = dominated_win(key.cops, true, br.belief)) {
            slot_maxf = std::max(slot_maxf, win->second);
            continue;
        }
        ++slot_pending;
        opens.push_back(allocate(std::move(ckey)));
    }
    Node& node = nodes_[static_cast<std::size_t>(id)];
    if (dropped) {
        node.state = Node::State::lose;
        return;
    }
    node.pending = {slot_pending};
    node.maxf = {slot_maxf};
    for (int cid : opens) {
        nodes_[static_cast<std::size_t>(cid)].preds.push_back(PredRef{id, 0});
    }
    if (slot_pending == 0) {
        detail::invariant(slot_maxf >= 0, "empty robber slot");
        heap_.emplace(slot_maxf, id);
    }
}

void Solver::drain_worklist() {
    while (!worklist_.empty()) {
        int id = worklist_.back();
        worklist_.pop_back();
        if (nodes_[static_cast<std::size_t>(id)].key.cop_to_move) {
            expand_cop(id);
        } else {
            expand_rob(id);
        }
    }
}

void Solver::retro_pass() {
    int last_f = 0;
    while (!heap_.empty()) {
        auto [f, id] = heap_.top();
        heap_.pop();
        detail::invariant(f >= last_f, "round values must resolve in order");
        last_f = f;
        Node& node = nodes_[static_cast<std::size_t>(id)];
        if (node.state != Node::State::open) continue;
        node.state = Node::State::win;
        node.f = f;
        std::vector<PredRef> preds = std::move(node.preds);
        node.preds.clear();
        for (const PredRef& pr : preds) {
            Node& parent = nodes_[static_cast<std::size_t>(pr.node)];
            if (parent.state != Node::State::open) continue;
            int slot = pr.slot;
            auto& pending = parent.pending[static_cast<std::size_t>(slot)];
            auto& maxf = parent.maxf[static_cast<std::size_t>(slot)];
            maxf = std::max(maxf, f);
            if (--pending == 0) {
                heap_.emplace(parent.key.cop_to_move ? 1 + maxf : maxf, pr.node);
            }
        }
    }
}

void Solver::finish_placement() {
    for (std::size_t i = placement_first_node_; i < nodes_.size(); ++i) {
        if (nodes_[i].state == Node::State::open) nodes_[i].state = Node::State::lose;
    }
    if (opts_.use_dominance) {
        for (std::size_t i = placement_first_node_; i < nodes_.size(); ++i) record_dominance(nodes_[i]);
    }
    placement_first_node_ = nodes_.size();
}

int Solver::evaluate_placement(const CopConfig& placement) {
    auto branches = initial_branches(g_, placement, opts_.mode);
    if (branches.empty()) return 0;
    std::vector<int> roots;
    for (const Branch& br : branches) {
        NodeKey key{placement, br.belief, true};
        int id = lookup(key);
        if (id == kUnset) id = allocate(std::move(key));
        roots.push_back(id);
    }
    drain_worklist();
    retro_pass();
    finish_placement();
    int worst = 0;
    for (int id : roots) {
        const Node& node = nodes_[static_cast<std::size_t>(id)];
        if (node.state != Node::State::win) return kUnset;
        worst = std::max(worst, node.f);
    }
    return worst;
}

SolveResult Solver::run() {
    detail::require(k_ >= 1, "at least one cop is required");
    detail::require(g_.order() >= 1, "game needs a nonempty graph");
    if (opts_.distinct_only)
        detail::require(k_ <= g_.order(), "more distinct cops than vertices");

    SolveResult result;
    try {
        CopConfig placement;
        if (opts_.distinct_only) {
            placement.resize(static_cast<std::size_t>(k_));
            for (int i = 0; i < k_; ++i) placement[static_cast<std::size_t>(i)] = i;
        } else {
            placement.assign(static_cast<std::size_t>(k_), 0);
        }
        bool more = true;
        while (more) {
            int f = evaluate_placement(placement);
            if (f != kUnset && (!result.cop_win || f < result.rounds)) {
                result.cop_win = true;
                result.rounds = f;
                result.placement = placement;
                if (!opts_.all_placements) break;
            }
            more = opts_.distinct_only ? next_subset(placement, g_.order())
                                       : next_multiset(placement, g_.order());
        }
        result.status = SolveStatus::solved;
    } catch (const LimitHit& hit) {
        result = SolveResult{};
        result.status = hit.status;
    }
    result.positions = nodes_.size();
    return result;
}

Solver::MoveValue Solver::evaluate_move(const VertexSet& belief, const CopConfig& move) {
    MoveValue mv;
    if (belief.subset_of(config_set(g_.order(), move))) {
        mv.winning = true;
        mv.capture = true;
        mv.value = 1;
        return mv;
    }
    int worst = 0;
    for (const Branch& br : observe_after_cop_move(g_, move, belief, opts_.mode)) {
        int cid = lookup(NodeKey{move, br.belief, false});
        if (cid == kUnset) return mv;
        const Node& child = nodes_[static_cast<std::size_t>(cid)];
        if (child.state != Node::State::win) return mv;
        worst = std::max(worst, child.f);
    }
    mv.winning = true;
    mv.value = 1 + worst;
    return mv;
}

StrategyTable Solver::build_table(const SolveResult& result) {
    detail::invariant(result.status == SolveStatus::solved && result.cop_win,
                      "table extraction needs a solved win");
    StrategyTable table;
    table.mode = opts_.mode;
    table.k = k_;
    table.initial = result.placement;
    table.rounds_bound = result.rounds;

    std::vector<int> stack;
    std::vector<bool> queued(nodes_.size(), false);
    for (const Branch& br : initial_branches(g_, result.placement, opts_.mode)) {
        int id = lookup(NodeKey{result.placement, br.belief, true});
        detail::invariant(id != kUnset, "placement branch missing from the solve");
        if (!queued[static_cast<std::size_t>(id)]) {
            queued[static_cast<std::size_t>(id)] = true;
            stack.push_back(id);
        }
    }
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const Node node = nodes_[static_cast<std::size_t>(id)];
        detail::invariant(node.state == Node::State::win, "reached a losing position in a won game");

        const CopConfig* best = nullptr;
        bool best_capture = false;
        bool best_distinct = false;
        for (const CopConfig& move : options_for(node.key.cops)) {
            MoveValue mv = evaluate_move(node.key.belief, move);
            if (!mv.winning || mv.value != node.f) continue;
            bool distinct = all_distinct(move);
            // Options come sorted, so the first candidate at each
            // preference tier is the lexicographically smallest.
            if (!best || (distinct && !best_distinct)) {
                best = &move;
                best_capture = mv.capture;
                best_distinct = distinct;
            }
        }
        detail::invariant(best != nullptr, "no move realizes the node value");
        table.entries[{node.key.cops, node.key.belief}] = StrategyTable::Entry{*best, node.f};
        if (best_capture) continue;
        for (const Branch& br : observe_after_cop_move(g_, *best, node.key.belief, opts_.mode)) {
            for (const Branch& rb : robber_move_branches(g_, *best, br.belief, opts_.mode)) {
                if (rb.obs.kind == ObsKind::captured) continue;
                int cid = lookup(NodeKey{*best, rb.belief, true});
                detail::invariant(cid != kUnset, "successor missing from the solve");
                const Node& child = nodes_[static_cast<std::size_t>(cid)];
                detail::invariant(child.state == Node::State::win && child.f < node.f,
                                  "successor rank must drop");
                if (!queued[static_cast<std::size_t>(cid)]) {
                    queued[static_cast<std::size_t>(cid)] = true;
                    stack.push_back(cid);
                }
            }
        }
    }
    return table;
}

} // namespace

SolveResult solve_fixed_cops(const Graph& g, int k, const SolveOptions& opts) {
    Solver solver(g, k, opts);
    return solver.run();
}

CopNumberResult cop_number(const Graph& g, GameMode mode, const SolveLimits& limits) {
    detail::require(g.order() >= 1, "game needs a nonempty graph");
    detail::require(g.is_connected(), "cop number is defined for connected graphs");
    CopNumberResult result;
    int ceiling = (g.order() + 1) / 2;
    auto start = std::chrono::steady_clock::now();
    for (int k = 1;; ++k) {
        detail::invariant(k <= ceiling, "half the order must always suffice");
        SolveOptions opts;
        opts.mode = mode;
        opts.use_dominance = true;
        opts.limits = limits;
        if (result.positions >= limits.max_positions) {
            result.status = SolveStatus::position_limit;
            result.lower = k;
            return result;
        }
        opts.limits.max_positions = limits.max_positions - result.positions;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        opts.limits.max_seconds = limits.max_seconds - elapsed.count();
        if (opts.limits.max_seconds <= 0.0) {
            result.status = SolveStatus::time_limit;
            result.lower = k;
            return result;
        }
        SolveResult solve = solve_fixed_cops(g, k, opts);
        result.positions += solve.positions;
        if (solve.status != SolveStatus::solved) {
            result.status = solve.status;
            result.lower = k;
            return result;
        }
        if (solve.cop_win) {
            result.status = SolveStatus::solved;
            result.lower = k;
            result.upper = k;
            return result;
        }
    }
}

const StrategyTable::Entry* StrategyTable::find(const CopConfig& cops,
                                                const VertexSet& belief) const {
    auto it = entries.find({cops, belief});
    return it == entries.end() ? nullptr : &it->second;
}

std::optional<StrategyTable> extract_strategy(const Graph& g, int k, const SolveOptions& opts) {
    SolveOptions exact = opts;
    exact.use_dominance = false;
    exact.all_placements = true;
    Solver solver(g, k, exact);
    SolveResult result = solver.run();
    if (result.status != SolveStatus::solved)
        throw Error("strategy extraction ran out of budget");
    if (!result.cop_win) return std::nullopt;
    return solver.build_table(result);
}

bool lonely_check(const StrategyTable& table) {
    if (!all_distinct(table.initial)) return false;
    for (const auto& [key, entry] : table.entries) {
        if (!all_distinct(key.first) || !all_distinct(entry.move)) return false;
    }
    return true;
}

} // namespace hyperopic
