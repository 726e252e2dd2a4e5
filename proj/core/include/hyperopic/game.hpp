#pragma once

#include <string>
#include <vector>

#include "hyperopic/graph.hpp"
#include "hyperopic/vertex_set.hpp"

namespace hyperopic {

// Chooses what the cops perceive: hyperopic cops lose sight of a robber in
// their common open neighborhood, classical cops always see it. Everything
// else about the rules is shared.
enum class GameMode { hyperopic, classical };

// Cop positions form a multiset, kept sorted ascending.
using CopConfig = std::vector<Vertex>;

CopConfig canonical_config(CopConfig c);
std::string config_to_string(const CopConfig& c);

// Common open neighborhood of the distinct vertices occupied by the config.
VertexSet config_common_neighborhood(const Graph& g, const CopConfig& c);

// The robber is hidden exactly when it sits in the common open neighborhood
// of the cops and shares no vertex with them; classical cops see everything.
bool robber_visible(const Graph& g, const CopConfig& cops, Vertex robber,
                    GameMode mode = GameMode::hyperopic);

enum class ObsKind { seen, unseen, captured };

struct Observation {
    ObsKind kind = ObsKind::unseen;
    Vertex vertex = -1; // valid only for seen
};

std::string observation_to_string(const Observation& obs);

// One information branch: what the cops observe and the exact set of robber
// positions consistent with it.
struct Branch {
    Observation obs;
    VertexSet belief;
};

// All configs reachable in one cop move: every cop stays or crosses one
// edge. Canonical and deduplicated.
std::vector<CopConfig> cop_move_options(const Graph& g, const CopConfig& cops);

// True iff the multiset `to` can be reached from `from` by moving each cop
// within its closed neighborhood (matching found by backtracking).
bool legal_cop_transition(const Graph& g, const CopConfig& from, const CopConfig& to);

// Robber placement branches against an initial config: one seen branch per
// visible free vertex, plus a single unseen branch if any vertex is hidden.
// Empty result means no free vertex exists (vacuous win).
std::vector<Branch> initial_branches(const Graph& g, const CopConfig& cops,
                                     GameMode mode = GameMode::hyperopic);

// Belief revision after the cops move to `to` while the robber holds still.
// Returns the captured branch alone when every candidate is occupied.
std::vector<Branch> observe_after_cop_move(const Graph& g, const CopConfig& to,
                                           const VertexSet& belief,
                                           GameMode mode = GameMode::hyperopic);

// Belief branches after the robber moves within N[belief], avoiding cops.
// Returns the captured branch alone when the robber has no free vertex.
std::vector<Branch> robber_move_branches(const Graph& g, const CopConfig& cops,
                                         const VertexSet& belief,
                                         GameMode mode = GameMode::hyperopic);

// Exact belief maintenance for strategy controllers, fed the same
// observations the play loop produces.
class BeliefTracker {
  public:
    explicit BeliefTracker(const Graph& g, GameMode mode = GameMode::hyperopic)
        : graph_(&g), mode_(mode), belief_(g.order()) {}

    void set_initial(const CopConfig& cops, const Observation& obs);
    void apply_cop_move(const CopConfig& to, const Observation& obs);
    void apply_robber_move(const Observation& obs);

    const VertexSet& belief() const { return belief_; }
    const CopConfig& cops() const { return cops_; }

  private:
    const Graph* graph_;
    GameMode mode_;
    VertexSet belief_;
    CopConfig cops_;
};

} // namespace hyperopic
