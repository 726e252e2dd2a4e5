#include "hyperopic/verify.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperopic/errors.hpp"
#include "hyperopic/game.hpp"

namespace hyperopic {
namespace {

struct Outcome {
    bool capture = false;
    int rounds = 0;
};

struct LimitSignal {};

Observation make_obs(const Graph& g, const CopConfig& cops, Vertex r) {
    if (robber_visible(g, cops, r)) return {ObsKind::seen, r};
    return {ObsKind::unseen, -1};
}

// Robber replies from r against cop config: stay or cross one edge, never
// onto a cop. Staying is always available since r itself is unoccupied.
std::vector<Vertex> robber_options(const Graph& g, const CopConfig& cops, Vertex r) {
    VertexSet opts = g.closed_neighbors(r);
    for (Vertex c : cops) opts.erase(c);
    return opts.to_vector();
}

class Verifier {
  public:
    Verifier(const Graph& g, const VerifyOptions& opts) : g_(g), opts_(opts) {}

    VerifyResult run(const Strategy& prototype) {
        VerifyResult result;
        auto probe = prototype.clone();
        CopConfig c0 = canonical_config(probe->init());
        detail::invariant(static_cast<int>(c0.size()) == probe->cop_count(),
                          "placement size disagrees with the declared cop count");
        VertexSet free = VertexSet::full(g_.order());
        for (Vertex c : c0) free.erase(c);
        if (free.empty()) {
            result.kind = VerifyResult::Kind::capture;
            result.worst_rounds = 0;
            if (opts_.transcript)
                result.transcript.push_back("cops " + config_to_string(c0) +
                                            " occupy every vertex; nowhere to place a robber");
            return result;
        }

        int worst = 0;
        Vertex worst_start = -1;
        try {
            for (Vertex r0 : free.to_vector()) {
                auto s = prototype.clone();
                s->init();
                s->observe(make_obs(g_, c0, r0));
                Outcome out = explore(std::move(s), c0, r0, 0);
                if (escaping_) {
                    std::reverse(trail_.begin(), trail_.end());
                    result.kind = VerifyResult::Kind::escape;
                    result.escape_trail.push_back(r0);
                    result.escape_trail.insert(result.escape_trail.end(), trail_.begin(),
                                               trail_.end());
                    result.states = states_;
                    if (opts_.transcript) walk_escape(prototype, c0, result);
                    return result;
                }
                if (out.rounds > worst) {
                    worst = out.rounds;
                    worst_start = r0;
                }
                if (worst_start < 0) worst_start = r0;
            }
        } catch (const LimitSignal&) {
            result.kind = VerifyResult::Kind::limit;
            result.states = states_;
            return result;
        }

        result.kind = VerifyResult::Kind::capture;
        result.worst_rounds = worst;
        result.states = states_;
        if (opts_.transcript) walk_capture(prototype, c0, worst_start, result);
        return result;
    }

  private:
    std::string state_id(const Strategy& s, const CopConfig& cops, Vertex r) const {
        return s.state_key() + "#" + config_to_string(cops) + "#" + std::to_string(r);
    }

    // Cops to move, robber at r. Returns the worst-case capture length in cop
    // moves, or sets escaping_ and starts collecting the robber trail.
    Outcome explore(std::unique_ptr<Strategy> s, const CopConfig& cops, Vertex r, int depth) {
        if (++states_ > opts_.max_states || depth > kMaxDepth) throw LimitSignal{};
        std::string key = state_id(*s, cops, r);
        if (path_.contains(key)) {
            escaping_ = true;
            return {};
        }
        if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;
        path_.insert(key);

        CopConfig next = canonical_config(s->move());
        if (!legal_cop_transition(g_, cops, next))
            throw Error("strategy emitted an illegal cop move from " + config_to_string(cops) +
                        " to " + config_to_string(next));
        Outcome out{true, 1};
        if (std::find(next.begin(), next.end(), r) == next.end()) {
            s->observe(make_obs(g_, next, r));
            for (Vertex r2 : robber_options(g_, next, r)) {
                auto branch = s->clone();
                branch->observe(make_obs(g_, next, r2));
                Outcome child = explore(std::move(branch), next, r2, depth + 1);
                if (escaping_) {
                    trail_.push_back(r2);
                    path_.erase(key);
                    return {};
                }
                out.rounds = std::max(out.rounds, 1 + child.rounds);
            }
        }
        path_.erase(key);
        memo_.emplace(std::move(key), out);
        return out;
    }

    // Replays the worst capture line out of the memo into printable rounds.
    void walk_capture(const Strategy& prototype, const CopConfig& c0, Vertex r0,
                      VerifyResult& result) {
        auto s = prototype.clone();
        s->init();
        result.transcript.push_back("place cops " + config_to_string(c0) + "; robber starts at " +
                                    std::to_string(r0) + " (" +
                                    observation_to_string(make_obs(g_, c0, r0)) + ")");
        s->observe(make_obs(g_, c0, r0));
        Vertex r = r0;
        for (int round = 1;; ++round) {
            CopConfig next = canonical_config(s->move());
            std::ostringstream line;
            line << "round " << round << ": cops -> " << config_to_string(next);
            if (std::find(next.begin(), next.end(), r) != next.end()) {
                line << "; capture at " << r;
                result.transcript.push_back(line.str());
                return;
            }
            s->observe(make_obs(g_, next, r));
            line << " (" << observation_to_string(make_obs(g_, next, r)) << ")";
            Vertex pick = -1;
            int pick_rounds = -1;
            for (Vertex r2 : robber_options(g_, next, r)) {
                auto branch = s->clone();
                branch->observe(make_obs(g_, next, r2));
                auto hit = memo_.find(state_id(*branch, next, r2));
                detail::invariant(hit != memo_.end(), "worst-line replay left the explored set");
                if (hit->second.rounds > pick_rounds) {
                    pick_rounds = hit->second.rounds;
                    pick = r2;
                }
            }
            detail::invariant(pick >= 0, "a surviving robber always has a reply");
            line << "; robber -> " << pick;
            result.transcript.push_back(line.str());
            s->observe(make_obs(g_, next, pick));
            r = pick;
        }
    }

    // Replays the recorded escape trail into printable rounds.
    void walk_escape(const Strategy& prototype, const CopConfig& c0, VerifyResult& result) {
        auto s = prototype.clone();
        s->init();
        Vertex r = result.escape_trail.front();
        result.transcript.push_back("place cops " + config_to_string(c0) + "; robber starts at " +
                                    std::to_string(r) + " (" +
                                    observation_to_string(make_obs(g_, c0, r)) + ")");
        s->observe(make_obs(g_, c0, r));
        for (std::size_t i = 1; i < result.escape_trail.size(); ++i) {
            CopConfig next = canonical_config(s->move());
            s->observe(make_obs(g_, next, r));
            Vertex r2 = result.escape_trail[i];
            std::ostringstream line;
            line << "round " << i << ": cops -> " << config_to_string(next)
                 << "; robber -> " << r2;
            result.transcript.push_back(line.str());
            s->observe(make_obs(g_, next, r2));
            r = r2;
        }
        result.transcript.push_back("state repeats; robber escapes");
    }

    static constexpr int kMaxDepth = 100000;

    const Graph& g_;
    VerifyOptions opts_;
    std::size_t states_ = 0;
    bool escaping_ = false;
    std::vector<Vertex> trail_;
    std::unordered_set<std::string> path_;
    std::unordered_map<std::string, Outcome> memo_;
};

} // namespace

VerifyResult verify_strategy(const Graph& g, const Strategy& prototype,
                             const VerifyOptions& opts) {
    return Verifier(g, opts).run(prototype);
}

} // namespace hyperopic
