#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hyperopic/game.hpp"
#include "hyperopic/graph.hpp"

namespace hyperopic {

// A deterministic cop controller for the hidden-robber game. The play loop
// drives it: init() places the cops, then observe() delivers the placement
// observation, and each round alternates move() with two observe() calls
// (after the cop move, after the robber reply). Captured observations are
// never delivered; the game simply ends.
class Strategy {
  public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;
    virtual int cop_count() const = 0;

    virtual CopConfig init() = 0;
    virtual void observe(const Observation& obs) = 0;
    virtual CopConfig move() = 0;

    virtual std::unique_ptr<Strategy> clone() const = 0;

    // Complete serialization of behavioral state. Two instances with equal
    // keys must behave identically forever; the verifier relies on this.
    virtual std::string state_key() const = 0;
};

struct StrategyInfo {
    std::string name;
    std::string summary;
    // Throws InapplicableError when the graph lacks the required shape.
    std::function<std::unique_ptr<Strategy>(const Graph&)> make;
};

const std::vector<StrategyInfo>& strategy_catalog();

// Builds the named catalog strategy; throws InputError on unknown names and
// InapplicableError when the graph does not qualify.
std::unique_ptr<Strategy> make_strategy(const std::string& name, const Graph& g);

} // namespace hyperopic
