#pragma once

#include <string>
#include <vector>

#include "recolor/instance.hpp"

namespace recolor {

/// Common surface of the per-algorithm engines. A runner processes one
/// edge per step, keeps the coloring valid, and counts every invariant
/// violation instead of silently continuing.
class AlgoRunner {
public:
    virtual ~AlgoRunner() = default;

    virtual void step(int64_t i, const Edge& e) = 0;

    virtual const ColoringState& coloring() const = 0;
    virtual std::string name() const = 0;

    /// The palette the engine actually charges against (the uniform-cost
    /// hierarchy substitutes its own); null means the caller's instance.
    virtual const Instance* effective_instance() const { return nullptr; }

    /// Route tag per step (one char): s = simulated, x = excess,
    /// k = skipped, - = plain.
    const std::vector<char>& routes() const { return routes_; }

    int64_t validity_violations() const { return validity_violations_; }
    virtual int64_t extra_violations() const { return 0; }

    virtual int64_t colors_used() const = 0;
    virtual int64_t excess_edges() const { return 0; }
    virtual int32_t max_level() const { return 0; }
    virtual int64_t specials_marked() const { return 0; }

protected:
    /// Inductive validity check: a step that changed only `changed` can
    /// only break edges incident to them (plus the arriving edge).
    void check_step_validity(const ColoringState& col, const Adjacency& adj,
                             const std::vector<Vtx>& changed, const Edge& e) {
        if (col.color(e.u) == col.color(e.v)) ++validity_violations_;
        for (Vtx w : changed)
            for (Vtx x : adj.neighbors(w))
                if (col.color(w) == col.color(x)) ++validity_violations_;
    }

    std::vector<char> routes_;
    int64_t validity_violations_ = 0;
};

}  // namespace recolor
