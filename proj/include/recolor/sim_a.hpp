#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/instance.hpp"

namespace recolor {

enum class FlipPolicy { SmallerNew, SmallerSize };

inline std::string to_string(FlipPolicy p) {
    return p == FlipPolicy::SmallerNew ? "smaller-new" : "smaller-size";
}
inline FlipPolicy flip_policy_from_string(const std::string& s) {
    if (s == "smaller-new") return FlipPolicy::SmallerNew;
    if (s == "smaller-size") return FlipPolicy::SmallerSize;
    throw Error("unknown flip policy '" + s + "'");
}

struct SimStep {
    int64_t index = 0;  // position in this sim's fed sequence
    Edge edge;
    bool flipped = false;
    int32_t flip_size = 0;    // |C| of the recolored component
    int32_t merged_size = 0;  // |C| + |C'|
    int32_t newly_recolored = 0;
};

struct FeedReport {
    bool flipped = false;
    Vtx flip_root = -1;  // pre-merge roots of the recolored / kept sides
    Vtx keep_root = -1;
    std::vector<Vtx> flipped_vertices;
    std::vector<Vtx> newly_recolored;  // subset not previously in R
    int32_t step_cost = 0;             // vertices recolored
};

/// Online two-color recoloring on its own edge subsequence. A
/// monochromatic edge always joins two distinct components here (proper
/// per-component coloring + bipartite input); the flip policy picks the
/// component whose colors get swapped.
class SimA {
public:
    SimA(int32_t n, Color lo, Color hi, const std::vector<Color>& initial,
         FlipPolicy policy = FlipPolicy::SmallerNew)
        : lo_(lo), hi_(hi), policy_(policy), colors_(initial), in_r_(n, 0), index_(n) {
        for (Color c : colors_)
            if (c != lo_ && c != hi_) throw Error("sim color outside its pair");
    }

    /// All vertices start on the pair's high color (levels j > 1).
    SimA(int32_t n, Color lo, Color hi, FlipPolicy policy)
        : SimA(n, lo, hi, std::vector<Color>(n, hi), policy) {}

    Color color(Vtx v) const { return colors_[v]; }
    bool in_r(Vtx v) const { return in_r_[v] != 0; }
    int64_t r_size() const { return r_size_; }
    int64_t cost() const { return cost_; }
    int64_t steps_fed() const { return int64_t(log_.size()); }
    const std::vector<SimStep>& log() const { return log_; }
    const ComponentIndex& components() const { return index_; }
    FlipPolicy policy() const { return policy_; }

    FeedReport feed(const Edge& e) {
        Vtx ru = index_.find(e.u), rv = index_.find(e.v);
        FeedReport rep;
        SimStep step;
        step.index = int64_t(log_.size());
        step.edge = e;
        if (colors_[e.u] != colors_[e.v]) {
            if (ru != rv) index_.unite(e.u, e.v);
            log_.push_back(step);
            return rep;
        }
        if (ru == rv)
            throw Error("odd cycle: monochromatic edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") inside one component");
        Vtx flip = choose_flip(ru, rv);
        Vtx keep = flip == ru ? rv : ru;
        rep.flip_root = flip;
        rep.keep_root = keep;
        step.flipped = true;
        step.flip_size = index_.size(flip);
        step.merged_size = index_.size(flip) + index_.size(keep);
        rep.flipped = true;
        rep.flipped_vertices.reserve(step.flip_size);
        index_.for_members(flip, [&](Vtx w) {
            colors_[w] = colors_[w] == lo_ ? hi_ : lo_;
            rep.flipped_vertices.push_back(w);
            if (!in_r_[w]) {
                in_r_[w] = 1;
                ++r_size_;
                rep.newly_recolored.push_back(w);
            }
        });
        index_.saturate_rcount(flip);
        index_.unite(e.u, e.v);
        rep.step_cost = step.flip_size;
        step.newly_recolored = int32_t(rep.newly_recolored.size());
        cost_ += step.flip_size;
        log_.push_back(step);
        return rep;
    }

    /// Steps whose flipped component grew by the 5/4 factor; the
    /// comparison is exact (4*merged >= 5*flipped).
    std::vector<int64_t> classify_iplus() const {
        std::vector<int64_t> out;
        for (const SimStep& s : log_)
            if (s.flipped && iplus_qualifies(s)) out.push_back(s.index);
        return out;
    }

    static bool iplus_qualifies(const SimStep& s) {
        return int64_t(4) * s.merged_size >= int64_t(5) * s.flip_size;
    }

private:
    Vtx choose_flip(Vtx ru, Vtx rv) const {
        int32_t su = index_.size(ru), sv = index_.size(rv);
        if (policy_ == FlipPolicy::SmallerSize) {
            if (su != sv) return su < sv ? ru : rv;
            return ru < rv ? ru : rv;
        }
        int32_t nu = su - index_.rcount(ru), nv = sv - index_.rcount(rv);
        if (nu != nv) return nu < nv ? ru : rv;
        if (su != sv) return su < sv ? ru : rv;
        return index_.min_id(ru) < index_.min_id(rv) ? ru : rv;
    }

    Color lo_, hi_;
    FlipPolicy policy_;
    std::vector<Color> colors_;
    std::vector<uint8_t> in_r_;
    ComponentIndex index_;
    int64_t r_size_ = 0;
    int64_t cost_ = 0;
    std::vector<SimStep> log_;
};

}  // namespace recolor
