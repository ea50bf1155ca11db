#pragma once

#include <memory>

#include "recolor/moderation.hpp"
#include "recolor/runner_base.hpp"

namespace recolor {

enum class AugVariant { B, Bhat };

/// Moderation-filtered recoloring with special colors. Moderate edges go
/// to the simulation and its colors are mirrored onto non-special
/// vertices; an immoderate edge marks its first endpoint special. Every
/// step ends with the conflict fixup on the arriving edge. Variant B has
/// delta+1 special colors and keeps special vertices on special colors;
/// variant Bhat works with delta special colors and may park a special
/// vertex on a basic color when its neighborhood is saturated.
class BRunner : public AlgoRunner {
public:
    BRunner(const Instance& inst, AugVariant variant, Rational alpha, FlipPolicy policy);

    void step(int64_t i, const Edge& e) override;

    const ColoringState& coloring() const override { return col_; }
    std::string name() const override { return variant_ == AugVariant::B ? "B" : "Bhat"; }
    int64_t colors_used() const override;
    int64_t excess_edges() const override { return int64_t(mod_.exc_seq().size()); }
    int64_t specials_marked() const override { return int64_t(special_order_.size()); }
    int64_t extra_violations() const override {
        return fact34_violations_ + structure_violations_ + mod_.witness_violations();
    }

    const ModeratedSim& moderation() const { return mod_; }
    const Adjacency& adjacency() const { return adj_; }
    AugVariant variant() const { return variant_; }
    int32_t num_specials() const { return num_specials_; }

    Rational mirror_cost() const { return mirror_cost_; }
    Rational recx_cost() const { return recx_cost_; }
    int64_t case3_hits() const { return case3_hits_; }
    /// Edges whose endpoints were both special when they arrived.
    int64_t both_special_edges() const { return both_special_edges_; }
    int64_t fact34_violations() const { return fact34_violations_; }

private:
    void recx(int64_t i, const Edge& e, std::vector<Vtx>& changed);
    void fix_vertex(int64_t i, Vtx w, std::vector<Vtx>& changed);
    Color free_special(Vtx w) const;  // lowest special color unused by neighbors
    Color free_basic(Vtx w) const;
    void post_step_checks(const Edge& e, const std::vector<Vtx>& changed);

    const Instance& inst_;
    AugVariant variant_;
    int32_t num_specials_;  // delta+1 for B, delta for Bhat
    ColoringState col_;
    ModeratedSim mod_;
    Adjacency adj_;
    std::vector<Vtx> special_order_;

    Rational mirror_cost_{0};
    Rational recx_cost_{0};
    int64_t case3_hits_ = 0;
    int64_t both_special_edges_ = 0;
    int64_t fact34_violations_ = 0;
    int64_t structure_violations_ = 0;
};

/// The plain two-color simulation run as an algorithm of its own: actual
/// colors track the simulated ones one-to-one.
class ARunner : public AlgoRunner {
public:
    ARunner(const Instance& inst, FlipPolicy policy)
        : inst_(inst),
          col_(inst),
          sim_(inst.n, kBasic1, kBasic2, inst.initial_colors, policy),
          adj_(inst.n) {}

    void step(int64_t i, const Edge& e) override {
        adj_.add_edge(e);
        FeedReport rep = sim_.feed(e);
        for (Vtx w : rep.flipped_vertices) col_.recolor(w, sim_.color(w), i, 'm');
        routes_.push_back('s');
        check_step_validity(col_, adj_, rep.flipped_vertices, e);
    }

    const ColoringState& coloring() const override { return col_; }
    std::string name() const override { return "A"; }
    int64_t colors_used() const override { return 2; }
    const SimA& sim() const { return sim_; }

private:
    const Instance& inst_;
    ColoringState col_;
    SimA sim_;
    Adjacency adj_;
};

/// Online 2-approximate vertex cover baseline: each monochromatic edge
/// with uncovered endpoints puts both endpoints in the cover, each on a
/// fresh special color that is never reused.
class GreedyRunner : public AlgoRunner {
public:
    explicit GreedyRunner(const Instance& inst)
        : inst_(inst), col_(inst), adj_(inst.n), covered_(inst.n, 0) {}

    void step(int64_t i, const Edge& e) override {
        adj_.add_edge(e);
        routes_.push_back('-');
        std::vector<Vtx> changed;
        if (col_.color(e.u) == col_.color(e.v)) {
            if (covered_[e.u] || covered_[e.v])
                throw Error("greedy: covered vertex on a monochromatic edge");
            for (Vtx w : {e.u, e.v}) {
                if (next_special_ > inst_.num_colors())
                    throw Error("greedy: fresh special palette exhausted");
                covered_[w] = 1;
                col_.mark_special(w);
                col_.recolor(w, next_special_++, i, 'g');
                changed.push_back(w);
            }
            ++cover_edges_;
        }
        check_step_validity(col_, adj_, changed, e);
    }

    const ColoringState& coloring() const override { return col_; }
    std::string name() const override { return "greedy"; }
    int64_t colors_used() const override { return 2 + 2 * cover_edges_; }
    int64_t specials_marked() const override { return 2 * cover_edges_; }
    int64_t cover_edges() const { return cover_edges_; }

private:
    const Instance& inst_;
    ColoringState col_;
    Adjacency adj_;
    std::vector<uint8_t> covered_;
    Color next_special_ = 3;
    int64_t cover_edges_ = 0;
};

}  // namespace recolor
