#pragma once

#include <memory>

#include "recolor/moderation.hpp"
#include "recolor/runner_base.hpp"

namespace recolor {

/// Hierarchy of two-color simulations on disjoint color pairs. Edges
/// between same-level endpoints go through that level's (tau,alpha)
/// moderation; a rejected edge promotes its first endpoint, replaying its
/// incident same-level edges into the next level. All colors are treated
/// as unit cost here.
class CRunner : public AlgoRunner {
public:
    CRunner(const Instance& inst, Rational epsilon, Rational alpha, int64_t beta,
            FlipPolicy policy);

    void step(int64_t i, const Edge& e) override;

    const ColoringState& coloring() const override { return col_; }
    std::string name() const override { return "C"; }
    const Instance* effective_instance() const override { return &inst_; }
    int64_t colors_used() const override { return 2 * max_level_; }
    int64_t excess_edges() const override {
        int64_t total = 0;
        for (const auto& f : excess_) total += int64_t(f.size());
        return total;
    }
    int32_t max_level() const override { return max_level_; }
    int64_t extra_violations() const override {
        int64_t w = 0;
        for (const auto& lvl : levels_)
            if (lvl) w += lvl->witness_violations();
        return w;
    }

    const Rational& tau() const { return tau_; }
    const Rational& gamma() const { return gamma_; }
    int32_t level_of(Vtx v) const { return level_[v]; }
    int32_t levels_created() const { return int32_t(levels_.size()) - 1; }
    /// Level-j moderation scope; null if the level was never reached.
    const ModeratedSim* level_sim(int32_t j) const {
        return j < int32_t(levels_.size()) ? levels_[j].get() : nullptr;
    }
    /// j-excess edges (those that caused promote(u, j+1)).
    const std::vector<Edge>& excess_at(int32_t j) const { return excess_[j]; }
    int64_t r_at(int32_t j) const {
        return j < int32_t(levels_.size()) && levels_[j] ? levels_[j]->sim().r_size() : 0;
    }
    Rational mirror_cost() const { return mirror_cost_; }
    Rational promote_cost() const { return promote_cost_; }
    const std::vector<Edge>& all_edges() const { return seen_edges_; }

    static Rational tau_for(Rational epsilon, Rational alpha, int64_t beta);
    /// Largest epsilon = 1/k admitted for the given beta.
    static Rational default_epsilon(int64_t beta, Rational alpha);

private:
    void ensure_level(int32_t j);
    void promote(int64_t i, Vtx u, int32_t k, std::vector<Vtx>& changed);
    void mirror(int64_t i, int32_t j, const FeedReport& rep, std::vector<Vtx>& changed);

    Instance inst_;  // palette-adjusted copy: unit costs, wide palette
    Rational alpha_, epsilon_, tau_, gamma_;
    int64_t beta_;
    FlipPolicy policy_;
    int32_t level_cap_;
    ColoringState col_;
    std::vector<int32_t> level_;
    std::vector<std::unique_ptr<ModeratedSim>> levels_;  // [0] unused
    std::vector<std::vector<Edge>> excess_;              // [j] = F_j
    std::vector<std::vector<std::pair<Vtx, int64_t>>> arrivals_;  // (neighbor, step)
    Adjacency adj_;
    std::vector<Edge> seen_edges_;
    int32_t max_level_ = 1;
    Rational mirror_cost_{0};
    Rational promote_cost_{0};
};

}  // namespace recolor
