#pragma once

#include <vector>

#include "recolor/moderation.hpp"
#include "recolor/runner_base.hpp"
#include "recolor/sim_a.hpp"

namespace recolor {

struct ChargingReport {
    int64_t steps = 0;
    int64_t flips = 0;
    int64_t iplus_flips = 0;
    int64_t cost = 0;          // vertices recolored by the replayed simulation
    int64_t cost_iplus = 0;    // restricted to qualifying steps
    int64_t r_size = 0;
    int64_t total_charge = 0;
    int64_t max_vertex_charge = 0;
    int64_t ceil_log2_threshold = 0;

    int64_t x_violations = 0;         // |X(C)| >= |C|(1-alpha)/5
    int64_t step_violations = 0;      // per qualifying flip, charge >= |C|(1-alpha)/20
    int64_t vertex_violations = 0;    // per-vertex total <= ceil(log2 thr)+4
    int64_t once_violations = 0;      // cases ii-iv hit a vertex at most once
    int64_t charged_outside_r = 0;

    int64_t violations() const {
        return x_violations + step_violations + vertex_violations + once_violations +
               charged_outside_r;
    }
};

/// Replays a moderate sequence through a fresh simulation, maintaining
/// the X sets and the four charging cases on qualifying flips; throws if
/// the sequence is not (threshold,alpha)-moderate.
ChargingReport audit_charging(int32_t n, const std::vector<Color>& initial,
                              const std::vector<Edge>& sim_seq, FlipPolicy policy,
                              Rational threshold, Rational alpha);

struct BondCheck {
    int64_t cross_edges = 0;
    int64_t bound = 0;  // (k-1) * beta
    bool ok = false;
};

/// Cross-part edge count against the (k-1)*beta bound. Parts must induce
/// connected subgraphs; vertices with part -1 are outside every part
/// (the disjoint-subsets form of the statement).
BondCheck audit_bond_partition(int32_t n, const std::vector<Edge>& edges,
                               const std::vector<int32_t>& parts, int64_t beta);

struct CostReport {
    Rational replayed_total{0};
    Rational engine_total{0};
    Rational mirror{0}, recx{0}, promote{0}, greedy{0};
    Rational recx_bound{0};  // (V' + E') * D, for the augmented variants
    bool totals_match = false;
    bool recx_within_bound = true;
    int64_t violations() const {
        return (totals_match ? 0 : 1) + (recx_within_bound ? 0 : 1);
    }
};

/// Recomputes the cost of every recoloring event from the palette and
/// reconciles it with the engine ledger, split into buckets.
CostReport audit_costs(const AlgoRunner& runner, const Instance& inst);

}  // namespace recolor
