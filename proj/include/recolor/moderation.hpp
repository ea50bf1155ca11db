#pragma once

#include <memory>
#include <vector>

#include "recolor/rational.hpp"
#include "recolor/sim_a.hpp"

namespace recolor {

struct ComponentClass {
    bool small = false;
    bool light = false;
};

/// small: |C| <= threshold; light: |R cap C| <= alpha * |C|.
/// Both boundary-inclusive; large/heavy are the strict complements.
inline ComponentClass classify_component(int64_t size, int64_t rcount, const Rational& threshold,
                                         const Rational& alpha) {
    ComponentClass c;
    c.small = Rational(size) <= threshold;
    c.light = Rational(rcount) <= alpha * Rational(size);
    return c;
}

enum class Route { Sim, Excess };

struct OfferOutcome {
    Route route = Route::Sim;
    FeedReport feed;  // meaningful only for Route::Sim
};

/// Disjoint witness sets over the offered graph. A set is created when a
/// component first holds strictly more than alpha*threshold recolored
/// vertices; an uncovered endpoint's whole component is absorbed into the
/// covered endpoint's set; assignments are permanent.
class WitnessLedger {
public:
    explicit WitnessLedger(int32_t n) : set_id_(n, -1) {}

    int32_t set_of(Vtx v) const { return set_id_[v]; }
    bool covered(Vtx v) const { return set_id_[v] >= 0; }
    int32_t num_sets() const { return num_sets_; }
    const std::vector<std::vector<Vtx>>& sets() const { return members_; }

    void assign(Vtx v, int32_t set) {
        if (set_id_[v] != -1)
            throw Error("witness set reassignment for vertex " + std::to_string(v) +
                        " (set " + std::to_string(set_id_[v]) + " -> " + std::to_string(set) + ")");
        set_id_[v] = set;
        members_[set].push_back(v);
    }

    int32_t create_set() {
        members_.emplace_back();
        return num_sets_++;
    }

private:
    std::vector<int32_t> set_id_;
    std::vector<std::vector<Vtx>> members_;
    int32_t num_sets_ = 0;
};

/// One moderation scope: a SimA instance, the sim/excess split at a given
/// (threshold, alpha), the graph of all edges offered to this scope, and
/// the witness ledger over that graph.
class ModeratedSim {
public:
    ModeratedSim(int32_t n, Color lo, Color hi, const std::vector<Color>& initial,
                 Rational threshold, Rational alpha, FlipPolicy policy)
        : threshold_(threshold),
          alpha_(alpha),
          sim_(n, lo, hi, initial, policy),
          offered_graph_(n),
          ledger_(n) {}

    ModeratedSim(int32_t n, Color lo, Color hi, Rational threshold, Rational alpha,
                 FlipPolicy policy)
        : threshold_(threshold),
          alpha_(alpha),
          sim_(n, lo, hi, policy),
          offered_graph_(n),
          ledger_(n) {}

    const SimA& sim() const { return sim_; }
    SimA& sim() { return sim_; }
    const Rational& threshold() const { return threshold_; }
    const Rational& alpha() const { return alpha_; }
    const std::vector<Edge>& sim_seq() const { return sim_seq_; }
    const std::vector<Edge>& exc_seq() const { return exc_seq_; }
    const WitnessLedger& ledger() const { return ledger_; }
    const ComponentIndex& offered_graph() const { return offered_graph_; }
    int64_t witness_violations() const { return witness_violations_; }

    /// Appending keeps the sequence moderate iff the endpoints share a
    /// sim-component or at least one side is small or light. Evaluated
    /// against R before the edge is fed.
    bool admits(const Edge& e) const {
        const ComponentIndex& idx = sim_.components();
        Vtx ru = idx.find(e.u), rv = idx.find(e.v);
        if (ru == rv) return true;
        auto ok = [&](Vtx r) {
            ComponentClass c = classify_component(idx.size(r), idx.rcount(r), threshold_, alpha_);
            return c.small || c.light;
        };
        return ok(ru) || ok(rv);
    }

    OfferOutcome offer(const Edge& e) {
        OfferOutcome out;
        if (admits(e)) {
            out.route = Route::Sim;
            sim_seq_.push_back(e);
            out.feed = sim_.feed(e);
        } else {
            out.route = Route::Excess;
            exc_seq_.push_back(e);
            // Endpoints of an excess edge must already sit in two
            // distinct witness sets.
            if (!ledger_.covered(e.u) || !ledger_.covered(e.v) ||
                ledger_.set_of(e.u) == ledger_.set_of(e.v))
                ++witness_violations_;
        }
        update_ledger(e, out);
        return out;
    }

private:
    void update_ledger(const Edge& e, const OfferOutcome& out) {
        if (out.route == Route::Sim)
            for (Vtx w : out.feed.newly_recolored)
                offered_graph_.add_rcount(offered_graph_.find(w));

        bool cu = ledger_.covered(e.u), cv = ledger_.covered(e.v);
        if (cu && cv) {
            offered_graph_.unite(e.u, e.v);
            return;
        }
        if (cu != cv) {
            Vtx cov = cu ? e.u : e.v;
            Vtx unc = cu ? e.v : e.u;
            int32_t set = ledger_.set_of(cov);
            offered_graph_.for_members(offered_graph_.find(unc),
                                       [&](Vtx w) { ledger_.assign(w, set); });
            offered_graph_.unite(e.u, e.v);
            return;
        }
        offered_graph_.unite(e.u, e.v);
        Vtx root = offered_graph_.find(e.u);
        if (Rational(offered_graph_.rcount(root)) > alpha_ * threshold_) {
            int32_t set = ledger_.create_set();
            offered_graph_.for_members(root, [&](Vtx w) { ledger_.assign(w, set); });
        }
    }

    Rational threshold_;
    Rational alpha_;
    SimA sim_;
    ComponentIndex offered_graph_;
    WitnessLedger ledger_;
    std::vector<Edge> sim_seq_;
    std::vector<Edge> exc_seq_;
    int64_t witness_violations_ = 0;
};

}  // namespace recolor
