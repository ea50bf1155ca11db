#include "recolor/audit.hpp"

#include <algorithm>

#include "recolor/algo_b.hpp"
#include "recolor/oracles.hpp"

namespace recolor {

ChargingReport audit_charging(int32_t n, const std::vector<Color>& initial,
                              const std::vector<Edge>& sim_seq, FlipPolicy policy,
                              Rational threshold, Rational alpha) {
    SimA sim(n, kBasic1, kBasic2, initial, policy);
    ChargingReport rep;
    rep.ceil_log2_threshold = ceil_log2(threshold);
    Rational fifth = (Rational(1) - alpha) / Rational(5);
    Rational twentieth = (Rational(1) - alpha) / Rational(20);

    std::vector<std::vector<Vtx>> x_of_root(n);
    for (Vtx v = 0; v < n; ++v) x_of_root[v] = {v};
    std::vector<int32_t> charges(n, 0);
    std::vector<int8_t> charged_ii(n, 0), charged_iii(n, 0), charged_iv(n, 0);

    auto charge = [&](Vtx v, int which) {
        ++charges[v];
        ++rep.total_charge;
        if (which == 2 && charged_ii[v]++) ++rep.once_violations;
        if (which == 3 && charged_iii[v]++) ++rep.once_violations;
        if (which == 4 && charged_iv[v]++) ++rep.once_violations;
    };

    auto merge_x = [&](Vtx ru, Vtx rv, Vtx nr) {
        auto& a = x_of_root[ru];
        auto& b = x_of_root[rv];
        if (a.size() < b.size()) a.swap(b);
        a.insert(a.end(), b.begin(), b.end());
        b.clear();
        if (nr != ru) {
            x_of_root[nr].swap(a);
            a.clear();
        }
    };

    for (const Edge& e : sim_seq) {
        ++rep.steps;
        const ComponentIndex& idx = sim.components();
        Vtx ru = idx.find(e.u), rv = idx.find(e.v);
        bool distinct = ru != rv;
        int32_t su = idx.size(ru), sv = idx.size(rv);
        int32_t rcu = idx.rcount(ru), rcv = idx.rcount(rv);
        std::vector<Vtx> members_u, members_v;
        if (distinct) {
            ComponentClass cu = classify_component(su, rcu, threshold, alpha);
            ComponentClass cv = classify_component(sv, rcv, threshold, alpha);
            if (!(cu.small || cu.light) && !(cv.small || cv.light))
                throw Error("audit_charging: sequence is not moderate at step " +
                            std::to_string(rep.steps - 1));
            if (sim.color(e.u) == sim.color(e.v)) {
                // Member lists are needed for the charging cases and are
                // rewired by the merge; snapshot them first.
                members_u = idx.members(ru);
                members_v = idx.members(rv);
            }
        }

        FeedReport fed = sim.feed(e);
        if (!distinct) continue;
        Vtx merged_root = sim.components().find(e.u);

        bool keep_light = true;  // non-flip merges take the union rule
        if (fed.flipped) {
            ++rep.flips;
            rep.cost += fed.step_cost;
            bool flip_is_u = fed.flip_root == ru;
            int32_t flip_size = flip_is_u ? su : sv;
            int32_t keep_size = flip_is_u ? sv : su;
            int32_t flip_rc = flip_is_u ? rcu : rcv;
            int32_t keep_rc = flip_is_u ? rcv : rcu;
            const std::vector<Vtx>& flip_members = flip_is_u ? members_u : members_v;
            const std::vector<Vtx>& keep_members = flip_is_u ? members_v : members_u;
            ComponentClass cf = classify_component(flip_size, flip_rc, threshold, alpha);
            ComponentClass ck = classify_component(keep_size, keep_rc, threshold, alpha);
            keep_light = ck.light;

            bool qualifying = int64_t(4) * (flip_size + keep_size) >= int64_t(5) * flip_size;
            if (qualifying) {
                ++rep.iplus_flips;
                rep.cost_iplus += fed.step_cost;
                int64_t step_charge = 0;
                if (cf.small) {
                    for (Vtx v : flip_members) charge(v, 1), ++step_charge;
                } else if (cf.light) {
                    for (Vtx v : fed.newly_recolored) charge(v, 2), ++step_charge;
                } else if (!ck.light) {
                    // flipped large+heavy, kept heavy (hence small)
                    for (Vtx v : keep_members)
                        if (sim.in_r(v)) charge(v, 3), ++step_charge;
                } else {
                    for (Vtx v : x_of_root[fed.flip_root]) charge(v, 4), ++step_charge;
                }
                if (Rational(step_charge) < twentieth * Rational(flip_size))
                    ++rep.step_violations;
            }
        }

        if (fed.flipped && keep_light) {
            std::vector<Vtx> fresh;
            sim.components().for_members(merged_root, [&](Vtx v) {
                if (!sim.in_r(v)) fresh.push_back(v);
            });
            x_of_root[ru].clear();
            x_of_root[rv].clear();
            x_of_root[merged_root] = std::move(fresh);
        } else {
            merge_x(ru, rv, merged_root);
        }

        int32_t merged_size = sim.components().size(merged_root);
        if (Rational(int64_t(x_of_root[merged_root].size())) < fifth * Rational(merged_size))
            ++rep.x_violations;
    }

    rep.r_size = sim.r_size();
    int64_t bar = rep.ceil_log2_threshold + 4;
    for (Vtx v = 0; v < n; ++v) {
        rep.max_vertex_charge = std::max<int64_t>(rep.max_vertex_charge, charges[v]);
        if (charges[v] > bar) ++rep.vertex_violations;
        if (charges[v] > 0 && !sim.in_r(v)) ++rep.charged_outside_r;
    }
    return rep;
}

BondCheck audit_bond_partition(int32_t n, const std::vector<Edge>& edges,
                               const std::vector<int32_t>& parts, int64_t beta) {
    BondCheck c;
    int32_t k = 0;
    for (int32_t p : parts) k = std::max(k, p + 1);
    c.cross_edges = cross_part_edges(n, edges, parts);
    c.bound = int64_t(std::max(0, k - 1)) * beta;
    c.ok = c.cross_edges <= c.bound;
    return c;
}

CostReport audit_costs(const AlgoRunner& runner, const Instance& inst) {
    CostReport rep;
    const Instance& pal = runner.effective_instance() ? *runner.effective_instance() : inst;
    const ColoringState& col = runner.coloring();
    for (const auto& ev : col.events()) {
        Rational cost = pal.color_cost(ev.to);
        rep.replayed_total += cost;
        switch (ev.bucket) {
            case 'm': rep.mirror += cost; break;
            case 'x': rep.recx += cost; break;
            case 'p': rep.promote += cost; break;
            case 'g': rep.greedy += cost; break;
            default: throw Error("unknown cost bucket");
        }
    }
    rep.engine_total = col.total_cost();
    rep.totals_match = rep.replayed_total == rep.engine_total;
    if (const auto* b = dynamic_cast<const BRunner*>(&runner)) {
        rep.recx_bound =
            Rational(b->specials_marked() + b->both_special_edges()) * inst.D;
        rep.recx_within_bound = rep.recx <= rep.recx_bound;
    }
    return rep;
}

}  // namespace recolor
