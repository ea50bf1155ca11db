#include "doctest.h"
#include "recolor/adversaries.hpp"
#include "recolor/moderation.hpp"

using namespace recolor;

TEST_CASE("component classification boundaries") {
    Rational thr(4), half(1, 2);
    // |C|=2, |R cap C|=2: small, heavy
    ComponentClass a = classify_component(2, 2, thr, half);
    CHECK(a.small);
    CHECK_FALSE(a.light);
    // |C|=8, |R cap C|=4: large, light (boundary inclusive)
    ComponentClass b = classify_component(8, 4, thr, half);
    CHECK_FALSE(b.small);
    CHECK(b.light);
    // |C|=8, |R cap C|=5: large, heavy
    ComponentClass c = classify_component(8, 5, thr, half);
    CHECK_FALSE(c.small);
    CHECK_FALSE(c.light);
    // |C|=4 at the size boundary is small
    CHECK(classify_component(4, 0, thr, half).small);
}

namespace {

/// Two components {0,1,2} and {3,4,5}, each of size 3 with 2 recolored
/// vertices: large and heavy under threshold 2, alpha 1/2.
ModeratedSim heavy_pair() {
    ModeratedSim mod(6, kBasic1, kBasic2, std::vector<Color>(6, 1), Rational(2),
                     Rational(1, 2), FlipPolicy::SmallerNew);
    CHECK(mod.offer({0, 1}).route == Route::Sim);  // flips {0}
    CHECK(mod.offer({1, 2}).route == Route::Sim);  // flips {2}
    CHECK(mod.offer({3, 4}).route == Route::Sim);  // flips {3}
    CHECK(mod.offer({4, 5}).route == Route::Sim);  // flips {5}
    return mod;
}

}  // namespace

TEST_CASE("admit: intra-component edges are always sim") {
    ModeratedSim mod = heavy_pair();
    // duplicate inside a component: same sim-component, admitted
    CHECK(mod.offer({0, 1}).route == Route::Sim);
}

TEST_CASE("admit: one small side keeps the edge simulated") {
    ModeratedSim mod(8, kBasic1, kBasic2, std::vector<Color>(8, 1), Rational(4),
                     Rational(1, 2), FlipPolicy::SmallerNew);
    mod.offer({0, 1});
    mod.offer({2, 3});
    // both components have 2 <= 4 vertices: small, so admitted
    CHECK(mod.offer({0, 2}).route == Route::Sim);
}

TEST_CASE("admit: both sides large and heavy goes to excess") {
    ModeratedSim mod = heavy_pair();
    const auto& idx = mod.sim().components();
    Vtx r0 = idx.find(0), r3 = idx.find(3);
    REQUIRE(r0 != r3);
    REQUIRE(idx.size(r0) == 3);
    REQUIRE(idx.size(r3) == 3);
    CHECK(Rational(idx.rcount(r0)) > Rational(1, 2) * Rational(idx.size(r0)));
    CHECK(Rational(idx.rcount(r3)) > Rational(1, 2) * Rational(idx.size(r3)));
    auto out = mod.offer({2, 3});
    CHECK(out.route == Route::Excess);
    CHECK(mod.exc_seq().size() == 1);
    CHECK(mod.sim_seq().size() == 4);
    // both sides were covered by witness sets before the excess edge,
    // and by distinct ones
    CHECK(mod.witness_violations() == 0);
    CHECK(mod.ledger().num_sets() == 2);
    CHECK(mod.ledger().set_of(2) != mod.ledger().set_of(3));
}

TEST_CASE("witness sets: created only strictly above alpha*threshold") {
    // threshold 4, alpha 1/2: the bar is 2; a component holding exactly
    // 2 recolored vertices gets no set
    ModeratedSim mod(6, kBasic1, kBasic2, std::vector<Color>(6, 1), Rational(4),
                     Rational(1, 2), FlipPolicy::SmallerNew);
    mod.offer({0, 1});  // flips {0}: colors 2,1; R = {0}
    mod.offer({2, 3});  // flips {2}: colors 2,1; R = {0,2}
    mod.offer({1, 2});  // bichromatic merge: {0..3} holds exactly 2 of R
    CHECK(mod.ledger().num_sets() == 0);
    mod.offer({4, 5});  // flips {4}: R = {0,2,4}
    CHECK(mod.ledger().num_sets() == 0);
    mod.offer({3, 4});  // bichromatic merge: {0..5} holds 3 > 2 of R
    CHECK(mod.ledger().num_sets() == 1);
    for (Vtx v = 0; v < 6; ++v) CHECK(mod.ledger().covered(v));
}

TEST_CASE("witness invariants on a full run") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Instance inst = gen_bounded_bond(BondFamily::Forest, 128, seed);
        inst.D = Rational(8);
        ModeratedSim mod(inst.n, kBasic1, kBasic2, inst.initial_colors, inst.D, Rational(1, 2),
                         FlipPolicy::SmallerNew);
        for (const Edge& e : inst.edges) mod.offer(e);
        CHECK(mod.witness_violations() == 0);

        const WitnessLedger& led = mod.ledger();
        // pairwise disjoint by construction (assign throws on reassignment);
        // check the count bound s <= |R| / (alpha * threshold)
        Rational bar = Rational(1, 2) * inst.D;
        CHECK(Rational(led.num_sets()) * bar <= Rational(mod.sim().r_size()));

        // every offered-graph component with rcount above the bar is covered
        const ComponentIndex& g = mod.offered_graph();
        for (Vtx r : g.roots()) {
            if (Rational(g.rcount(r)) > bar) {
                g.for_members(r, [&](Vtx v) { CHECK(led.covered(v)); });
            }
        }
        // sets hold at creation more than alpha*threshold R vertices; at
        // minimum they are nonempty
        for (const auto& s : led.sets()) CHECK_FALSE(s.empty());

        // excess bound via the witness argument: |exc| <= beta * |R| / (alpha D)
        Rational bound = Rational(1) * Rational(mod.sim().r_size()) / bar;
        CHECK(Rational(int64_t(mod.exc_seq().size())) <= bound);
    }
}

TEST_CASE("sim and excess partition the offered edges preserving order") {
    Instance inst = gen_bounded_bond(BondFamily::EvenCycles, 64, 3);
    inst.D = Rational(4);
    ModeratedSim mod(inst.n, kBasic1, kBasic2, inst.initial_colors, inst.D, Rational(1, 2),
                     FlipPolicy::SmallerNew);
    for (const Edge& e : inst.edges) mod.offer(e);
    CHECK(mod.sim_seq().size() + mod.exc_seq().size() == inst.edges.size());
    // order inside each part follows arrival order
    size_t si = 0, xi = 0;
    for (const Edge& e : inst.edges) {
        if (si < mod.sim_seq().size() && mod.sim_seq()[si] == e) {
            ++si;
        } else if (xi < mod.exc_seq().size() && mod.exc_seq()[xi] == e) {
            ++xi;
        }
    }
    CHECK(si == mod.sim_seq().size());
    CHECK(xi == mod.exc_seq().size());
}

TEST_CASE("sim sequence is moderate by construction") {
    // replay the sim sequence through a fresh scope: every edge admitted
    Instance inst = gen_bounded_bond(BondFamily::Forest, 256, 12);
    inst.D = Rational(4);
    ModeratedSim mod(inst.n, kBasic1, kBasic2, inst.initial_colors, inst.D, Rational(1, 2),
                     FlipPolicy::SmallerNew);
    for (const Edge& e : inst.edges) mod.offer(e);
    ModeratedSim replay(inst.n, kBasic1, kBasic2, inst.initial_colors, inst.D, Rational(1, 2),
                        FlipPolicy::SmallerNew);
    for (const Edge& e : mod.sim_seq()) {
        CHECK(replay.admits(e));
        replay.offer(e);
    }
}
