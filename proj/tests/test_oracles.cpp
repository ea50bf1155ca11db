#include "doctest.h"
#include "recolor/adversaries.hpp"
#include "recolor/oracles.hpp"
#include "recolor/rng.hpp"

using namespace recolor;

namespace {

Instance small(int32_t n, std::vector<Color> colors, std::vector<Edge> edges) {
    Instance inst;
    inst.n = n;
    inst.D = Rational(4);
    inst.delta = n;
    inst.special_palette_size = 0;
    inst.initial_colors = std::move(colors);
    inst.edges = std::move(edges);
    return inst;
}

}  // namespace

TEST_CASE("opt2 worked examples") {
    // both endpoints start on color 1: one flip needed
    CHECK(opt2_exact(small(2, {1, 1}, {{0, 1}})).value == 1);
    // path of 4 already proper
    CHECK(opt2_exact(small(4, {1, 2, 1, 2}, {{0, 1}, {1, 2}, {2, 3}})).value == 0);
    // star K_{1,3}: center 1, leaves 1,1,2
    CHECK(opt2_exact(small(4, {1, 1, 1, 2}, {{0, 1}, {0, 2}, {0, 3}})).value == 2);
    // isolated vertices are free
    CHECK(opt2_exact(small(3, {1, 1, 1}, {})).value == 0);
}

TEST_CASE("opt2 exact equals brute force on the worked examples") {
    Instance a = small(2, {1, 1}, {{0, 1}});
    CHECK(opt2_bruteforce(a, a.edges.size()) == 1);
    Instance b = small(4, {1, 2, 1, 2}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(opt2_bruteforce(b, b.edges.size()) == 0);
    Instance c = small(4, {1, 1, 1, 2}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(opt2_bruteforce(c, c.edges.size()) == 2);
    CHECK(opt2_bruteforce(small(3, {1, 1, 1}, {}), 0) == 0);
}

TEST_CASE("opt2 odd cycle errors name an edge") {
    Instance tri = small(3, {1, 2, 1}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_WITH_AS(opt2_exact(tri), doctest::Contains("not bipartite"), Error);
    CHECK_THROWS_WITH_AS(opt2_bruteforce(tri, 3), doctest::Contains("not bipartite"), Error);
}

TEST_CASE("opt2 exact equals brute force on random bipartite instances") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = gen_random_bipartite(4 + int32_t(seed % 9), seed);
        CAPTURE(seed);
        CHECK(opt2_exact(inst).value == opt2_bruteforce(inst, inst.edges.size()));
    }
}

TEST_CASE("opt2 is monotone in the prefix") {
    for (uint64_t seed = 100; seed < 110; ++seed) {
        Instance inst = gen_random_bipartite(10, seed);
        int64_t prev = 0;
        for (size_t i = 0; i <= inst.edges.size(); ++i) {
            int64_t cur = opt2_exact(inst, i).value;
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("the proper coloring returned by opt2 is proper and achieves its value") {
    for (uint64_t seed = 200; seed < 210; ++seed) {
        Instance inst = gen_random_bipartite(11, seed);
        Opt2Entry e = opt2_exact(inst);
        int64_t diff = 0;
        for (Vtx v = 0; v < inst.n; ++v) diff += e.coloring[v] != inst.initial_colors[v];
        CHECK(diff == e.value);
        for (const Edge& ed : inst.edges) CHECK(e.coloring[ed.u] != e.coloring[ed.v]);
    }
}

TEST_CASE("bond worked examples") {
    // any tree on >= 2 vertices
    CHECK(largest_bond_bruteforce(2, {{0, 1}}).beta == 1);
    CHECK(largest_bond_bruteforce(4, {{0, 1}, {1, 2}, {1, 3}}).beta == 1);
    // 4-cycle
    BondReport c4 = largest_bond_bruteforce(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.beta == 2);
    CHECK(c4.side_a.size() + c4.side_b.size() == 4);
    // edgeless graph
    CHECK(largest_bond_bruteforce(5, {}).beta == 0);
}

TEST_CASE("bond cap error suggests beta_hint") {
    std::vector<Edge> path;
    for (int i = 0; i < 20; ++i) path.push_back({i, i + 1});
    CHECK_THROWS_WITH_AS(largest_bond_bruteforce(21, path), doctest::Contains("beta_hint"),
                         Error);
}

TEST_CASE("bond monotone under edge additions") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        int32_t n = 8;
        std::vector<Edge> edges;
        int64_t prev = 0;
        for (int i = 0; i < 12; ++i) {
            Vtx u = Vtx(rng.below(n)), v = Vtx(rng.below(n));
            if (u == v) continue;
            bool dup = false;
            for (const Edge& e : edges)
                dup |= (e.u == u && e.v == v) || (e.u == v && e.v == u);
            if (dup) continue;
            edges.push_back({u, v});
            int64_t cur = largest_bond_bruteforce(n, edges).beta;
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("bond witness is a connected bipartition with the claimed cut") {
    BondReport r = largest_bond_bruteforce(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(r.beta == 2);  // even cycle C6
    int64_t cut = 0;
    auto in_a = [&](Vtx v) {
        for (Vtx x : r.side_a)
            if (x == v) return true;
        return false;
    };
    for (const Edge& e : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})
        cut += in_a(e.u) != in_a(e.v);
    CHECK(cut == r.beta);
}

TEST_CASE("ladder bonds grow with length") {
    // 2 x m ladder: rails + rungs; the full rung set is the largest bond
    for (int32_t m : {2, 3, 4}) {
        std::vector<Edge> edges;
        for (int32_t i = 0; i + 1 < m; ++i) {
            edges.push_back({i, i + 1});
            edges.push_back({m + i, m + i + 1});
        }
        for (int32_t i = 0; i < m; ++i) edges.push_back({i, m + i});
        CHECK(largest_bond_bruteforce(2 * m, edges).beta == m);
    }
}

TEST_CASE("cross_part_edges validates connectivity") {
    std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(cross_part_edges(4, path, {0, 0, 1, 1}) == 1);
    CHECK_THROWS_AS(cross_part_edges(4, path, {0, 1, 0, 1}), Error);  // part 0 disconnected
}
