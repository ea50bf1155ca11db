#pragma once

#include <optional>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/instance.hpp"

namespace recolor {

struct Opt2Entry {
    int64_t value = 0;
    std::vector<Color> coloring;  // a proper basic coloring achieving it
};

struct BondReport {
    int64_t beta = 0;
    std::vector<Vtx> side_a;  // witness partition of the achieving component
    std::vector<Vtx> side_b;
};

/// Least number of basic recolorings making the prefix graph proper:
/// per component the cheaper of its two proper 2-colorings.
/// Throws naming an odd-cycle edge when the prefix is not bipartite.
Opt2Entry opt2_exact(const Instance& inst, size_t prefix_len);
inline Opt2Entry opt2_exact(const Instance& inst) { return opt2_exact(inst, inst.edges.size()); }

/// Exhaustive reference for opt2_exact; n <= 12.
int64_t opt2_bruteforce(const Instance& inst, size_t prefix_len);

/// Largest bond over all components by enumerating connected
/// bipartitions; components above the cap are rejected.
BondReport largest_bond_bruteforce(int32_t n, const std::vector<Edge>& edges,
                                   int32_t component_cap = 16);

/// Edges with endpoints in two different parts. Every part must induce a
/// connected subgraph; parts need not cover all vertices (uncovered
/// vertices carry part id -1).
int64_t cross_part_edges(int32_t n, const std::vector<Edge>& edges,
                         const std::vector<int32_t>& part);

}  // namespace recolor
