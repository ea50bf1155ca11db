#include "recolor/oracles.hpp"

#include <algorithm>
#include <queue>

namespace recolor {

namespace {

struct TwoColoring {
    std::vector<int8_t> side;       // 0/1 per vertex, -1 isolated-from-BFS (never happens: all get sides)
    std::vector<Vtx> comp_root;     // BFS root per vertex
    std::vector<std::vector<Vtx>> comps;
};

TwoColoring two_color_or_throw(int32_t n, const std::vector<Edge>& edges, size_t prefix_len) {
    std::vector<std::vector<Vtx>> adj(n);
    for (size_t i = 0; i < prefix_len; ++i) {
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
    }
    TwoColoring tc;
    tc.side.assign(n, -1);
    tc.comp_root.assign(n, -1);
    for (Vtx s = 0; s < n; ++s) {
        if (tc.side[s] != -1) continue;
        tc.comps.emplace_back();
        auto& comp = tc.comps.back();
        tc.side[s] = 0;
        tc.comp_root[s] = s;
        std::queue<Vtx> q;
        q.push(s);
        while (!q.empty()) {
            Vtx u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vtx w : adj[u]) {
                if (tc.side[w] == -1) {
                    tc.side[w] = int8_t(1 - tc.side[u]);
                    tc.comp_root[w] = s;
                    q.push(w);
                } else if (tc.side[w] == tc.side[u]) {
                    throw Error("not bipartite: edge (" + std::to_string(u) + "," +
                                std::to_string(w) + ") closes an odd cycle");
                }
            }
        }
    }
    return tc;
}

}  // namespace

Opt2Entry opt2_exact(const Instance& inst, size_t prefix_len) {
    if (prefix_len > inst.edges.size()) throw Error("prefix_len exceeds stream length");
    TwoColoring tc = two_color_or_throw(inst.n, inst.edges, prefix_len);
    Opt2Entry out;
    out.coloring.assign(inst.n, kBasic1);
    for (const auto& comp : tc.comps) {
        // Two proper colorings: side0->1/side1->2, or flipped.
        int64_t d_straight = 0, d_flipped = 0;
        for (Vtx v : comp) {
            Color straight = tc.side[v] == 0 ? kBasic1 : kBasic2;
            Color flipped = tc.side[v] == 0 ? kBasic2 : kBasic1;
            if (inst.initial_colors[v] != straight) ++d_straight;
            if (inst.initial_colors[v] != flipped) ++d_flipped;
        }
        bool flip = d_flipped < d_straight;
        out.value += flip ? d_flipped : d_straight;
        for (Vtx v : comp) {
            bool one = (tc.side[v] == 0) != flip;
            out.coloring[v] = one ? kBasic1 : kBasic2;
        }
    }
    return out;
}

int64_t opt2_bruteforce(const Instance& inst, size_t prefix_len) {
    if (inst.n > 12) throw Error("opt2_bruteforce: n too large (max 12)");
    if (prefix_len > inst.edges.size()) throw Error("prefix_len exceeds stream length");
    int64_t best = -1;
    for (uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
        bool proper = true;
        for (size_t i = 0; i < prefix_len && proper; ++i) {
            const Edge& e = inst.edges[i];
            proper = ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
        }
        if (!proper) continue;
        int64_t d = 0;
        for (Vtx v = 0; v < inst.n; ++v) {
            Color c = ((mask >> v) & 1u) ? kBasic2 : kBasic1;
            if (c != inst.initial_colors[v]) ++d;
        }
        if (best < 0 || d < best) best = d;
    }
    if (best < 0) throw Error("not bipartite: no proper 2-coloring exists");
    return best;
}

BondReport largest_bond_bruteforce(int32_t n, const std::vector<Edge>& edges,
                                   int32_t component_cap) {
    std::vector<std::vector<Vtx>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int8_t> seen(n, 0);
    BondReport best;

    for (Vtx s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vtx> comp;
        std::queue<Vtx> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vtx u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vtx w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        int k = int(comp.size());
        if (k < 2) continue;
        if (k > component_cap)
            throw Error("largest_bond_bruteforce: component of size " + std::to_string(k) +
                        " exceeds cap " + std::to_string(component_cap) +
                        "; supply beta_hint instead");
        std::sort(comp.begin(), comp.end());
        std::vector<int32_t> local(n, -1);
        for (int i = 0; i < k; ++i) local[comp[i]] = i;
        std::vector<uint32_t> ladj(k, 0);
        for (int i = 0; i < k; ++i)
            for (Vtx w : adj[comp[i]])
                ladj[i] |= (1u << local[w]);

        auto connected = [&](uint32_t set) {
            if (set == 0) return false;
            uint32_t start = set & -set;
            uint32_t reach = start, frontier = start;
            while (frontier) {
                uint32_t nxt = 0;
                uint32_t f = frontier;
                while (f) {
                    int b = __builtin_ctz(f);
                    f &= f - 1;
                    nxt |= ladj[b] & set;
                }
                frontier = nxt & ~reach;
                reach |= nxt;
            }
            return reach == set;
        };

        uint32_t full = k == 32 ? 0xFFFFFFFFu : ((1u << k) - 1);
        // Canonical side: the one holding the component's minimum vertex.
        for (uint32_t set = 1; set < full; set += 2) {
            uint32_t other = full & ~set;
            if (!connected(set) || !connected(other)) continue;
            int64_t cut = 0;
            uint32_t f = set;
            while (f) {
                int b = __builtin_ctz(f);
                f &= f - 1;
                cut += __builtin_popcount(ladj[b] & other);
            }
            if (cut > best.beta) {
                best.beta = cut;
                best.side_a.clear();
                best.side_b.clear();
                for (int i = 0; i < k; ++i)
                    ((set >> i) & 1u ? best.side_a : best.side_b).push_back(comp[i]);
            }
        }
    }
    return best;
}

int64_t cross_part_edges(int32_t n, const std::vector<Edge>& edges,
                         const std::vector<int32_t>& part) {
    int32_t max_part = -1;
    for (int32_t p : part) max_part = std::max(max_part, p);
    // Connectivity of each part.
    for (int32_t pid = 0; pid <= max_part; ++pid) {
        std::vector<Vtx> verts;
        for (Vtx v = 0; v < n; ++v)
            if (part[v] == pid) verts.push_back(v);
        if (verts.empty()) continue;
        std::vector<std::vector<Vtx>> adj(n);
        for (const Edge& e : edges)
            if (part[e.u] == pid && part[e.v] == pid) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
        std::vector<int8_t> seen(n, 0);
        std::queue<Vtx> q;
        q.push(verts[0]);
        seen[verts[0]] = 1;
        size_t cnt = 0;
        while (!q.empty()) {
            Vtx u = q.front();
            q.pop();
            ++cnt;
            for (Vtx w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        if (cnt != verts.size())
            throw Error("part " + std::to_string(pid) + " does not induce a connected subgraph");
    }
    int64_t cross = 0;
    for (const Edge& e : edges)
        if (part[e.u] != -1 && part[e.v] != -1 && part[e.u] != part[e.v]) ++cross;
    return cross;
}

}  // namespace recolor
