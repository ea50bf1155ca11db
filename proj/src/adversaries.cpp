#include "recolor/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace recolor {

int path_doubling_phases(const Rational& D) {
    double d = double(D.num()) / double(D.den());
    if (d < 2.0) throw Error("path doubling needs D >= 2");
    double h = std::ceil(std::log2(d) - std::log2(std::log2(d)));
    return std::max(1, int(h));
}

Instance gen_path_doubling(const PathDoublingConfig& cfg) {
    int H = cfg.phases ? *cfg.phases : path_doubling_phases(cfg.D);
    if (H < 1 || H > 30) throw Error("path doubling phases out of range");
    int64_t block = int64_t(1) << H;
    if (cfg.n <= 0 || cfg.n % block != 0)
        throw Error("n must be a positive multiple of 2^H = " + std::to_string(block));

    Rng rng(cfg.seed);
    Instance inst;
    inst.n = cfg.n;
    inst.D = cfg.D;
    inst.delta = 2;
    inst.beta_hint = 1;  // final graph is a forest
    inst.special_palette_size = cfg.n;
    inst.label = "path_doubling";
    inst.initial_colors.reserve(cfg.n);
    for (int32_t v = 0; v < cfg.n; ++v)
        inst.initial_colors.push_back(rng.coin() ? kBasic2 : kBasic1);

    // Paths are contiguous blocks; track the two endpoints of each.
    std::vector<std::pair<Vtx, Vtx>> paths(cfg.n);
    for (Vtx v = 0; v < cfg.n; ++v) paths[v] = {v, v};
    for (int h = 1; h <= H; ++h) {
        std::vector<std::pair<Vtx, Vtx>> merged;
        merged.reserve(paths.size() / 2);
        for (size_t j = 0; j + 1 < paths.size(); j += 2) {
            auto [la, ra] = paths[j];
            auto [lb, rb] = paths[j + 1];
            bool pick_a_right = rng.coin();
            bool pick_b_right = rng.coin();
            Vtx a = pick_a_right ? ra : la;
            Vtx b = pick_b_right ? rb : lb;
            inst.edges.push_back({a, b});
            merged.push_back({pick_a_right ? la : ra, pick_b_right ? lb : rb});
        }
        paths = std::move(merged);
    }
    inst.validate();
    return inst;
}

BondFamily bond_family_from_string(const std::string& s) {
    if (s == "forest") return BondFamily::Forest;
    if (s == "cycles" || s == "even_cycles") return BondFamily::EvenCycles;
    if (s == "ladders") return BondFamily::Ladders;
    throw Error("unknown bond family '" + s + "'");
}

std::string to_string(BondFamily f) {
    switch (f) {
        case BondFamily::Forest: return "forest";
        case BondFamily::EvenCycles: return "even_cycles";
        default: return "ladders";
    }
}

namespace {

std::vector<Edge> prufer_tree(int32_t n, Rng& rng) {
    if (n == 1) return {};
    if (n == 2) return {{0, 1}};
    std::vector<int32_t> code(n - 2);
    for (auto& c : code) c = int32_t(rng.below(uint64_t(n)));
    std::vector<int32_t> deg(n, 1);
    for (int32_t c : code) ++deg[c];
    std::vector<Edge> edges;
    // Standard decode with an explicit min-leaf pointer.
    int32_t ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int32_t leaf = ptr;
    for (int32_t c : code) {
        edges.push_back({leaf, c});
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return edges;
}

void proper_then_perturb(Instance& inst, Rng& rng) {
    // Proper 2-coloring of the final graph, then each vertex flips with
    // probability 1/4 so the offline optimum is usually nonzero.
    std::vector<std::vector<Vtx>> adj(inst.n);
    for (const Edge& e : inst.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int8_t> side(inst.n, -1);
    for (Vtx s = 0; s < inst.n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vtx> q;
        q.push(s);
        while (!q.empty()) {
            Vtx u = q.front();
            q.pop();
            for (Vtx w : adj[u])
                if (side[w] == -1) {
                    side[w] = int8_t(1 - side[u]);
                    q.push(w);
                }
        }
    }
    inst.initial_colors.resize(inst.n);
    for (Vtx v = 0; v < inst.n; ++v) {
        Color c = side[v] == 0 ? kBasic1 : kBasic2;
        if (rng.chance(1, 4)) c = c == kBasic1 ? kBasic2 : kBasic1;
        inst.initial_colors[v] = c;
    }
}

}  // namespace

Instance gen_bounded_bond(BondFamily family, int32_t n, uint64_t seed) {
    if (n < 2) throw Error("bounded-bond families need n >= 2");
    Rng rng(seed);
    Instance inst;
    inst.n = n;
    inst.D = Rational(16);
    inst.special_palette_size = n;
    inst.label = to_string(family);

    switch (family) {
        case BondFamily::Forest: {
            inst.edges = prufer_tree(n, rng);
            inst.beta_hint = 1;
            break;
        }
        case BondFamily::EvenCycles: {
            int32_t next = 0;
            bool any = false;
            while (n - next >= 4) {
                int32_t maxlen = std::min<int32_t>(n - next, 16);
                int32_t choices = (maxlen - 4) / 2 + 1;  // even lengths 4..maxlen
                int32_t len = 4 + 2 * int32_t(rng.below(uint64_t(choices)));
                for (int32_t i = 0; i < len; ++i)
                    inst.edges.push_back({next + i, next + (i + 1) % len});
                next += len;
                any = true;
            }
            inst.beta_hint = any ? 2 : 1;  // leftover vertices stay isolated
            break;
        }
        case BondFamily::Ladders: {
            if (n % 2 != 0) throw Error("ladder needs even n");
            int32_t m = n / 2;
            for (int32_t i = 0; i + 1 < m; ++i) {
                inst.edges.push_back({i, i + 1});
                inst.edges.push_back({m + i, m + i + 1});
            }
            for (int32_t i = 0; i < m; ++i) inst.edges.push_back({i, m + i});
            inst.beta_hint = m >= 2 ? m : 1;  // all rungs form the largest bond
            break;
        }
    }

    rng.shuffle(inst.edges);
    proper_then_perturb(inst, rng);
    int32_t maxdeg = 0;
    {
        std::vector<int32_t> deg(n, 0);
        for (const Edge& e : inst.edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int32_t d : deg) maxdeg = std::max(maxdeg, d);
    }
    inst.delta = std::max(1, maxdeg);
    inst.validate();
    return inst;
}

DominatingAdversary::DominatingAdversary(int32_t n, uint64_t seed)
    : n_(n), rng_(seed), comps_(n), cls_(n, 0) {
    initial_colors_.reserve(n);
    for (int32_t v = 0; v < n; ++v)
        initial_colors_.push_back(rng_.coin() ? kBasic2 : kBasic1);
}

Instance DominatingAdversary::make_instance(int32_t n, Rational D, uint64_t seed) {
    Instance inst;
    inst.n = n;
    inst.D = D;
    inst.delta = ceil_log2(Rational(std::max(n, 2))) + 2;
    inst.special_palette_size = n;
    inst.beta_hint = int64_t(n) * inst.delta;  // loose; moderation only needs an upper bound
    AdaptiveSpec spec;
    spec.name = "dominating";
    spec.n = n;
    spec.seed = seed;
    inst.adversary = spec;
    inst.label = "dominating";
    DominatingAdversary gen(n, seed);
    inst.initial_colors = gen.initial_colors();
    return inst;
}

void DominatingAdversary::match_pair(Vtx x_root, Vtx y_root, Color c, const AlgoView& view,
                                     std::vector<Edge>& out) {
    auto split = [&](Vtx root, std::vector<Vtx>& a, std::vector<Vtx>& b) {
        comps_.for_members(root, [&](Vtx v) { (cls_[v] == 0 ? a : b).push_back(v); });
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
    };
    std::vector<Vtx> xa, xb, ya, yb;
    split(x_root, xa, xb);
    split(y_root, ya, yb);

    auto count_c = [&](const std::vector<Vtx>& vs) {
        int64_t k = 0;
        for (Vtx v : vs) k += (*view.colors)[v] == c;
        return k;
    };
    int64_t ca = count_c(xa), cb = count_c(xb), da = count_c(ya), db = count_c(yb);

    // Cross matching keeps the class labels as they are; straight
    // matching relabels Y. Either preserves bipartiteness; pick the one
    // pairing more same-colored vertices.
    bool cross_ok = xa.size() == yb.size() && xb.size() == ya.size();
    bool straight_ok = xa.size() == ya.size() && xb.size() == yb.size();
    if (!cross_ok && !straight_ok)
        throw Error("dominating adversary: unbalanced components cannot be matched");
    int64_t cross_mono = cross_ok ? std::min(ca, db) + std::min(cb, da) : -1;
    int64_t straight_mono = straight_ok ? std::min(ca, da) + std::min(cb, db) : -1;
    bool use_cross = cross_ok && cross_mono >= straight_mono;
    mono_guaranteed_ += use_cross ? cross_mono : straight_mono;

    if (!use_cross) {
        for (Vtx v : ya) cls_[v] = 1;
        for (Vtx v : yb) cls_[v] = 0;
    }

    auto order = [&](std::vector<Vtx>& vs) {
        std::stable_sort(vs.begin(), vs.end(), [&](Vtx p, Vtx q) {
            bool pc = (*view.colors)[p] == c, qc = (*view.colors)[q] == c;
            if (pc != qc) return pc;
            Color cp = (*view.colors)[p], cq = (*view.colors)[q];
            if (cp != cq) return cp < cq;
            return p < q;
        });
    };
    auto zip = [&](std::vector<Vtx>& p, std::vector<Vtx>& q) {
        order(p);
        order(q);
        for (size_t i = 0; i < p.size(); ++i) {
            out.push_back({p[i], q[i]});
            mono_emitted_ += (*view.colors)[p[i]] == (*view.colors)[q[i]];
        }
    };
    if (use_cross) {
        zip(xa, yb);
        zip(xb, ya);
    } else {
        zip(xa, ya);
        zip(xb, yb);
    }
    ++pairs_matched_;
}

std::vector<Edge> DominatingAdversary::next_phase(const AlgoView& view) {
    if (done_) return {};
    if (phases_done_ > 2 * ceil_log2(Rational(std::max(n_, 2))) + 4) {
        done_ = true;
        return {};
    }

    std::vector<CompStats> stats;
    for (Vtx r : comps_.roots()) {
        CompStats s{r, comps_.size(r), 0, 0, 0};
        comps_.for_members(r, [&](Vtx v) {
            s.basic += (*view.ever_special)[v] == 0;
            s.c1 += (*view.colors)[v] == kBasic1;
            s.c2 += (*view.colors)[v] == kBasic2;
        });
        stats.push_back(s);
    }
    std::sort(stats.begin(), stats.end(), [](const CompStats& a, const CompStats& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.root < b.root;
    });

    std::vector<Edge> batch;
    std::vector<Vtx> used;
    auto is_used = [&](Vtx r) { return std::find(used.begin(), used.end(), r) != used.end(); };
    for (Color c : {kBasic1, kBasic2}) {
        std::vector<const CompStats*> cands;
        for (const CompStats& s : stats) {
            bool active = 2 * s.basic >= s.size;
            int32_t cc = c == kBasic1 ? s.c1 : s.c2;
            bool dominated = 4 * cc >= s.size;
            if (active && dominated && !is_used(s.root)) cands.push_back(&s);
        }
        for (size_t i = 0; i + 1 < cands.size();) {
            if (cands[i]->size == cands[i + 1]->size) {
                match_pair(cands[i]->root, cands[i + 1]->root, c, view, batch);
                used.push_back(cands[i]->root);
                used.push_back(cands[i + 1]->root);
                i += 2;
            } else {
                ++i;
            }
        }
    }
    if (batch.empty()) {
        done_ = true;
        return {};
    }
    for (const Edge& e : batch) comps_.unite(e.u, e.v);
    ++phases_done_;
    return batch;
}

Instance gen_random_bipartite(int32_t n, uint64_t seed) {
    Rng rng(seed);
    Instance inst;
    inst.n = n;
    inst.D = Rational(4);
    inst.special_palette_size = n;
    inst.label = "random_bipartite";
    std::vector<int8_t> side(n);
    for (Vtx v = 0; v < n; ++v) side[v] = int8_t(rng.below(2));
    std::vector<Edge> candidates;
    for (Vtx u = 0; u < n; ++u)
        for (Vtx v = u + 1; v < n; ++v)
            if (side[u] != side[v]) candidates.push_back({u, v});
    rng.shuffle(candidates);
    size_t m = candidates.empty() ? 0 : rng.below(candidates.size() + 1);
    inst.edges.assign(candidates.begin(), candidates.begin() + m);
    for (Vtx v = 0; v < n; ++v)
        inst.initial_colors.push_back(rng.coin() ? kBasic2 : kBasic1);
    int32_t maxdeg = 1;
    {
        std::vector<int32_t> deg(n, 0);
        for (const Edge& e : inst.edges) maxdeg = std::max({maxdeg, ++deg[e.u], ++deg[e.v]});
    }
    inst.delta = maxdeg;
    inst.validate();
    return inst;
}

RandomPartitioned gen_random_partitioned(int32_t n, uint64_t seed) {
    Rng rng(seed);
    RandomPartitioned out;
    Instance& inst = out.inst;
    inst.n = n;
    inst.D = Rational(4);
    inst.special_palette_size = n;
    inst.label = "random_partitioned";
    std::vector<Edge> candidates;
    for (Vtx u = 0; u < n; ++u)
        for (Vtx v = u + 1; v < n; ++v) candidates.push_back({u, v});
    rng.shuffle(candidates);
    size_t m = candidates.empty() ? 0 : rng.below(candidates.size() + 1);
    inst.edges.assign(candidates.begin(), candidates.begin() + m);
    inst.initial_colors.assign(n, kBasic1);
    int32_t maxdeg = 1;
    {
        std::vector<int32_t> deg(n, 0);
        for (const Edge& e : inst.edges) maxdeg = std::max({maxdeg, ++deg[e.u], ++deg[e.v]});
    }
    inst.delta = maxdeg;

    // Multi-source BFS growth gives connected parts inside each component.
    std::vector<std::vector<Vtx>> adj(n);
    for (const Edge& e : inst.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    out.parts.assign(n, -1);
    std::vector<int8_t> visited(n, 0);
    for (Vtx s = 0; s < n; ++s) {
        if (visited[s]) continue;
        std::vector<Vtx> comp;
        std::queue<Vtx> q;
        q.push(s);
        visited[s] = 1;
        while (!q.empty()) {
            Vtx u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vtx w : adj[u])
                if (!visited[w]) {
                    visited[w] = 1;
                    q.push(w);
                }
        }
        int32_t k = 1 + int32_t(rng.below(comp.size()));
        std::vector<Vtx> seeds = comp;
        rng.shuffle(seeds);
        seeds.resize(k);
        std::queue<Vtx> grow;
        for (Vtx v : seeds) {
            out.parts[v] = out.num_parts++;
            grow.push(v);
        }
        while (!grow.empty()) {
            Vtx u = grow.front();
            grow.pop();
            for (Vtx w : adj[u])
                if (out.parts[w] == -1) {
                    out.parts[w] = out.parts[u];
                    grow.push(w);
                }
        }
    }
    return out;
}

}  // namespace recolor
