#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace recolor {

using Vtx = int32_t;
using Color = int32_t;

struct Edge {
    Vtx u = -1;
    Vtx v = -1;
    bool operator==(const Edge&) const = default;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MergeReport {
    bool merged = false;  // false when endpoints were already in one component
    Vtx root_u = -1, root_v = -1;
    int32_t size_u = 0, size_v = 0;
    int32_t rcount_u = 0, rcount_v = 0;
    Vtx root_new = -1;
};

/// Union-by-size partition with per-root member lists (O(1) splice on
/// merge), recolored-vertex counts and minimum member id. No path
/// compression: finds stay O(log n) under union-by-size and parents are
/// never rewritten behind a caller's back.
class ComponentIndex {
public:
    explicit ComponentIndex(int32_t n = 0) { reset(n); }

    void reset(int32_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        rcount_.assign(n, 0);
        head_.resize(n);
        tail_.resize(n);
        next_.assign(n, -1);
        for (Vtx v = 0; v < n; ++v) {
            parent_[v] = v;
            head_[v] = tail_[v] = v;
        }
    }

    int32_t n() const { return int32_t(parent_.size()); }

    Vtx find(Vtx v) const {
        check(v);
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    int32_t size(Vtx root) const { return size_[root]; }
    int32_t rcount(Vtx root) const { return rcount_[root]; }
    /// Minimum vertex id inside a root's component: the root itself
    /// (ties in unite prefer the smaller id as root).
    Vtx min_id(Vtx root) const { return root; }

    MergeReport unite(Vtx u, Vtx v) {
        check(u);
        check(v);
        if (u == v) throw Error("self-edge (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
        MergeReport r;
        r.root_u = find(u);
        r.root_v = find(v);
        r.size_u = size_[r.root_u];
        r.size_v = size_[r.root_v];
        r.rcount_u = rcount_[r.root_u];
        r.rcount_v = rcount_[r.root_v];
        if (r.root_u == r.root_v) {
            r.merged = false;
            r.root_new = r.root_u;
            return r;
        }
        Vtx big = r.root_u, small = r.root_v;
        if (size_[big] < size_[small] || (size_[big] == size_[small] && small < big))
            std::swap(big, small);
        parent_[small] = big;
        size_[big] += size_[small];
        rcount_[big] += rcount_[small];
        next_[tail_[big]] = head_[small];
        tail_[big] = tail_[small];
        r.merged = true;
        r.root_new = big;
        return r;
    }

    /// Marks one more member of root's component as recolored.
    void add_rcount(Vtx root) { ++rcount_[root]; }
    /// After a whole-component recoloring every member is in R.
    void saturate_rcount(Vtx root) { rcount_[root] = size_[root]; }

    template <typename F>
    void for_members(Vtx root, F&& f) const {
        for (Vtx v = head_[root]; v != -1; v = next_[v]) f(v);
    }

    std::vector<Vtx> members(Vtx root) const {
        std::vector<Vtx> out;
        out.reserve(size_[root]);
        for_members(root, [&](Vtx v) { out.push_back(v); });
        return out;
    }

    std::vector<Vtx> roots() const {
        std::vector<Vtx> out;
        for (Vtx v = 0; v < n(); ++v)
            if (parent_[v] == v) out.push_back(v);
        return out;
    }

private:
    void check(Vtx v) const {
        if (v < 0 || v >= n())
            throw Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n()) + ")");
    }

    std::vector<Vtx> parent_;
    std::vector<int32_t> size_;
    std::vector<int32_t> rcount_;
    std::vector<Vtx> head_, tail_, next_;
};

/// Arrival-ordered adjacency; algorithms query neighbors "including the
/// newly-arrived edge", so the current edge is appended before any rule
/// that looks at degrees runs.
class Adjacency {
public:
    explicit Adjacency(int32_t n = 0) : adj_(n) {}

    void reset(int32_t n) { adj_.assign(n, {}); }

    void add_edge(const Edge& e) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }

    const std::vector<Vtx>& neighbors(Vtx v) const { return adj_[v]; }

    int32_t distinct_degree(Vtx v) const {
        const auto& a = adj_[v];
        int32_t d = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            bool dup = false;
            for (size_t j = 0; j < i; ++j)
                if (a[j] == a[i]) { dup = true; break; }
            if (!dup) ++d;
        }
        return d;
    }

private:
    std::vector<std::vector<Vtx>> adj_;
};

}  // namespace recolor
