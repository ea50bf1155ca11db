#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/instance.hpp"
#include "recolor/rational.hpp"
#include "recolor/rng.hpp"

namespace recolor {

/// Number of doubling phases for special-color cost D:
/// ceil(log2 D - log2 log2 D). Computed in floating point once per
/// instance; the suite values {4,16,64,256} are nowhere near a rounding
/// boundary.
int path_doubling_phases(const Rational& D);

struct PathDoublingConfig {
    int32_t n = 0;
    Rational D{16};
    uint64_t seed = 0;
    std::optional<int> phases;  // overrides the formula
};

/// Random-endpoint path doubling: i.i.d. uniform initial colors, then H
/// phases; phase h joins consecutive path pairs at uniformly chosen
/// endpoints, leaving paths of 2^h vertices.
Instance gen_path_doubling(const PathDoublingConfig& cfg);

enum class BondFamily { Forest, EvenCycles, Ladders };

BondFamily bond_family_from_string(const std::string& s);
std::string to_string(BondFamily f);

/// Uniform random tree / disjoint even cycles / 2xM ladder with shuffled
/// edge arrivals and a perturbed proper initial coloring.
Instance gen_bounded_bond(BondFamily family, int32_t n, uint64_t seed);

/// What the adaptive adversary may inspect between phases.
struct AlgoView {
    const std::vector<Color>* colors = nullptr;
    const std::vector<uint8_t>* ever_special = nullptr;
};

/// Phase-by-phase matcher of same-size active components with a common
/// dominating color. Matchings are emitted class-consistently so the
/// final graph stays bipartite, with same-colored vertices paired first.
class DominatingAdversary {
public:
    DominatingAdversary(int32_t n, uint64_t seed);

    const std::vector<Color>& initial_colors() const { return initial_colors_; }

    /// Next batch of edges; empty means the construction is done.
    std::vector<Edge> next_phase(const AlgoView& view);

    int32_t phases_done() const { return phases_done_; }
    int64_t mono_emitted() const { return mono_emitted_; }
    /// Sum over pairs of the per-pair floor ceil(min(cX,cY)/2).
    int64_t mono_guaranteed() const { return mono_guaranteed_; }
    int64_t pairs_matched() const { return pairs_matched_; }

    static Instance make_instance(int32_t n, Rational D, uint64_t seed);

private:
    struct CompStats {
        Vtx root;
        int32_t size, basic, c1, c2;
    };
    void match_pair(Vtx x_root, Vtx y_root, Color c, const AlgoView& view,
                    std::vector<Edge>& out);

    int32_t n_;
    Rng rng_;
    std::vector<Color> initial_colors_;
    ComponentIndex comps_;
    std::vector<int8_t> cls_;  // bipartition class per vertex
    bool done_ = false;
    int32_t phases_done_ = 0;
    int64_t mono_emitted_ = 0;
    int64_t mono_guaranteed_ = 0;
    int64_t pairs_matched_ = 0;
};

/// Random bipartite instance for oracle cross-checks; n <= 12 expected.
Instance gen_random_bipartite(int32_t n, uint64_t seed);

/// Random (not necessarily bipartite) graph plus a random partition of
/// each component into connected parts; for the bond-lemma checks.
struct RandomPartitioned {
    Instance inst;                // initial_colors are filler
    std::vector<int32_t> parts;   // part id per vertex
    int32_t num_parts = 0;
};
RandomPartitioned gen_random_partitioned(int32_t n, uint64_t seed);

}  // namespace recolor
