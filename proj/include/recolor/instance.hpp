#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/rational.hpp"

namespace recolor {

constexpr Color kNoColor = 0;
constexpr Color kBasic1 = 1;
constexpr Color kBasic2 = 2;

inline bool is_basic(Color c) { return c == kBasic1 || c == kBasic2; }

/// Parameters of an adaptively generated stream; the edges are produced
/// in lockstep with the algorithm under test.
struct AdaptiveSpec {
    std::string name;  // currently "dominating"
    int32_t n = 0;
    uint64_t seed = 0;
};

struct Instance {
    int32_t n = 0;
    Rational D{1};
    int32_t delta = 1;
    std::optional<int64_t> beta_hint;
    int32_t special_palette_size = 0;
    std::vector<Rational> special_costs;  // empty = all colors cost D
    std::vector<Color> initial_colors;    // values in {1,2}
    std::vector<Edge> edges;
    std::optional<AdaptiveSpec> adversary;
    std::string label;  // family tag used in run ids; not serialized

    bool is_adaptive() const { return adversary.has_value(); }

    Color num_colors() const { return 2 + special_palette_size; }

    Rational color_cost(Color c) const {
        if (is_basic(c)) return Rational(1);
        int32_t idx = c - 3;
        if (idx < 0 || idx >= special_palette_size)
            throw Error("unknown color id " + std::to_string(c));
        if (!special_costs.empty()) return special_costs[idx];
        return D;
    }

    /// Structural checks for static instances: endpoint ranges, degree
    /// bound, color values, special-cost range.
    void validate() const;

    /// Final-graph bipartiteness; returns a violating edge when not.
    std::optional<Edge> find_odd_cycle_edge() const;

    static Instance from_json_file(const std::string& path);
    static Instance from_json_text(const std::string& text);
    std::string to_json_text() const;
    void to_json_file(const std::string& path) const;
};

/// Colors, special marks and the cost ledger shared by every algorithm.
class ColoringState {
public:
    ColoringState() = default;
    ColoringState(const Instance& inst)
        : inst_(&inst),
          colors_(inst.initial_colors),
          special_mark_(inst.n, 0),
          ever_special_color_(inst.n, 0) {}

    Color color(Vtx v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }

    bool special_mark(Vtx v) const { return special_mark_[v] != 0; }
    void mark_special(Vtx v) { special_mark_[v] = 1; }
    int32_t specials_marked() const {
        int32_t c = 0;
        for (auto m : special_mark_) c += m;
        return c;
    }
    bool ever_special_color(Vtx v) const { return ever_special_color_[v] != 0; }
    const std::vector<uint8_t>& ever_special_colors() const { return ever_special_color_; }

    struct RecolorEvent {
        int64_t step;
        Vtx v;
        Color from, to;
        Rational cost;
        char bucket;  // 'm' mirror, 'x' recx, 'p' promote, 'g' greedy
    };

    /// Applies the cost model: the new color's cost is charged only when
    /// the color actually changes.
    Rational recolor(Vtx v, Color c, int64_t step, char bucket) {
        if (c < 1 || c > inst_->num_colors())
            throw Error("unknown color id " + std::to_string(c));
        if (colors_[v] == c) return Rational(0);
        Rational cost = inst_->color_cost(c);
        events_.push_back({step, v, colors_[v], c, cost, bucket});
        colors_[v] = c;
        if (!is_basic(c)) ever_special_color_[v] = 1;
        if (is_basic(c))
            basic_cost_ += cost;
        else
            special_cost_ += cost;
        return cost;
    }

    Rational basic_cost() const { return basic_cost_; }
    Rational special_cost() const { return special_cost_; }
    Rational total_cost() const { return basic_cost_ + special_cost_; }
    const std::vector<RecolorEvent>& events() const { return events_; }

    /// All currently monochromatic edges among the given ones.
    std::vector<Edge> monochromatic_edges(const std::vector<Edge>& edges) const {
        std::vector<Edge> bad;
        for (const Edge& e : edges)
            if (colors_[e.u] == colors_[e.v]) bad.push_back(e);
        return bad;
    }

private:
    const Instance* inst_ = nullptr;
    std::vector<Color> colors_;
    std::vector<uint8_t> special_mark_;
    std::vector<uint8_t> ever_special_color_;
    Rational basic_cost_{0};
    Rational special_cost_{0};
    std::vector<RecolorEvent> events_;
};

}  // namespace recolor
