#include "recolor/algo_b.hpp"

#include <algorithm>
#include <set>

namespace recolor {

BRunner::BRunner(const Instance& inst, AugVariant variant, Rational alpha, FlipPolicy policy)
    : inst_(inst),
      variant_(variant),
      num_specials_(variant == AugVariant::B ? inst.delta + 1 : inst.delta),
      col_(inst),
      mod_(inst.n, kBasic1, kBasic2, inst.initial_colors, inst.D, alpha, policy),
      adj_(inst.n) {
    if (alpha <= Rational(0) || alpha >= Rational(1)) throw Error("alpha must be in (0,1)");
    if (inst.special_palette_size < num_specials_)
        throw Error(name() + " needs " + std::to_string(num_specials_) +
                    " special colors; instance declares " +
                    std::to_string(inst.special_palette_size));
}

void BRunner::step(int64_t i, const Edge& e) {
    adj_.add_edge(e);
    std::vector<Vtx> changed;
    OfferOutcome out = mod_.offer(e);
    if (out.route == Route::Sim) {
        routes_.push_back('s');
        for (Vtx w : out.feed.flipped_vertices) {
            if (col_.special_mark(w)) continue;
            mirror_cost_ += col_.recolor(w, mod_.sim().color(w), i, 'm');
            changed.push_back(w);
        }
    } else {
        routes_.push_back('x');
        if (!col_.special_mark(e.u) && !col_.special_mark(e.v)) {
            col_.mark_special(e.u);
            special_order_.push_back(e.u);
        }
    }
    recx(i, e, changed);
    check_step_validity(col_, adj_, changed, e);
    post_step_checks(e, changed);
}

void BRunner::recx(int64_t i, const Edge& e, std::vector<Vtx>& changed) {
    bool su = col_.special_mark(e.u), sv = col_.special_mark(e.v);
    if (su && sv) {
        ++both_special_edges_;
        if (col_.color(e.u) == col_.color(e.v)) fix_vertex(i, e.u, changed);
    } else if (su) {
        if (is_basic(col_.color(e.u))) fix_vertex(i, e.u, changed);
    } else if (sv) {
        if (is_basic(col_.color(e.v))) {
            ++case3_hits_;
            fix_vertex(i, e.v, changed);
        }
    }
}

void BRunner::fix_vertex(int64_t i, Vtx w, std::vector<Vtx>& changed) {
    Color c;
    if (variant_ == AugVariant::B) {
        c = free_special(w);
        if (c == kNoColor)
            throw Error("B: no free special color at vertex " + std::to_string(w) +
                        " (degree over delta?); palette " + std::to_string(num_specials_));
    } else {
        int32_t dstar = 0;
        std::set<Vtx> seen;
        for (Vtx x : adj_.neighbors(w))
            if (col_.special_mark(x) && seen.insert(x).second) ++dstar;
        c = free_special(w);
        if (dstar < inst_.delta) {
            if (c == kNoColor)
                throw Error("Bhat: no free special color with d*<delta at vertex " +
                            std::to_string(w));
        } else if (c == kNoColor) {
            c = free_basic(w);
            if (c == kNoColor)
                throw Error("Bhat: saturated vertex " + std::to_string(w) +
                            " has no free special or basic color");
        }
    }
    recx_cost_ += col_.recolor(w, c, i, 'x');
    changed.push_back(w);
}

Color BRunner::free_special(Vtx w) const {
    std::set<Color> used;
    for (Vtx x : adj_.neighbors(w)) {
        Color c = col_.color(x);
        if (!is_basic(c)) used.insert(c);
    }
    for (Color c = 3; c < 3 + num_specials_; ++c)
        if (!used.count(c)) return c;
    return kNoColor;
}

Color BRunner::free_basic(Vtx w) const {
    bool used1 = false, used2 = false;
    for (Vtx x : adj_.neighbors(w)) {
        used1 |= col_.color(x) == kBasic1;
        used2 |= col_.color(x) == kBasic2;
    }
    if (!used1) return kBasic1;
    if (!used2) return kBasic2;
    return kNoColor;
}

void BRunner::post_step_checks(const Edge& e, const std::vector<Vtx>& changed) {
    (void)e;
    (void)changed;
    const auto& idx = mod_.sim().components();
    Rational bar = mod_.alpha() * mod_.threshold();
    for (Vtx v : special_order_) {
        Color c = col_.color(v);
        if (!is_basic(c)) {
            // Every special-colored vertex sits in a sim component that
            // already accumulated more than alpha*D recolored vertices.
            if (Rational(idx.rcount(idx.find(v))) <= bar) ++fact34_violations_;
        } else {
            if (variant_ == AugVariant::B) {
                ++structure_violations_;  // B never parks specials on basic colors
            } else {
                std::set<Vtx> nbrs;
                for (Vtx x : adj_.neighbors(v)) nbrs.insert(x);
                bool ok = int32_t(nbrs.size()) == inst_.delta;
                for (Vtx x : nbrs) ok &= !is_basic(col_.color(x));
                if (!ok) ++structure_violations_;
            }
        }
    }
}

int64_t BRunner::colors_used() const {
    std::set<Color> used(inst_.initial_colors.begin(), inst_.initial_colors.end());
    for (const auto& ev : col_.events()) used.insert(ev.to);
    return int64_t(used.size());
}

}  // namespace recolor
