#include "recolor/algo_c.hpp"

namespace recolor {

namespace {

Instance unit_cost_copy(const Instance& inst, int32_t level_cap) {
    Instance copy = inst;
    copy.special_palette_size = std::max(copy.special_palette_size, 2 * level_cap);
    copy.special_costs.assign(copy.special_palette_size, Rational(1));
    return copy;
}

}  // namespace

Rational CRunner::tau_for(Rational epsilon, Rational alpha, int64_t beta) {
    if (epsilon <= Rational(0) || epsilon > Rational(1))
        throw Error("epsilon must be in (0,1]");
    int q = (Rational(1) / epsilon).ceil();
    Rational pow = Rational::pow2(int(q));
    Rational floor_branch = Rational(4 * beta * beta) / alpha;
    if (pow < floor_branch)
        throw Error("epsilon " + epsilon.to_string() + " too large for beta " +
                    std::to_string(beta) + ": need 2^ceil(1/eps) >= 4*beta^2/alpha = " +
                    floor_branch.to_string());
    return pow;
}

Rational CRunner::default_epsilon(int64_t beta, Rational alpha) {
    Rational floor_branch = Rational(4 * beta * beta) / alpha;
    int k = std::max(1, ceil_log2(floor_branch));
    return Rational(1, k);
}

CRunner::CRunner(const Instance& inst, Rational epsilon, Rational alpha, int64_t beta,
                 FlipPolicy policy)
    : alpha_(alpha),
      epsilon_(epsilon),
      beta_(beta),
      policy_(policy),
      level_cap_(ceil_log2(Rational(std::max<int32_t>(inst.n, 2))) + 2),
      level_(inst.n, 1),
      excess_(level_cap_ + 2),
      arrivals_(inst.n),
      adj_(inst.n) {
    if (alpha <= Rational(0) || alpha >= Rational(1)) throw Error("alpha must be in (0,1)");
    if (beta < 1) throw Error("beta must be >= 1");
    tau_ = tau_for(epsilon, alpha, beta);
    gamma_ = Rational(2 * beta * beta) / (alpha_ * tau_);
    inst_ = unit_cost_copy(inst, level_cap_);
    col_ = ColoringState(inst_);
    levels_.resize(2);
    levels_[1] = std::make_unique<ModeratedSim>(inst_.n, kBasic1, kBasic2, inst_.initial_colors,
                                                tau_, alpha_, policy_);
}

void CRunner::ensure_level(int32_t j) {
    while (int32_t(levels_.size()) <= j) {
        int32_t k = int32_t(levels_.size());
        // Fresh levels start everyone on the pair's high color 2k.
        levels_.push_back(std::make_unique<ModeratedSim>(inst_.n, Color(2 * k - 1), Color(2 * k),
                                                         tau_, alpha_, policy_));
    }
}

void CRunner::mirror(int64_t i, int32_t j, const FeedReport& rep, std::vector<Vtx>& changed) {
    for (Vtx w : rep.flipped_vertices) {
        if (level_[w] != j) continue;
        mirror_cost_ += col_.recolor(w, levels_[j]->sim().color(w), i, 'm');
        changed.push_back(w);
    }
}

void CRunner::step(int64_t i, const Edge& e) {
    adj_.add_edge(e);
    seen_edges_.push_back(e);
    arrivals_[e.u].push_back({e.v, i});
    arrivals_[e.v].push_back({e.u, i});
    std::vector<Vtx> changed;
    if (level_[e.u] != level_[e.v]) {
        routes_.push_back('k');
        check_step_validity(col_, adj_, changed, e);
        return;
    }
    int32_t j = level_[e.u];
    OfferOutcome out = levels_[j]->offer(e);
    if (out.route == Route::Sim) {
        routes_.push_back('s');
        mirror(i, j, out.feed, changed);
    } else {
        routes_.push_back('x');
        excess_[j].push_back(e);
        promote(i, e.u, j + 1, changed);
    }
    check_step_validity(col_, adj_, changed, e);
}

void CRunner::promote(int64_t i, Vtx u, int32_t k, std::vector<Vtx>& changed) {
    if (k > level_cap_)
        throw Error("promote recursion for vertex " + std::to_string(u) + " exceeded level cap " +
                    std::to_string(level_cap_));
    ensure_level(k);
    // Replay, in arrival order, the edges joining u to current level-k
    // vertices. The first rejection abandons this level; edges already
    // admitted stay in sigma^k.
    for (const auto& [w, arrived] : arrivals_[u]) {
        (void)arrived;
        if (level_[w] != k) continue;
        Edge e{u, w};
        OfferOutcome out = levels_[k]->offer(e);
        if (out.route == Route::Sim) {
            mirror(i, k, out.feed, changed);
        } else {
            excess_[k].push_back(e);
            promote(i, u, k + 1, changed);
            return;
        }
    }
    level_[u] = k;
    if (k > max_level_) max_level_ = k;
    Color c = levels_[k]->sim().color(u);
    promote_cost_ += col_.recolor(u, c, i, 'p');
    changed.push_back(u);
}

}  // namespace recolor
