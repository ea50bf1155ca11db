#include "recolor/runner.hpp"

#include <sstream>

#include "json.hpp"
#include "recolor/adversaries.hpp"
#include "recolor/audit.hpp"
#include "recolor/oracles.hpp"

namespace recolor {

AlgoKind algo_from_string(const std::string& s) {
    if (s == "A") return AlgoKind::A;
    if (s == "B") return AlgoKind::B;
    if (s == "Bhat") return AlgoKind::Bhat;
    if (s == "C") return AlgoKind::C;
    if (s == "greedy") return AlgoKind::Greedy;
    throw Error("unknown algorithm '" + s + "' (expected A, B, Bhat, C or greedy)");
}

std::string to_string(AlgoKind k) {
    switch (k) {
        case AlgoKind::A: return "A";
        case AlgoKind::B: return "B";
        case AlgoKind::Bhat: return "Bhat";
        case AlgoKind::C: return "C";
        default: return "greedy";
    }
}

std::optional<int64_t> resolve_beta(const Instance& inst,
                                    const std::optional<int64_t>& override_beta) {
    if (override_beta) return override_beta;
    try {
        return largest_bond_bruteforce(inst.n, inst.edges).beta;
    } catch (const Error&) {
        return inst.beta_hint;
    }
}

namespace {

std::unique_ptr<AlgoRunner> make_runner(const Instance& inst, const RunParams& p) {
    switch (p.algo) {
        case AlgoKind::A:
            return std::make_unique<ARunner>(inst, p.policy);
        case AlgoKind::B:
            return std::make_unique<BRunner>(inst, AugVariant::B, p.alpha, p.policy);
        case AlgoKind::Bhat:
            return std::make_unique<BRunner>(inst, AugVariant::Bhat, p.alpha, p.policy);
        case AlgoKind::Greedy:
            return std::make_unique<GreedyRunner>(inst);
        case AlgoKind::C: {
            auto beta = resolve_beta(inst, p.beta);
            if (!beta) throw Error("algorithm C needs a bond bound: give --beta or a beta_hint");
            int64_t bound = std::max<int64_t>(1, *beta);
            Rational eps = p.epsilon ? *p.epsilon : CRunner::default_epsilon(bound, p.alpha);
            return std::make_unique<CRunner>(inst, eps, p.alpha, bound, p.policy);
        }
    }
    throw Error("unreachable");
}

std::string default_run_id(const Instance& inst, const RunParams& p) {
    std::ostringstream id;
    id << to_string(p.algo);
    if (!inst.label.empty()) id << "-" << inst.label;
    id << "-n" << inst.n << "-D" << inst.D.to_string() << "-s" << p.seed;
    return id.str();
}

}  // namespace

RunOutput run_instance(const Instance& inst, const RunParams& params) {
    RunOutput out;
    out.materialized = inst;
    out.materialized.adversary.reset();

    if (inst.is_adaptive()) {
        if (inst.adversary->name != "dominating")
            throw Error("unknown adversary '" + inst.adversary->name + "'");
        DominatingAdversary gen(inst.adversary->n, inst.adversary->seed);
        out.materialized.initial_colors = gen.initial_colors();
        out.materialized.edges.clear();
        // The final graph is unknown up front, so the bond bound must come
        // from the declared hint rather than a brute-force pass.
        RunParams ctor_params = params;
        if (!ctor_params.beta) ctor_params.beta = inst.beta_hint;
        out.runner = make_runner(out.materialized, ctor_params);
        AlgoView view{&out.runner->coloring().colors(),
                      &out.runner->coloring().ever_special_colors()};
        int64_t i = 0;
        for (;;) {
            std::vector<Edge> batch = gen.next_phase(view);
            if (batch.empty()) break;
            for (const Edge& e : batch) {
                out.materialized.edges.push_back(e);
                out.runner->step(i++, e);
            }
        }
        out.materialized.validate();
    } else {
        inst.validate();
        if (auto bad = inst.find_odd_cycle_edge())
            throw Error("instance is not bipartite: edge (" + std::to_string(bad->u) + "," +
                        std::to_string(bad->v) + ") closes an odd cycle");
        out.runner = make_runner(inst, params);
        int64_t i = 0;
        for (const Edge& e : inst.edges) out.runner->step(i++, e);
    }

    const Instance& mat = out.materialized;
    AlgoRunner& r = *out.runner;

    RunResult& res = out.result;
    res.run_id = params.run_id.empty() ? default_run_id(mat, params) : params.run_id;
    res.algorithm = r.name();
    res.n = mat.n;
    res.m = int64_t(mat.edges.size());
    res.D = mat.D;
    res.alpha = params.alpha;
    res.seed = params.seed;
    res.policy = params.algo == AlgoKind::Greedy ? "" : to_string(params.policy);
    if (params.algo == AlgoKind::C) {
        auto beta = resolve_beta(mat, params.beta);
        res.epsilon = params.epsilon ? *params.epsilon
                                     : CRunner::default_epsilon(beta.value_or(1), params.alpha);
    }
    res.beta = resolve_beta(mat, params.beta);
    res.cost_total = r.coloring().total_cost();
    res.cost_basic = r.coloring().basic_cost();
    res.cost_special = r.coloring().special_cost();
    res.opt2_final = opt2_exact(mat).value;
    if (res.opt2_final > 0) res.ratio = res.cost_total / Rational(res.opt2_final);
    res.colors_used = r.colors_used();
    res.specials_marked = r.specials_marked();
    res.excess_edges = r.excess_edges();
    res.max_level = r.max_level();

    // Full-stream validation backs the incremental per-step checks, and
    // the cost ledger must reconcile exactly.
    int64_t final_mono = int64_t(r.coloring().monochromatic_edges(mat.edges).size());
    CostReport costs = audit_costs(r, mat);
    res.violations =
        r.validity_violations() + r.extra_violations() + final_mono + costs.violations();
    return out;
}

std::string RunResult::csv_header() {
    return "run_id,algorithm,n,m,D,alpha,epsilon,beta,seed,policy,cost_total,cost_basic,"
           "cost_special,opt2_final,ratio,colors_used,specials_marked,excess_edges,max_level,"
           "violations";
}

std::string RunResult::csv_row() const {
    std::ostringstream row;
    row << run_id << ',' << algorithm << ',' << n << ',' << m << ',' << D.to_string() << ','
        << alpha.to_string() << ',' << (epsilon ? epsilon->to_string() : "") << ','
        << (beta ? std::to_string(*beta) : "") << ',' << seed << ',' << policy << ','
        << cost_total.to_string() << ',' << cost_basic.to_string() << ','
        << cost_special.to_string() << ',' << opt2_final << ','
        << (ratio ? ratio->to_string() : "") << ',' << colors_used << ',' << specials_marked
        << ',' << excess_edges << ',' << max_level << ',' << violations;
    return row.str();
}

std::string RunResult::to_json() const {
    nlohmann::json j;
    j["run_id"] = run_id;
    j["algorithm"] = algorithm;
    j["n"] = n;
    j["m"] = m;
    j["D"] = D.to_string();
    j["alpha"] = alpha.to_string();
    if (epsilon) j["epsilon"] = epsilon->to_string();
    if (beta) j["beta"] = *beta;
    j["seed"] = seed;
    j["policy"] = policy;
    j["cost_total"] = cost_total.to_string();
    j["cost_basic"] = cost_basic.to_string();
    j["cost_special"] = cost_special.to_string();
    j["opt2_final"] = opt2_final;
    if (ratio) j["ratio"] = ratio->to_string();
    j["colors_used"] = colors_used;
    j["specials_marked"] = specials_marked;
    j["excess_edges"] = excess_edges;
    j["max_level"] = max_level;
    j["violations"] = violations;
    return j.dump();
}

std::string trace_text(const RunOutput& out, const RunParams& params) {
    std::ostringstream os;
    {
        nlohmann::json h;
        h["type"] = "header";
        h["algo"] = to_string(params.algo);
        h["alpha"] = params.alpha.to_string();
        if (params.epsilon) h["epsilon"] = params.epsilon->to_string();
        if (params.beta) h["beta"] = *params.beta;
        h["policy"] = to_string(params.policy);
        h["seed"] = params.seed;
        h["instance"] = nlohmann::json::parse(out.materialized.to_json_text());
        os << h.dump() << "\n";
    }
    const auto& events = out.runner->coloring().events();
    const auto& routes = out.runner->routes();
    size_t ev = 0;
    for (size_t i = 0; i < out.materialized.edges.size(); ++i) {
        nlohmann::json s;
        s["type"] = "step";
        s["i"] = i;
        s["e"] = {out.materialized.edges[i].u, out.materialized.edges[i].v};
        s["route"] = std::string(1, routes[i]);
        nlohmann::json recs = nlohmann::json::array();
        while (ev < events.size() && events[ev].step == int64_t(i)) {
            recs.push_back({events[ev].v, events[ev].from, events[ev].to,
                            events[ev].cost.to_string(), std::string(1, events[ev].bucket)});
            ++ev;
        }
        s["recolor"] = recs;
        os << s.dump() << "\n";
    }
    {
        nlohmann::json t;
        t["type"] = "summary";
        t["result"] = nlohmann::json::parse(out.result.to_json());
        os << t.dump() << "\n";
    }
    return os.str();
}

}  // namespace recolor
