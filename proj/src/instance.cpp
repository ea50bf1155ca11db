#include "recolor/instance.hpp"

#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace recolor {

namespace {

Rational rational_from_json(const nlohmann::json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error("field '" + field + "' must be an integer or a rational string like \"3/2\"");
}

nlohmann::json rational_to_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return r.to_string();
}

}  // namespace

void Instance::validate() const {
    if (n < 0) throw Error("n must be >= 0");
    if (D < Rational(1)) throw Error("D must be >= 1");
    if (delta < 1) throw Error("delta must be >= 1");
    if (special_palette_size < 0) throw Error("special_palette_size must be >= 0");
    if (!special_costs.empty() && int32_t(special_costs.size()) != special_palette_size)
        throw Error("special_costs length must equal special_palette_size");
    for (const Rational& c : special_costs)
        if (c < Rational(1) || c > D)
            throw Error("special color cost " + c.to_string() + " outside [1, D]");
    if (int32_t(initial_colors.size()) != n)
        throw Error("initial_colors length must equal n");
    for (Color c : initial_colors)
        if (!is_basic(c)) throw Error("initial colors must be basic (1 or 2)");
    std::vector<std::set<Vtx>> nbrs(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("edge endpoint out of range [0," + std::to_string(n) + ")");
        if (e.u == e.v)
            throw Error("self-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") rejected");
        nbrs[e.u].insert(e.v);
        nbrs[e.v].insert(e.u);
    }
    for (Vtx v = 0; v < n; ++v)
        if (int32_t(nbrs[v].size()) > delta)
            throw Error("vertex " + std::to_string(v) + " exceeds degree bound delta=" +
                        std::to_string(delta));
}

std::optional<Edge> Instance::find_odd_cycle_edge() const {
    std::vector<int8_t> side(n, -1);
    std::vector<std::vector<Vtx>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (Vtx s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vtx> q;
        q.push(s);
        while (!q.empty()) {
            Vtx u = q.front();
            q.pop();
            for (Vtx w : adj[u]) {
                if (side[w] == -1) {
                    side[w] = int8_t(1 - side[u]);
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return Edge{u, w};
                }
            }
        }
    }
    return std::nullopt;
}

Instance Instance::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    static const std::set<std::string> known = {
        "version", "n",            "D",     "delta",     "special_palette_size",
        "special_costs", "initial_colors", "edges", "beta_hint", "adversary",
        "params",  "seed"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) throw Error("unknown instance field '" + it.key() + "'");

    Instance inst;
    if (j.contains("adversary")) {
        AdaptiveSpec spec;
        spec.name = j.at("adversary").get<std::string>();
        const auto& p = j.at("params");
        spec.n = p.at("n").get<int32_t>();
        spec.seed = j.at("seed").get<uint64_t>();
        inst.adversary = spec;
        inst.n = spec.n;
        if (p.contains("D")) inst.D = rational_from_json(p.at("D"), "D");
        if (p.contains("delta")) inst.delta = p.at("delta").get<int32_t>();
        if (p.contains("special_palette_size"))
            inst.special_palette_size = p.at("special_palette_size").get<int32_t>();
        if (p.contains("beta_hint")) inst.beta_hint = p.at("beta_hint").get<int64_t>();
        return inst;
    }

    inst.n = j.at("n").get<int32_t>();
    inst.D = rational_from_json(j.at("D"), "D");
    inst.delta = j.at("delta").get<int32_t>();
    inst.special_palette_size = j.at("special_palette_size").get<int32_t>();
    if (j.contains("beta_hint")) inst.beta_hint = j.at("beta_hint").get<int64_t>();
    if (j.contains("special_costs"))
        for (const auto& c : j.at("special_costs"))
            inst.special_costs.push_back(rational_from_json(c, "special_costs"));
    for (const auto& c : j.at("initial_colors")) inst.initial_colors.push_back(c.get<Color>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("edges entries must be [u,v] pairs");
        inst.edges.push_back({e[0].get<Vtx>(), e[1].get<Vtx>()});
    }
    inst.validate();
    return inst;
}

Instance Instance::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Instance::to_json_text() const {
    nlohmann::json j;
    j["version"] = 1;
    if (adversary) {
        j["adversary"] = adversary->name;
        nlohmann::json p;
        p["n"] = adversary->n;
        p["D"] = rational_to_json(D);
        p["delta"] = delta;
        p["special_palette_size"] = special_palette_size;
        if (beta_hint) p["beta_hint"] = *beta_hint;
        j["params"] = p;
        j["seed"] = adversary->seed;
        return j.dump(2);
    }
    j["n"] = n;
    j["D"] = rational_to_json(D);
    j["delta"] = delta;
    j["special_palette_size"] = special_palette_size;
    if (beta_hint) j["beta_hint"] = *beta_hint;
    if (!special_costs.empty()) {
        nlohmann::json costs = nlohmann::json::array();
        for (const Rational& c : special_costs) costs.push_back(rational_to_json(c));
        j["special_costs"] = costs;
    }
    j["initial_colors"] = initial_colors;
    nlohmann::json es = nlohmann::json::array();
    for (const Edge& e : edges) es.push_back({e.u, e.v});
    j["edges"] = es;
    return j.dump(2);
}

void Instance::to_json_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write instance file " + path);
    out << to_json_text() << "\n";
}

}  // namespace recolor
