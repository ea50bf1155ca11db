#include "recolor/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "recolor/adversaries.hpp"

namespace recolor {

Instance make_family_instance(const std::string& family, int32_t n, Rational D, uint64_t seed) {
    if (family == "path_doubling") {
        PathDoublingConfig cfg;
        cfg.n = n;
        cfg.D = D;
        cfg.seed = seed;
        return gen_path_doubling(cfg);
    }
    if (family == "dominating") return DominatingAdversary::make_instance(n, D, seed);
    Instance inst = gen_bounded_bond(bond_family_from_string(family), n, seed);
    inst.D = D;
    return inst;
}

namespace {

struct Cell {
    AlgoKind algo;
    Rational D;
    std::optional<Rational> epsilon;
    int32_t n;
};

RunResult run_cell_seed(const SweepSpec& spec, const Cell& cell, uint64_t seed) {
    Instance inst = make_family_instance(spec.family, cell.n, cell.D, seed);
    RunParams p;
    p.algo = cell.algo;
    p.alpha = spec.alpha;
    p.policy = spec.policy;
    p.epsilon = cell.epsilon;
    p.seed = seed;
    try {
        return run_instance(inst, p).result;
    } catch (const Error& err) {
        // Partial failures keep the sweep going; the row records them.
        RunResult r;
        r.run_id = to_string(cell.algo) + "-" + spec.family + "-n" + std::to_string(cell.n) +
                   "-D" + cell.D.to_string() + "-s" + std::to_string(seed) + "-error";
        r.algorithm = to_string(cell.algo);
        r.n = cell.n;
        r.D = cell.D;
        r.alpha = spec.alpha;
        r.epsilon = cell.epsilon;
        r.seed = seed;
        r.policy = to_string(spec.policy);
        r.violations = 1;
        (void)err;
        return r;
    }
}

}  // namespace

std::string sweep_csv(const SweepSpec& spec) {
    std::vector<Cell> cells;
    for (AlgoKind algo : spec.algos) {
        bool eps_axis = algo == AlgoKind::C && !spec.epsilons.empty();
        if (eps_axis) {
            for (const Rational& eps : spec.epsilons)
                for (int32_t n : spec.ns)
                    cells.push_back({algo, spec.Ds.empty() ? Rational(16) : spec.Ds.front(), eps, n});
        } else {
            for (const Rational& D : spec.Ds)
                for (int32_t n : spec.ns) cells.push_back({algo, D, std::nullopt, n});
        }
    }

    // Cells are independent deterministic runs; results land in grid
    // order no matter which worker finishes first.
    std::vector<std::vector<RunResult>> results(cells.size());
    int32_t jobs = std::max(1, spec.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            auto& rows = results[i];
            for (int32_t s = 0; s < spec.num_seeds; ++s)
                rows.push_back(run_cell_seed(spec, cells[i], spec.seed_base + uint64_t(s)));
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int32_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << RunResult::csv_header() << "\n";
    for (const auto& rows : results)
        for (const RunResult& r : rows) csv << r.csv_row() << "\n";

    for (size_t i = 0; i < cells.size(); ++i) {
        const Cell& cell = cells[i];
        Rational sum(0), mx(0);
        int64_t cnt = 0, viol = 0;
        for (const RunResult& r : results[i]) {
            viol += r.violations;
            if (!r.ratio) continue;
            sum += *r.ratio;
            mx = std::max(mx, *r.ratio);
            ++cnt;
        }
        for (const char* kind : {"mean", "max"}) {
            RunResult agg;
            agg.run_id = std::string("agg-") + kind + "-" + to_string(cell.algo) + "-" +
                         spec.family + "-n" + std::to_string(cell.n) + "-D" +
                         cell.D.to_string() +
                         (cell.epsilon ? "-e" + cell.epsilon->to_string() : "");
            agg.algorithm = to_string(cell.algo);
            agg.n = cell.n;
            agg.m = 0;
            agg.D = cell.D;
            agg.alpha = spec.alpha;
            agg.epsilon = cell.epsilon;
            agg.seed = spec.seed_base;
            agg.policy = to_string(spec.policy);
            if (cnt > 0)
                agg.ratio = std::string_view(kind) == "mean" ? sum / Rational(cnt) : mx;
            agg.violations = viol;
            csv << agg.csv_row() << "\n";
        }
    }
    return csv.str();
}

std::string plotdata_csv(const std::string& sweep_text, const std::string& axis) {
    std::istringstream in(sweep_text);
    std::string line;
    if (!std::getline(in, line)) throw Error("empty sweep CSV");
    std::vector<std::string> cols;
    {
        std::stringstream h(line);
        std::string c;
        while (std::getline(h, c, ',')) cols.push_back(c);
    }
    auto col = [&](const std::string& name) {
        for (size_t i = 0; i < cols.size(); ++i)
            if (cols[i] == name) return i;
        throw Error("sweep CSV lacks column " + name);
    };
    size_t c_id = col("run_id"), c_algo = col("algorithm"), c_D = col("D"),
           c_eps = col("epsilon"), c_ratio = col("ratio");

    std::map<std::pair<std::string, std::string>, std::pair<Rational, int64_t>> groups;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream row(line);
        std::string c;
        while (std::getline(row, c, ',')) f.push_back(c);
        while (f.size() < cols.size()) f.push_back("");
        if (f[c_id].rfind("agg-", 0) == 0) continue;
        if (f[c_ratio].empty()) continue;
        std::string x;
        if (axis == "D") {
            Rational d = Rational::parse(f[c_D]);
            int lg = ceil_log2(d);
            if (Rational::pow2(lg) != d)
                throw Error("plotdata: D=" + f[c_D] + " is not a power of two");
            x = std::to_string(lg);
        } else if (axis == "epsilon") {
            if (f[c_eps].empty()) continue;
            x = f[c_eps];
        } else {
            throw Error("plotdata axis must be D or epsilon");
        }
        auto& g = groups[{f[c_algo], x}];
        g.first += Rational::parse(f[c_ratio]);
        ++g.second;
    }
    std::ostringstream out;
    out << "series,x,mean_ratio\n";
    for (const auto& [key, val] : groups)
        out << key.first << ',' << key.second << ','
            << (val.first / Rational(val.second)).to_string() << "\n";
    return out.str();
}

}  // namespace recolor
