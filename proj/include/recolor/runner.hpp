#pragma once

#include <memory>
#include <optional>
#include <string>

#include "recolor/algo_b.hpp"
#include "recolor/algo_c.hpp"
#include "recolor/instance.hpp"
#include "recolor/rational.hpp"

namespace recolor {

enum class AlgoKind { A, B, Bhat, C, Greedy };

AlgoKind algo_from_string(const std::string& s);
std::string to_string(AlgoKind k);

struct RunParams {
    AlgoKind algo = AlgoKind::B;
    Rational alpha{1, 2};
    std::optional<Rational> epsilon;  // C only; default derived from beta
    std::optional<int64_t> beta;      // overrides hint / brute force
    FlipPolicy policy = FlipPolicy::SmallerNew;
    uint64_t seed = 0;  // recorded in the result row
    std::string run_id;  // optional explicit id
};

struct RunResult {
    std::string run_id;
    std::string algorithm;
    int64_t n = 0, m = 0;
    Rational D{1};
    Rational alpha{1, 2};
    std::optional<Rational> epsilon;
    std::optional<int64_t> beta;
    uint64_t seed = 0;
    std::string policy;
    Rational cost_total{0}, cost_basic{0}, cost_special{0};
    int64_t opt2_final = 0;
    std::optional<Rational> ratio;  // null when opt2_final == 0
    int64_t colors_used = 0;
    int64_t specials_marked = 0;
    int64_t excess_edges = 0;
    int32_t max_level = 0;
    int64_t violations = 0;

    static std::string csv_header();
    std::string csv_row() const;
    std::string to_json() const;
};

struct RunOutput {
    RunResult result;
    Instance materialized;  // static edges, also for adaptive instances
    std::unique_ptr<AlgoRunner> runner;
};

/// Deterministic single run: materializes adaptive streams in lockstep,
/// enforces per-step validity, computes the offline optimum and the bond
/// bound, and assembles the result row.
RunOutput run_instance(const Instance& inst, const RunParams& params);

/// Per-step JSONL trace with an inline instance header; feeding it back
/// through `audit` re-executes the run and cross-checks every line.
std::string trace_text(const RunOutput& out, const RunParams& params);

/// beta for reporting/audits: explicit override, else exact brute force
/// when every component is small enough, else the instance hint.
std::optional<int64_t> resolve_beta(const Instance& inst, const std::optional<int64_t>& override_beta);

}  // namespace recolor
