#pragma once

#include <string>
#include <vector>

#include "recolor/runner.hpp"

namespace recolor {

/// One grid cell per (algo, D or epsilon, n); seeds are the rows inside
/// a cell, and per-cell mean/max aggregate rows follow the raw rows.
struct SweepSpec {
    std::string family = "path_doubling";
    std::vector<AlgoKind> algos{AlgoKind::B};
    std::vector<int32_t> ns{512};
    std::vector<Rational> Ds{Rational(16)};        // ignored by C unless epsilons empty
    std::vector<Rational> epsilons;                // used for C cells when non-empty
    Rational alpha{1, 2};
    FlipPolicy policy = FlipPolicy::SmallerNew;
    int32_t num_seeds = 1;
    uint64_t seed_base = 1;
    int32_t jobs = 1;
};

Instance make_family_instance(const std::string& family, int32_t n, Rational D, uint64_t seed);

std::string sweep_csv(const SweepSpec& spec);

/// Reshapes a sweep CSV into (series, x, mean_ratio) rows; x is log2(D)
/// for the D axis and epsilon otherwise.
std::string plotdata_csv(const std::string& sweep_text, const std::string& axis);

}  // namespace recolor
