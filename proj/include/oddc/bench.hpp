#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddc/model.hpp"
#include "oddc/ordering.hpp"

namespace oddc {

/// One benchmark row: random binary models of a given size compiled under
/// one or more ordering heuristics.
struct BenchRecord {
    struct HeuristicStats {
        std::string name; // "random", "desc", "asc"
        double mean_nodes = 0.0;
        std::uint64_t max_nodes = 0;
        double total_wall_seconds = 0.0;
    };

    std::size_t n = 0;
    std::uint64_t instance_count = 0;
    std::uint64_t bound = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<HeuristicStats> heuristics;
};

/// Fixed seed-splitting rule shared by the bench harness and anything that
/// wants to reproduce a single trial.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// Compile `trials` random all-binary models with n attributes at the
/// given threshold under each named heuristic ("random", "desc", "asc").
/// Trials run as independent tasks; per-trial seeds derive from the master
/// seed by split_seed, so results do not depend on scheduling.
BenchRecord run_bench(std::size_t n, std::uint64_t trials,
                      const std::vector<std::string>& heuristics, std::uint64_t master_seed,
                      Threshold rho = Threshold{0.0}, unsigned threads = 0);

/// Table-1-style text rendering of a set of records.
std::string format_bench_table(const std::vector<BenchRecord>& records);

} // namespace oddc
