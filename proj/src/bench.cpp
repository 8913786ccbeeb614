#include "oddc/bench.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oddc/compile.hpp"
#include "oddc/odd.hpp"

namespace oddc {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    // splitmix64 over a fixed combination; collision-free enough for trials.
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1) + index;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

OrderingHeuristic heuristic_for(const std::string& name, std::uint64_t trial_seed) {
    if (name == "random") return OrderingHeuristic::random(split_seed(trial_seed, 1, 0));
    if (name == "desc") return OrderingHeuristic::descending();
    if (name == "asc") return OrderingHeuristic::ascending();
    throw std::invalid_argument("bench: unknown heuristic '" + name +
                                "' (expected random, desc or asc)");
}

} // namespace

BenchRecord run_bench(std::size_t n, std::uint64_t trials,
                      const std::vector<std::string>& heuristics, std::uint64_t master_seed,
                      Threshold rho, unsigned threads) {
    BenchRecord record;
    record.n = n;
    record.instance_count = instance_space_size(std::vector<std::uint32_t>(n, 2));
    record.bound = size_bound(std::vector<std::uint32_t>(n, 2));
    record.trials = trials;
    record.seed = master_seed;
    for (const auto& name : heuristics) {
        heuristic_for(name, 0); // validate names before spawning work
        record.heuristics.push_back({name, 0.0, 0, 0.0});
    }

    // per (heuristic, trial) results, filled by independent tasks
    std::vector<std::vector<std::uint64_t>> nodes(heuristics.size(),
                                                  std::vector<std::uint64_t>(trials, 0));
    std::vector<std::vector<double>> wall(heuristics.size(), std::vector<double>(trials, 0.0));

    std::atomic<std::uint64_t> next_trial{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t t = next_trial.fetch_add(1);
            if (t >= trials) return;
            std::uint64_t trial_seed = split_seed(master_seed, n, t);
            NaiveBayesModel model = generate_random_model(n, trial_seed);
            for (std::size_t h = 0; h < heuristics.size(); ++h) {
                auto order = make_order(model, heuristic_for(heuristics[h], trial_seed));
                auto result = compile(model, rho, order);
                nodes[h][t] = node_count(result.odd);
                wall[h][t] = result.wall_seconds;
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t h = 0; h < heuristics.size(); ++h) {
        auto& stats = record.heuristics[h];
        std::uint64_t total = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            total += nodes[h][t];
            stats.max_nodes = std::max(stats.max_nodes, nodes[h][t]);
            stats.total_wall_seconds += wall[h][t];
        }
        stats.mean_nodes = trials ? double(total) / double(trials) : 0.0;
    }
    return record;
}

std::string format_bench_table(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "n" << std::setw(14) << "||E||" << std::setw(10)
        << "Bound";
    if (!records.empty())
        for (const auto& h : records.front().heuristics)
            out << std::setw(10) << h.name;
    out << std::setw(8) << "trials" << "wall(s)\n";
    for (const auto& rec : records) {
        double wall = 0.0;
        out << std::left << std::setw(6) << rec.n << std::setw(14) << rec.instance_count
            << std::setw(10) << rec.bound;
        for (const auto& h : rec.heuristics) {
            std::ostringstream cell;
            cell << std::fixed << std::setprecision(1) << h.mean_nodes;
            out << std::setw(10) << cell.str();
            wall += h.total_wall_seconds;
        }
        out << std::setw(8) << rec.trials << std::fixed << std::setprecision(2) << wall
            << "\n";
    }
    return out.str();
}

} // namespace oddc
