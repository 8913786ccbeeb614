#include "oddc/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace oddc {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("ordering: malformed ") + what + " '" +
                                    std::string(text) + "'");
    return value;
}

} // namespace

OrderingHeuristic OrderingHeuristic::parse(std::string_view text) {
    if (text == "asc") return ascending();
    if (text == "desc") return descending();
    if (text.starts_with("random:"))
        return random(parse_u64(text.substr(7), "seed"));
    if (text.starts_with("explicit:")) {
        std::vector<std::size_t> perm;
        std::string_view rest = text.substr(9);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            perm.push_back(static_cast<std::size_t>(
                parse_u64(rest.substr(0, comma), "attribute index")));
            rest = comma == std::string_view::npos ? std::string_view{}
                                                   : rest.substr(comma + 1);
        }
        if (perm.empty())
            throw std::invalid_argument("ordering: explicit order must list indices");
        return explicit_order(std::move(perm));
    }
    throw std::invalid_argument(
        "ordering: expected 'random:<seed>', 'desc', 'asc' or 'explicit:<comma-list>', got '" +
        std::string(text) + "'");
}

double evidential_impact(const NaiveBayesModel& model, std::size_t attribute) {
    const auto& row = model.weights.at(attribute);
    if (row.empty()) throw std::invalid_argument("evidential_impact: attribute has no values");
    auto [mn, mx] = std::minmax_element(row.begin(), row.end());
    return *mx - *mn;
}

std::vector<std::size_t> make_order(const NaiveBayesModel& model,
                                    const OrderingHeuristic& heuristic) {
    const std::size_t n = model.attribute_count();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    switch (heuristic.kind) {
    case OrderingHeuristic::Kind::random: {
        std::mt19937_64 rng(heuristic.seed);
        std::shuffle(order.begin(), order.end(), rng);
        return order;
    }
    case OrderingHeuristic::Kind::descending_impact:
    case OrderingHeuristic::Kind::ascending_impact: {
        std::vector<double> impact(n);
        for (std::size_t i = 0; i < n; ++i) impact[i] = evidential_impact(model, i);
        bool desc = heuristic.kind == OrderingHeuristic::Kind::descending_impact;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return desc ? impact[a] > impact[b] : impact[a] < impact[b];
        });
        return order;
    }
    case OrderingHeuristic::Kind::explicit_order: {
        const auto& perm = heuristic.permutation;
        if (perm.size() != n)
            throw std::invalid_argument("ordering: explicit permutation length != n");
        std::vector<bool> seen(n, false);
        for (std::size_t idx : perm) {
            if (idx >= n || seen[idx])
                throw std::invalid_argument("ordering: explicit list is not a permutation");
            seen[idx] = true;
        }
        return perm;
    }
    }
    throw std::logic_error("ordering: unknown heuristic kind");
}

} // namespace oddc
