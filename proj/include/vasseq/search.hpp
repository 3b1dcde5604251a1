#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "vasseq/errors.hpp"

namespace vasseq
{

inline constexpr std::uint64_t default_node_budget = 10'000'000;

/// Counters collected by bounded searches, reported in machine-readable output.
struct SearchStats
{
    std::uint64_t nodes_explored = 0;
    std::size_t max_antichain = 0;
};

/// Knobs shared by every bounded search.
struct SearchOptions
{
    std::uint64_t node_budget = default_node_budget;
    /// Optional sink; when set, statistics are accumulated into it.
    SearchStats* stats = nullptr;
};

/// Node accounting for one search. Throws ResourceBound once the budget is spent.
class Budget
{
public:
    explicit Budget(const SearchOptions& options) : options_(options) {}

    Budget(const Budget&) = delete;
    Budget& operator=(const Budget&) = delete;

    ~Budget()
    {
        if (options_.stats != nullptr) {
            options_.stats->nodes_explored += used_;
            options_.stats->max_antichain = std::max(options_.stats->max_antichain, max_antichain_);
        }
    }

    void charge(std::uint64_t nodes = 1)
    {
        used_ += nodes;
        if (used_ > options_.node_budget)
            throw ResourceBound(options_.node_budget);
    }

    void observe_antichain(std::size_t size) noexcept { max_antichain_ = std::max(max_antichain_, size); }

    std::uint64_t used() const noexcept { return used_; }

private:
    SearchOptions options_;
    std::uint64_t used_ = 0;
    std::size_t max_antichain_ = 0;
};

} // namespace vasseq
