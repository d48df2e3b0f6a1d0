#pragma once

#include <cstdint>

namespace condalg {

/// Upper bound on the node count of any term or tree built by a normalizer or
/// evaluator. Exceeding it raises BudgetExceeded.
struct NodeBudget {
    static constexpr std::uint64_t default_max_nodes = 1'000'000;
    std::uint64_t max_nodes = default_max_nodes;
};

} // namespace condalg
