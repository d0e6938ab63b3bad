#pragma once

#include <optional>
#include <vector>

#include "vtc/hom_search.hpp"

namespace vtc {

struct ExactCoverResult {
    SearchStatus status;  // found, none (definitive), or inconclusive (budget)
    std::optional<std::vector<int>> cover;  // indices of the chosen sets
    std::uint64_t nodes = 0;
};

/// Exact cover of {0..universe-1} by some of the given sets, by backtracking
/// with fewest-candidates-first element selection. Deterministic.
ExactCoverResult exact_cover(int universe,
                             const std::vector<std::vector<int>>& sets,
                             Budget* budget = nullptr);

}  // namespace vtc
