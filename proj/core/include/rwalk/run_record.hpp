#pragma once

#include <cstdint>
#include <vector>

#include "rwalk/graph.hpp"

namespace rwalk {

/// Sentinel for a partial-cover fraction the walk never reached (only
/// possible in records carried by a CapExceeded error).
inline constexpr std::uint64_t kFractionUnreached = ~std::uint64_t{0};

/// Outcome of one replicate. For a completed run: Σ visit_counts equals
/// cover_steps + 1, every visit count is >= 1, and max_node_load is the
/// largest visit count.
struct RunRecord {
    std::uint64_t cover_steps = 0;
    std::vector<std::uint64_t> partial_cover_steps;  // aligned to the fraction grid
    std::vector<std::int64_t> visit_counts;
    std::int64_t max_node_load = 0;
    NodeId start = 0;
    std::uint32_t covered = 0;
    bool completed = false;
    std::uint32_t replicate_index = 0;
    std::uint64_t seed = 0;
};

}  // namespace rwalk
