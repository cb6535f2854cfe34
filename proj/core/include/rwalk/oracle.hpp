#pragma once

#include <vector>

#include "rwalk/graph.hpp"

namespace rwalk {

/// Largest graph the exact oracle accepts; the state space is n * 2^n.
inline constexpr NodeId kMaxOracleNodes = 20;

/// Exact expected cover steps of the simple random walk from each start
/// node, computed from the absorbing chain on (current node, visited set)
/// states. Throws std::invalid_argument when n > kMaxOracleNodes and
/// std::domain_error when the graph is disconnected (the expectation is
/// infinite).
std::vector<double> exact_cover_expectations(const Graph& g);

/// Expected cover steps of the simple random walk from `start`.
double exact_cover_expectation(const Graph& g, NodeId start);

/// Exact cover time: the maximum expected cover steps over all starts.
double exact_cover_time(const Graph& g);

}  // namespace rwalk
