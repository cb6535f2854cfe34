#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwalk/rational.hpp"
#include "rwalk/rng.hpp"

namespace rwalk {

using NodeId = std::uint32_t;

/// Immutable undirected graph over dense node ids 0..n-1, stored in
/// compressed adjacency form. Neighbor lists are sorted and duplicate-free;
/// construction rejects self-loops, duplicate edges and out-of-range ids,
/// so every instance satisfies the symmetry and edge-count invariants.
/// Safe to share across threads once built.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge set. Pairs may come in any order and orientation;
    /// each undirected edge must appear exactly once.
    static Graph from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const noexcept { return n_; }
    std::uint64_t edge_count() const noexcept { return adj_.size() / 2; }

    std::uint32_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    /// Canonical edge list: ascending (u, v) with u < v.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    /// Stable fingerprint of (n, edges); used to verify that paired
    /// experiment arms saw identical graph instances.
    std::uint64_t content_hash() const;

private:
    NodeId n_ = 0;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<NodeId> adj_;
};

/// Point set in the unit square backing a geometric graph.
struct GeometricPoints {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const noexcept { return x.size(); }
};

struct GraphStats {
    NodeId n = 0;
    std::uint64_t m = 0;
    Rational mean_degree;  // exact 2m/n
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 0;
    bool connected = false;
};

/// Critical radius sqrt(ln(n) / (pi * n)) above which n uniform points in
/// the unit square are asymptotically connected. Requires n >= 2.
double connectivity_radius(NodeId n);

/// 2-D torus on rows*cols nodes, row-major ids, wrap-around mesh edges.
/// 4-regular; requires rows >= 3 and cols >= 3 (smaller sides would fold
/// wrap-around edges onto mesh edges).
Graph generate_torus(std::uint32_t rows, std::uint32_t cols);

Graph generate_complete(NodeId n);

/// n points placed uniformly at random in the unit square.
GeometricPoints sample_points(NodeId n, Engine& eng);

/// Geometric graph on a fixed point set: edge iff euclidean distance <= radius
/// (ties count as edges). Requires 0 < radius <= sqrt(2).
Graph geometric_graph(const GeometricPoints& pts, double radius);

struct RggResult {
    Graph graph;
    GeometricPoints points;
    int attempts = 1;  // point sets drawn, including the successful one
};

/// Random geometric graph G(n, radius). When require_connected is set,
/// resamples the point set until the graph is connected; throws
/// GenerationFailure after max_retries failed attempts.
RggResult generate_rgg(NodeId n, double radius, Engine& eng,
                       bool require_connected = true, int max_retries = 100);

bool is_connected(const Graph& g);
GraphStats stats(const Graph& g);

/// Parses the canonical edge-list format: first line "n m", then m lines
/// "u v" with 0 <= u < v < n. Throws ParseError with a line number.
Graph load_edge_list(std::string_view text);

/// Canonical text form; load_edge_list(save_edge_list(g)) reproduces g and
/// saving again is byte-identical.
std::string save_edge_list(const Graph& g);

}  // namespace rwalk
