#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "rwalk/graph.hpp"
#include "rwalk/rng.hpp"

namespace testsupport {

inline rwalk::Graph make_path(rwalk::NodeId n) {
    std::vector<std::pair<rwalk::NodeId, rwalk::NodeId>> edges;
    for (rwalk::NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return rwalk::Graph::from_edges(n, std::move(edges));
}

inline rwalk::Graph make_cycle(rwalk::NodeId n) {
    std::vector<std::pair<rwalk::NodeId, rwalk::NodeId>> edges;
    for (rwalk::NodeId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return rwalk::Graph::from_edges(n, std::move(edges));
}

// Star with the hub at node 0 and `leaves` leaf nodes.
inline rwalk::Graph make_star(rwalk::NodeId leaves) {
    std::vector<std::pair<rwalk::NodeId, rwalk::NodeId>> edges;
    for (rwalk::NodeId v = 1; v <= leaves; ++v) edges.emplace_back(rwalk::NodeId{0}, v);
    return rwalk::Graph::from_edges(leaves + 1, std::move(edges));
}

// Connected random graph: a random spanning tree plus each remaining pair
// with probability p.
inline rwalk::Graph random_connected_graph(rwalk::Engine& eng, rwalk::NodeId min_n,
                                           rwalk::NodeId max_n, double p = 0.3) {
    const auto n = static_cast<rwalk::NodeId>(
        min_n + rwalk::uniform_below(eng, max_n - min_n + 1));
    std::vector<std::pair<rwalk::NodeId, rwalk::NodeId>> edges;
    std::vector<std::uint8_t> in_tree(static_cast<std::size_t>(n) * n, 0);
    const auto mark = [&](rwalk::NodeId u, rwalk::NodeId v) {
        in_tree[static_cast<std::size_t>(u) * n + v] = 1;
        in_tree[static_cast<std::size_t>(v) * n + u] = 1;
    };
    for (rwalk::NodeId v = 1; v < n; ++v) {
        const auto u = static_cast<rwalk::NodeId>(rwalk::uniform_below(eng, v));
        edges.emplace_back(u, v);
        mark(u, v);
    }
    for (rwalk::NodeId u = 0; u < n; ++u) {
        for (rwalk::NodeId v = u + 1; v < n; ++v) {
            if (!in_tree[static_cast<std::size_t>(u) * n + v] &&
                rwalk::uniform_unit(eng) < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return rwalk::Graph::from_edges(n, std::move(edges));
}

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;   // sample standard deviation
    double se = 0.0;       // standard error of the mean
    std::size_t count = 0;
};

template <typename T>
MeanStd mean_std(const std::vector<T>& values) {
    MeanStd out;
    out.count = values.size();
    if (values.empty()) return out;
    double sum = 0.0;
    for (const T v : values) sum += static_cast<double>(v);
    out.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (const T v : values) {
        const double d = static_cast<double>(v) - out.mean;
        ss += d * d;
    }
    if (values.size() > 1) {
        out.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
        out.se = out.stddev / std::sqrt(static_cast<double>(values.size()));
    }
    return out;
}

// 3-sigma binomial check: was `hits` out of `trials` compatible with
// probability p?
inline bool binomial_3sigma(std::uint64_t hits, std::uint64_t trials, double p) {
    const double expected = p * static_cast<double>(trials);
    const double sigma = std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
    return std::abs(static_cast<double>(hits) - expected) <= 3.0 * sigma;
}

}  // namespace testsupport
