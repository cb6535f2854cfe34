#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rwalk/errors.hpp"
#include "rwalk/graph.hpp"

namespace rwalk {

GeometricPoints sample_points(NodeId n, Engine& eng) {
    GeometricPoints pts;
    pts.x.reserve(n);
    pts.y.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
        pts.x.push_back(uniform_unit(eng));
        pts.y.push_back(uniform_unit(eng));
    }
    return pts;
}

Graph geometric_graph(const GeometricPoints& pts, double radius) {
    if (!(radius > 0.0) || !(radius <= std::sqrt(2.0) + 1e-12)) {
        throw std::invalid_argument("radius must lie in (0, sqrt(2)]");
    }
    const NodeId n = static_cast<NodeId>(pts.size());
    if (n < 1) throw std::invalid_argument("point set is empty");

    // Bucket points into square cells of side >= radius, so all neighbors of
    // a point live in its 3x3 cell block. Cell count is capped near n to keep
    // the grid small when the radius is tiny.
    const int max_dim = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    const int grid = std::clamp(static_cast<int>(1.0 / radius), 1, max_dim);
    const auto cell_of = [&](double coord) {
        const int c = static_cast<int>(coord * grid);
        return std::min(c, grid - 1);
    };

    std::vector<std::vector<NodeId>> cells(static_cast<std::size_t>(grid) * grid);
    for (NodeId v = 0; v < n; ++v) {
        cells[static_cast<std::size_t>(cell_of(pts.y[v])) * grid + cell_of(pts.x[v])]
            .push_back(v);
    }

    const double r2 = radius * radius;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 0; v < n; ++v) {
        const int cx = cell_of(pts.x[v]);
        const int cy = cell_of(pts.y[v]);
        for (int dy = -1; dy <= 1; ++dy) {
            const int y = cy + dy;
            if (y < 0 || y >= grid) continue;
            for (int dx = -1; dx <= 1; ++dx) {
                const int x = cx + dx;
                if (x < 0 || x >= grid) continue;
                for (const NodeId u : cells[static_cast<std::size_t>(y) * grid + x]) {
                    if (u <= v) continue;  // each pair once
                    const double ddx = pts.x[u] - pts.x[v];
                    const double ddy = pts.y[u] - pts.y[v];
                    if (ddx * ddx + ddy * ddy <= r2) edges.emplace_back(v, u);
                }
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

RggResult generate_rgg(NodeId n, double radius, Engine& eng, bool require_connected,
                       int max_retries) {
    if (n < 1) throw std::invalid_argument("rgg needs n >= 1");
    for (int attempt = 1;; ++attempt) {
        GeometricPoints pts = sample_points(n, eng);
        Graph g = geometric_graph(pts, radius);
        if (!require_connected || is_connected(g)) {
            return RggResult{std::move(g), std::move(pts), attempt};
        }
        if (attempt > max_retries) {
            throw GenerationFailure(
                attempt, "no connected G(" + std::to_string(n) + ", " +
                             std::to_string(radius) + ") after " +
                             std::to_string(attempt) + " attempts");
        }
    }
}

}  // namespace rwalk
