#include "rwalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rwalk/errors.hpp"

namespace rwalk {

Graph Graph::from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }

    Graph g;
    g.n_ = n;
    std::vector<std::uint32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * edges.size());

    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // Edges were inserted in ascending order, so per-node lists are sorted
    // except for the mixed u/v interleave; sort each slice to be safe.
    for (NodeId v = 0; v < n; ++v) {
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    }
    return g;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId v = 0; v < n_; ++v) {
        for (const NodeId u : neighbors(v)) {
            if (v < u) out.emplace_back(v, u);
        }
    }
    return out;
}

std::uint64_t Graph::content_hash() const {
    std::uint64_t h = seed_hash({n_, edge_count()});
    for (NodeId v = 0; v < n_; ++v) {
        for (const NodeId u : neighbors(v)) {
            if (v < u) h = mix64(h + (static_cast<std::uint64_t>(v) << 32 | u));
        }
    }
    return h;
}

double connectivity_radius(NodeId n) {
    if (n < 2) throw std::invalid_argument("connectivity radius needs n >= 2");
    return std::sqrt(std::log(static_cast<double>(n)) /
                     (std::numbers::pi * static_cast<double>(n)));
}

Graph generate_torus(std::uint32_t rows, std::uint32_t cols) {
    if (rows < 3 || cols < 3) {
        throw std::invalid_argument("torus needs rows >= 3 and cols >= 3");
    }
    const auto id = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(2) * rows * cols);
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            edges.emplace_back(id(r, c), id(r, (c + 1) % cols));
            edges.emplace_back(id(r, c), id((r + 1) % rows, c));
        }
    }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph generate_complete(NodeId n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

bool is_connected(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<NodeId> frontier{0};
    seen[0] = 1;
    NodeId reached = 1;
    while (!frontier.empty()) {
        const NodeId v = frontier.back();
        frontier.pop_back();
        for (const NodeId u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                frontier.push_back(u);
            }
        }
    }
    return reached == n;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.node_count();
    s.m = g.edge_count();
    s.mean_degree = Rational::of(static_cast<std::int64_t>(2 * s.m),
                                 static_cast<std::int64_t>(s.n));
    s.min_degree = s.n ? g.degree(0) : 0;
    s.max_degree = s.min_degree;
    for (NodeId v = 1; v < s.n; ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.connected = is_connected(g);
    return s;
}

namespace {

// Splits text into lines without copying; the final line may be unterminated.
struct LineReader {
    std::string_view rest;
    std::size_t line_no = 0;

    bool next(std::string_view& line) {
        if (rest.empty()) return false;
        ++line_no;
        const auto nl = rest.find('\n');
        if (nl == std::string_view::npos) {
            line = rest;
            rest = {};
        } else {
            line = rest.substr(0, nl);
            rest.remove_prefix(nl + 1);
        }
        return true;
    }
};

std::uint64_t parse_field(std::string_view& line, std::size_t line_no, const char* what) {
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data()) {
        throw ParseError(line_no, std::string("expected ") + what);
    }
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    return value;
}

void expect_line_end(std::string_view line, std::size_t line_no) {
    while (!line.empty() && (line.front() == ' ' || line.front() == '\r')) {
        line.remove_prefix(1);
    }
    if (!line.empty()) throw ParseError(line_no, "trailing characters");
}

}  // namespace

Graph load_edge_list(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) throw ParseError(1, "missing header line 'n m'");
    const std::uint64_t n = parse_field(line, reader.line_no, "node count");
    const std::uint64_t m = parse_field(line, reader.line_no, "edge count");
    expect_line_end(line, reader.line_no);
    if (n < 1) throw ParseError(reader.line_no, "node count must be >= 1");
    if (n > 0xffffffffULL) throw ParseError(reader.line_no, "node count too large");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw ParseError(reader.line_no + 1, "unexpected end of input");
        }
        const std::uint64_t u = parse_field(line, reader.line_no, "node id");
        const std::uint64_t v = parse_field(line, reader.line_no, "node id");
        expect_line_end(line, reader.line_no);
        if (u == v) throw ParseError(reader.line_no, "self-loop");
        if (u > v) throw ParseError(reader.line_no, "edge must satisfy u < v");
        if (v >= n) {
            throw ParseError(reader.line_no,
                             "node id " + std::to_string(v) + " out of range");
        }
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    while (reader.next(line)) {
        expect_line_end(line, reader.line_no);  // allow trailing blank lines only
    }

    std::vector<std::pair<NodeId, NodeId>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        dup != sorted.end()) {
        // report the line of the second occurrence
        const auto second = std::find(edges.begin(), edges.end(), *dup);
        const auto again = std::find(second + 1, edges.end(), *dup);
        throw ParseError(2 + static_cast<std::size_t>(again - edges.begin()),
                         "duplicate edge");
    }
    return Graph::from_edges(static_cast<NodeId>(n), std::move(edges));
}

std::string save_edge_list(const Graph& g) {
    std::string out = std::to_string(g.node_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace rwalk
