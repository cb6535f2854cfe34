#include "rwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rwalk {

namespace {

// Dense Gaussian elimination with partial pivoting; a and b are overwritten,
// the solution lands in b. k <= kMaxOracleNodes, so this stays tiny.
void solve_inplace(std::vector<double>& a, std::vector<double>& b, std::size_t k) {
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < k; ++row) {
            if (std::abs(a[row * k + col]) > std::abs(a[pivot * k + col])) pivot = row;
        }
        if (a[pivot * k + col] == 0.0) {
            throw std::runtime_error("singular cover-time system");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a[col * k + j], a[pivot * k + j]);
            std::swap(b[col], b[pivot]);
        }
        const double inv = 1.0 / a[col * k + col];
        for (std::size_t row = col + 1; row < k; ++row) {
            const double factor = a[row * k + col] * inv;
            if (factor == 0.0) continue;
            for (std::size_t j = col; j < k; ++j) a[row * k + j] -= factor * a[col * k + j];
            b[row] -= factor * b[col];
        }
    }
    for (std::size_t col = k; col-- > 0;) {
        double s = b[col];
        for (std::size_t j = col + 1; j < k; ++j) s -= a[col * k + j] * b[j];
        b[col] = s / a[col * k + col];
    }
}

}  // namespace

std::vector<double> exact_cover_expectations(const Graph& g) {
    const NodeId n = g.node_count();
    if (n > kMaxOracleNodes) {
        throw std::invalid_argument("exact oracle is limited to n <= " +
                                    std::to_string(kMaxOracleNodes));
    }
    if (!is_connected(g)) {
        throw std::domain_error("expected cover time is infinite on a disconnected graph");
    }
    if (n == 1) return {0.0};

    // E[(v, S)] = expected steps to visit all nodes, standing at v with
    // visited set S (v in S). A step from (v, S) lands in (u, S | {u}); the
    // visited set never shrinks, so subsets can be processed in descending
    // mask order, solving one |S| x |S| system per subset.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<double> expect(static_cast<std::size_t>(n) << n, 0.0);
    const auto at = [n](std::uint32_t mask, NodeId v) {
        return static_cast<std::size_t>(mask) * n + v;
    };

    std::vector<NodeId> members;
    std::vector<std::int32_t> index_of(n, -1);
    std::vector<double> a, b;

    for (std::uint32_t mask = full - 1; mask >= 1; --mask) {
        members.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v)) {
                index_of[v] = static_cast<std::int32_t>(members.size());
                members.push_back(v);
            }
        }
        const std::size_t k = members.size();
        a.assign(k * k, 0.0);
        b.assign(k, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            const NodeId v = members[i];
            const double inv_deg = 1.0 / g.degree(v);
            a[i * k + i] = 1.0;
            b[i] = 1.0;
            for (const NodeId u : g.neighbors(v)) {
                if (mask & (std::uint32_t{1} << u)) {
                    a[i * k + index_of[u]] -= inv_deg;
                } else {
                    b[i] += inv_deg * expect[at(mask | (std::uint32_t{1} << u), u)];
                }
            }
        }
        solve_inplace(a, b, k);
        for (std::size_t i = 0; i < k; ++i) expect[at(mask, members[i])] = b[i];
    }

    std::vector<double> result(n);
    for (NodeId v = 0; v < n; ++v) result[v] = expect[at(std::uint32_t{1} << v, v)];
    return result;
}

double exact_cover_expectation(const Graph& g, NodeId start) {
    if (start >= g.node_count()) throw std::invalid_argument("start node out of range");
    return exact_cover_expectations(g)[start];
}

double exact_cover_time(const Graph& g) {
    const auto per_start = exact_cover_expectations(g);
    return *std::max_element(per_start.begin(), per_start.end());
}

}  // namespace rwalk
