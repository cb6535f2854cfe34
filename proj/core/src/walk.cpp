#include "rwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rwalk {

namespace {

void require_neighbors(const Graph& g, NodeId v) {
    if (g.degree(v) == 0) {
        throw StuckWalk("walk stuck at isolated node " + std::to_string(v));
    }
}

// Records arrival at `next`: step counter, visit count, cover bookkeeping.
void record_move(WalkState& st, NodeId next) {
    ++st.steps;
    st.current = next;
    ++st.visits[next];
    if (!st.visited[next]) {
        st.visited[next] = 1;
        ++st.covered_count;
    }
}

// Uniform choice among score minimizers. cmp(a, b) three-way compares the
// scores of nodes a and b. Draws from the engine only on exact ties, so a
// unique minimizer costs no randomness.
template <typename Cmp3>
NodeId argmin_uniform(std::span<const NodeId> candidates, Engine& eng, Cmp3 cmp) {
    NodeId best = candidates[0];
    std::uint64_t ties = 1;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const int c = cmp(candidates[i], best);
        if (c < 0) {
            best = candidates[i];
            ties = 1;
        } else if (c == 0) {
            ++ties;
            if (uniform_below(eng, ties) == 0) best = candidates[i];
        }
    }
    return best;
}

// RWC score (c(u)+1)/delta(u), compared without division.
int cmp_rwc_scores(const Graph& g, const WalkState& st, NodeId a, NodeId b) {
    const auto lhs = static_cast<unsigned __int128>(st.visits[a] + 1) * g.degree(b);
    const auto rhs = static_cast<unsigned __int128>(st.visits[b] + 1) * g.degree(a);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// ERWC score h(u)/delta(u) with h(u) = h_units*h + ones and h = num/den:
// compare (h_units*num + ones*den) / (den*delta) by cross-multiplication.
int cmp_erwc_scores(const Graph& g, const WalkState& st, const Rational& h, NodeId a,
                    NodeId b) {
    const auto va = static_cast<__int128>(st.hval[a].h_units) * h.num +
                    static_cast<__int128>(st.hval[a].ones) * h.den;
    const auto vb = static_cast<__int128>(st.hval[b].h_units) * h.num +
                    static_cast<__int128>(st.hval[b].ones) * h.den;
    const auto lhs = va * g.degree(b);
    const auto rhs = vb * g.degree(a);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

double hval_as_double(const HVal& v, const Rational& h) {
    return static_cast<double>(v.h_units) * h.value() + static_cast<double>(v.ones);
}

void fill_trace(StepTrace* trace, const WalkState& st, NodeId from,
                std::span<const NodeId> candidates, std::span<const NodeId> considered) {
    if (!trace) return;
    trace->from = from;
    trace->t = st.steps;
    trace->candidates.assign(candidates.begin(), candidates.end());
    trace->considered.assign(considered.begin(), considered.end());
    trace->scores.clear();
}

}  // namespace

WalkState init_walk(const Graph& g, const Policy& policy, NodeId start, Engine rng) {
    policy.validate();
    const NodeId n = g.node_count();
    if (start >= n) throw std::invalid_argument("start node out of range");

    WalkState st;
    st.current = start;
    st.steps = 0;
    st.visits.assign(n, 0);
    st.visits[start] = 1;
    st.visited.assign(n, 0);
    st.visited[start] = 1;
    st.covered_count = 1;
    if (policy.kind == PolicyKind::Erwc) {
        st.hval.assign(n, HVal{});
        st.hval[start].h_units = 1;
    }
    st.rng = std::move(rng);
    return st;
}

void sample_candidates(const Graph& g, NodeId current, int d, Engine& eng,
                       std::vector<NodeId>& out) {
    require_neighbors(g, current);
    out.clear();
    const auto nbrs = g.neighbors(current);
    for (int i = 0; i < d; ++i) {
        const NodeId u = nbrs[uniform_below(eng, nbrs.size())];
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
}

NodeId step_srw(const Graph& g, WalkState& st, StepTrace* trace) {
    require_neighbors(g, st.current);
    const NodeId from = st.current;
    const auto nbrs = g.neighbors(from);
    const NodeId next = nbrs[uniform_below(st.rng, nbrs.size())];
    if (trace) {
        fill_trace(trace, st, from, {&next, 1}, {&next, 1});
        trace->chosen = next;
    }
    record_move(st, next);
    return next;
}

NodeId step_rwc(const Graph& g, WalkState& st, const Policy& policy, StepTrace* trace) {
    const NodeId from = st.current;
    sample_candidates(g, from, policy.d, st.rng, st.candidate_buf);
    const NodeId next = argmin_uniform(
        st.candidate_buf, st.rng,
        [&](NodeId a, NodeId b) { return cmp_rwc_scores(g, st, a, b); });
    if (trace) {
        fill_trace(trace, st, from, st.candidate_buf, st.candidate_buf);
        for (const NodeId u : st.candidate_buf) {
            trace->scores.push_back(static_cast<double>(st.visits[u] + 1) / g.degree(u));
        }
        trace->chosen = next;
    }
    record_move(st, next);
    return next;
}

NodeId step_erwc(const Graph& g, WalkState& st, const Policy& policy, StepTrace* trace) {
    const NodeId from = st.current;
    sample_candidates(g, from, policy.d, st.rng, st.candidate_buf);

    // Restrict to unvisited candidates when any exist; otherwise keep all.
    st.considered_buf.clear();
    for (const NodeId u : st.candidate_buf) {
        if (!st.visited[u]) st.considered_buf.push_back(u);
    }
    const std::vector<NodeId>& considered =
        st.considered_buf.empty() ? st.candidate_buf : st.considered_buf;

    const NodeId next = argmin_uniform(
        considered, st.rng,
        [&](NodeId a, NodeId b) { return cmp_erwc_scores(g, st, policy.h, a, b); });

    if (trace) {
        fill_trace(trace, st, from, st.candidate_buf, considered);
        for (const NodeId u : considered) {
            trace->scores.push_back(hval_as_double(st.hval[u], policy.h) / g.degree(u));
        }
        trace->chosen = next;
    }

    // Reinforce: +h at the chosen node, +1 at the departed node's other
    // neighbors. The metric is read before any of these updates.
    st.hval[next].h_units += 1;
    for (const NodeId k : g.neighbors(from)) {
        if (k != next) st.hval[k].ones += 1;
    }
    record_move(st, next);
    return next;
}

NodeId step(const Graph& g, WalkState& st, const Policy& policy, StepTrace* trace) {
    switch (policy.kind) {
        case PolicyKind::Srw:
            return step_srw(g, st, trace);
        case PolicyKind::Rwc:
            return step_rwc(g, st, policy, trace);
        case PolicyKind::Erwc:
            return step_erwc(g, st, policy, trace);
    }
    throw std::invalid_argument("unknown policy kind");
}

std::vector<double> default_fraction_grid() {
    std::vector<double> grid;
    grid.reserve(20);
    for (int k = 1; k <= 20; ++k) grid.push_back(static_cast<double>(k) / 20.0);
    return grid;
}

std::uint64_t default_step_cap(NodeId n) { return 10'000ULL * n; }

namespace {

// Node-count thresholds for the fraction grid, ordered so the scan pointer
// only moves forward as coverage grows.
struct CoverThresholds {
    std::vector<std::pair<NodeId, std::size_t>> by_count;  // (threshold, grid index)
    std::size_t next = 0;

    CoverThresholds(std::span<const double> fractions, NodeId n) {
        by_count.reserve(fractions.size());
        for (std::size_t j = 0; j < fractions.size(); ++j) {
            const double f = fractions[j];
            if (!(f > 0.0) || f > 1.0) {
                throw std::invalid_argument("cover fractions must lie in (0, 1]");
            }
            // small backoff keeps ceil() immune to representation noise
            const auto raw = static_cast<std::uint64_t>(
                std::ceil(f * static_cast<double>(n) - 1e-9));
            by_count.emplace_back(
                static_cast<NodeId>(std::clamp<std::uint64_t>(raw, 1, n)), j);
        }
        std::sort(by_count.begin(), by_count.end());
    }

    void advance(NodeId covered, std::uint64_t t, std::vector<std::uint64_t>& out) {
        while (next < by_count.size() && by_count[next].first <= covered) {
            out[by_count[next].second] = t;
            ++next;
        }
    }
};

}  // namespace

RunRecord run_replicate(const Graph& g, const Policy& policy, NodeId start,
                        std::uint64_t seed, const RunOptions& opts,
                        const TraceSink& trace_sink) {
    const NodeId n = g.node_count();
    const std::vector<double> fractions =
        opts.fractions.empty() ? default_fraction_grid() : opts.fractions;
    const std::uint64_t cap = opts.step_cap ? opts.step_cap : default_step_cap(n);
    if (cap < 1) throw std::invalid_argument("step cap must be >= 1");

    WalkState st = init_walk(g, policy, start, make_engine(seed));

    RunRecord rec;
    rec.start = start;
    rec.seed = seed;
    rec.partial_cover_steps.assign(fractions.size(), kFractionUnreached);

    CoverThresholds thresholds(fractions, n);
    thresholds.advance(st.covered_count, 0, rec.partial_cover_steps);

    StepTrace trace;
    StepTrace* trace_ptr = trace_sink ? &trace : nullptr;

    while (st.covered_count < n) {
        if (st.steps >= cap) {
            rec.cover_steps = st.steps;
            rec.covered = st.covered_count;
            rec.completed = false;
            rec.max_node_load = *std::max_element(st.visits.begin(), st.visits.end());
            rec.visit_counts = std::move(st.visits);
            throw CapExceeded("cover incomplete after " + std::to_string(st.steps) +
                                  " steps (" + std::to_string(rec.covered) + "/" +
                                  std::to_string(n) + " nodes)",
                              std::move(rec));
        }
        step(g, st, policy, trace_ptr);
        if (trace_sink) trace_sink(trace);
        thresholds.advance(st.covered_count, st.steps, rec.partial_cover_steps);
    }

    rec.cover_steps = st.steps;
    rec.covered = st.covered_count;
    rec.completed = true;
    rec.max_node_load = *std::max_element(st.visits.begin(), st.visits.end());
    rec.visit_counts = std::move(st.visits);
    return rec;
}

}  // namespace rwalk
