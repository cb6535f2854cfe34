#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rwalk/errors.hpp"
#include "rwalk/graph.hpp"
#include "rwalk/policy.hpp"
#include "rwalk/run_record.hpp"

namespace rwalk {

/// Per-node ERWC metric, kept exact as h_units * h + ones. Scores are
/// compared by integer cross-multiplication, so equal scores are true ties.
struct HVal {
    std::int64_t h_units = 0;
    std::int64_t ones = 0;
};

/// Debug record of one step's decision.
struct StepTrace {
    NodeId from = 0;
    std::uint64_t t = 0;                // step count before the move
    std::vector<NodeId> candidates;     // sampled set M, duplicates removed
    std::vector<NodeId> considered;     // after the unvisited filter (ERWC)
    std::vector<double> scores;         // aligned with considered
    NodeId chosen = 0;
};

/// Mutable state of one replicate. Confined to a single thread.
struct WalkState {
    NodeId current = 0;
    std::uint64_t steps = 0;
    std::vector<std::int64_t> visits;    // c(v); the start placement counts
    std::vector<HVal> hval;              // h(v); sized only for ERWC
    std::vector<std::uint8_t> visited;   // i(v)
    NodeId covered_count = 0;
    Engine rng;

    std::vector<NodeId> candidate_buf;   // scratch, not logical state
    std::vector<NodeId> considered_buf;
};

/// Fresh state at `start`: one visit recorded there, and for ERWC the start
/// metric begins at h (no neighbor increments; there is no departed node yet).
WalkState init_walk(const Graph& g, const Policy& policy, NodeId start, Engine rng);

/// Draws d independent uniform samples from N(current) with replacement and
/// stores the distinct values, first occurrence first, into `out`.
void sample_candidates(const Graph& g, NodeId current, int d, Engine& eng,
                       std::vector<NodeId>& out);

/// One step of the given rule. Updates state and returns the node moved to.
/// Throws StuckWalk when the current node has no neighbors.
NodeId step_srw(const Graph& g, WalkState& st, StepTrace* trace = nullptr);
NodeId step_rwc(const Graph& g, WalkState& st, const Policy& policy,
                StepTrace* trace = nullptr);
NodeId step_erwc(const Graph& g, WalkState& st, const Policy& policy,
                 StepTrace* trace = nullptr);
NodeId step(const Graph& g, WalkState& st, const Policy& policy,
            StepTrace* trace = nullptr);

std::vector<double> default_fraction_grid();        // 0.05, 0.10, ..., 1.00
std::uint64_t default_step_cap(NodeId n);           // 10^4 * n

struct RunOptions {
    std::uint64_t step_cap = 0;        // 0 -> default_step_cap(n)
    std::vector<double> fractions;     // empty -> default_fraction_grid()
};

/// Thrown when a walk hits the step cap before covering the graph; carries
/// the partial record (completed = false, unreached fractions set to
/// kFractionUnreached).
class CapExceeded : public Error {
public:
    CapExceeded(std::string what, RunRecord partial)
        : Error(std::move(what)), partial_(std::move(partial)) {}

    const RunRecord& partial() const noexcept { return partial_; }

private:
    RunRecord partial_;
};

using TraceSink = std::function<void(const StepTrace&)>;

/// Runs one replicate of `policy` from `start` until full cover. The walk's
/// random stream is derived entirely from `seed`, so a (graph, policy,
/// start, seed) tuple reproduces bit-identical results anywhere.
RunRecord run_replicate(const Graph& g, const Policy& policy, NodeId start,
                        std::uint64_t seed, const RunOptions& opts = {},
                        const TraceSink& trace_sink = nullptr);

}  // namespace rwalk
