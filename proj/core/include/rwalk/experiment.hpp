#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rwalk/graph.hpp"
#include "rwalk/metrics.hpp"
#include "rwalk/policy.hpp"
#include "rwalk/rational.hpp"

namespace rwalk {

/// Graph family plus parameters; the recipe an experiment realizes its graph
/// instances from.
struct GraphSpec {
    enum class Family { Rgg, Torus, Complete, EdgeList };

    Family family = Family::Rgg;
    NodeId n = 0;              // rgg, complete
    double radius = 0.0;       // rgg: explicit radius wins when > 0
    double radius_mult = 2.0;  // rgg: radius = radius_mult * connectivity_radius(n)
    std::uint32_t rows = 0;    // torus
    std::uint32_t cols = 0;
    std::string path;          // edge list file
    int max_retries = 100;

    /// True when every realization is the same graph (all but Rgg).
    bool fixed() const { return family != Family::Rgg; }

    double effective_radius() const;
    std::string label() const;
    void validate() const;
};

/// Builds one graph instance. For random families the instance is a pure
/// function of (spec, seed).
Graph build_graph(const GraphSpec& spec, std::uint64_t seed);

struct Replication {
    std::uint32_t graphs = 1;           // instances (Rgg) or repeats (fixed)
    std::uint32_t starts_per_graph = 1; // distinct uniform start nodes
    std::uint32_t runs_per_start = 1;
};

struct ExperimentConfig {
    GraphSpec graph;
    std::vector<Policy> policies;
    Replication replication;
    std::uint64_t base_seed = 0;
    std::uint64_t step_cap = 0;        // 0 -> default per graph size
    std::vector<double> fractions;     // empty -> default grid
    int jobs = 1;

    void validate() const;
};

struct PolicyOutcome {
    Policy policy;
    ExperimentReport report;
    // Per-replicate values in schedule order (graph, start, run); the same
    // index across policies refers to the same graph/start/run triple.
    std::vector<std::uint64_t> cover_steps_by_run;
    std::vector<std::int64_t> mnlcs_by_run;
};

struct ExperimentResult {
    NodeId n = 0;
    std::uint64_t base_seed = 0;
    std::vector<double> fractions;
    std::vector<std::uint64_t> graph_hashes;        // one per graph index
    std::vector<std::vector<NodeId>> starts;        // per graph index, all policies
    std::vector<PolicyOutcome> policies;
};

/// Runs the full replication schedule: `graphs` instances, `starts_per_graph`
/// distinct uniform starts each, `runs_per_start` runs per start and policy.
/// All policies see identical graphs and starts (paired comparison). Every
/// replicate's seed derives from (base_seed, graph, policy, start, run), so
/// results are bit-identical for any worker count.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepRow {
    int d = 0;
    Rational h;
    double mean_cs_normalized = 0.0;
    double mean_mnlcs = 0.0;
};

struct SweepBest {
    int d = 0;
    Rational h;              // argmin of mean MNLCS over the h grid
    double mean_mnlcs = 0.0;
};

struct SweepResult {
    NodeId n = 0;
    std::uint64_t base_seed = 0;
    std::vector<SweepRow> rows;       // ordered by (d, h) input order
    std::vector<SweepBest> best_h;    // one per d
};

/// Runs ERWC(d, h) over the whole (d, h) grid under one paired experiment
/// and reports mean cover steps and mean MNLCS per cell, plus the h
/// minimizing mean MNLCS for each d (ties to the smaller h).
SweepResult sweep_h(const GraphSpec& spec, std::span<const int> d_list,
                    std::span<const Rational> h_values, const Replication& replication,
                    std::uint64_t base_seed, int jobs = 1, std::uint64_t step_cap = 0);

struct HeuristicInterval {
    double low = 0.0;
    double high = 0.0;
};

/// Heuristic h range (mean_degree/3, mean_degree/2), clamped below to just
/// above 1. A starting range for sweeps, not a guarantee.
HeuristicInterval recommend_h(const GraphStats& stats);

}  // namespace rwalk
