#include "rwalk/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "rwalk/errors.hpp"
#include "rwalk/walk.hpp"

namespace rwalk {

namespace {

// Domain tags keep the graph, start and replicate streams disjoint even when
// their indices coincide.
constexpr std::uint64_t kDomainGraph = 0x6772706821ULL;
constexpr std::uint64_t kDomainStarts = 0x7374727421ULL;
constexpr std::uint64_t kDomainRun = 0x72756e2121ULL;

}  // namespace

double GraphSpec::effective_radius() const {
    if (radius > 0.0) return radius;
    return radius_mult * connectivity_radius(n);
}

std::string GraphSpec::label() const {
    switch (family) {
        case Family::Rgg: {
            std::ostringstream os;
            os << "rgg(n=" << n << ", r=" << effective_radius() << ")";
            return os.str();
        }
        case Family::Torus:
            return "torus(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
        case Family::Complete:
            return "complete(n=" + std::to_string(n) + ")";
        case Family::EdgeList:
            return "edge-list(" + path + ")";
    }
    return {};
}

void GraphSpec::validate() const {
    switch (family) {
        case Family::Rgg:
            if (n < 1) throw std::invalid_argument("rgg needs n >= 1");
            if (radius <= 0.0 && n < 2) {
                throw std::invalid_argument("radius multiplier needs n >= 2");
            }
            if (!(effective_radius() > 0.0)) {
                throw std::invalid_argument("rgg radius must be positive");
            }
            break;
        case Family::Torus:
            if (rows < 3 || cols < 3) {
                throw std::invalid_argument("torus needs rows >= 3 and cols >= 3");
            }
            break;
        case Family::Complete:
            if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            break;
        case Family::EdgeList:
            if (path.empty()) throw std::invalid_argument("edge-list spec needs a path");
            break;
    }
}

Graph build_graph(const GraphSpec& spec, std::uint64_t seed) {
    spec.validate();
    switch (spec.family) {
        case GraphSpec::Family::Rgg: {
            Engine eng = make_engine(seed);
            return generate_rgg(spec.n, spec.effective_radius(), eng, true,
                                spec.max_retries)
                .graph;
        }
        case GraphSpec::Family::Torus:
            return generate_torus(spec.rows, spec.cols);
        case GraphSpec::Family::Complete:
            return generate_complete(spec.n);
        case GraphSpec::Family::EdgeList: {
            std::ifstream in(spec.path, std::ios::binary);
            if (!in) throw Error("cannot open graph file: " + spec.path);
            std::ostringstream text;
            text << in.rdbuf();
            return load_edge_list(text.str());
        }
    }
    throw std::invalid_argument("unknown graph family");
}

void ExperimentConfig::validate() const {
    graph.validate();
    if (policies.empty()) throw std::invalid_argument("experiment needs at least one policy");
    for (const Policy& p : policies) p.validate();
    if (replication.graphs < 1 || replication.starts_per_graph < 1 ||
        replication.runs_per_start < 1) {
        throw std::invalid_argument("replication counts must be >= 1");
    }
    for (const double f : fractions) {
        if (!(f > 0.0) || f > 1.0) {
            throw std::invalid_argument("cover fractions must lie in (0, 1]");
        }
    }
}

namespace {

std::vector<NodeId> draw_starts(NodeId n, std::uint32_t count, Engine& eng) {
    if (count > n) {
        throw std::invalid_argument("cannot draw " + std::to_string(count) +
                                    " distinct starts from " + std::to_string(n) +
                                    " nodes");
    }
    // partial Fisher-Yates; distinct by construction
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto j = i + uniform_below(eng, n - i);
        std::swap(ids[i], ids[j]);
    }
    ids.resize(count);
    return ids;
}

struct Job {
    std::uint32_t graph_index;
    std::uint32_t policy_index;
    std::uint32_t slot;  // (graph, start, run) flattened, per policy
    NodeId start;
    std::uint64_t seed;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();

    const std::uint32_t G = config.replication.graphs;
    const std::uint32_t S = config.replication.starts_per_graph;
    const std::uint32_t K = config.replication.runs_per_start;
    const std::size_t P = config.policies.size();
    const std::uint64_t runs_per_policy = static_cast<std::uint64_t>(G) * S * K;

    // Realize graph instances. Fixed families build once; every graph index
    // still draws its own start nodes.
    std::vector<Graph> graphs;
    std::vector<std::uint64_t> graph_hashes(G);
    if (config.graph.fixed()) {
        graphs.push_back(build_graph(config.graph, seed_hash({config.base_seed, kDomainGraph, 0})));
        std::fill(graph_hashes.begin(), graph_hashes.end(), graphs[0].content_hash());
    } else {
        graphs.reserve(G);
        for (std::uint32_t g = 0; g < G; ++g) {
            try {
                graphs.push_back(
                    build_graph(config.graph, seed_hash({config.base_seed, kDomainGraph, g})));
            } catch (const GenerationFailure& e) {
                throw GenerationFailure(e.attempts(),
                                        "graph " + std::to_string(g) + ": " + e.what());
            }
            graph_hashes[g] = graphs.back().content_hash();
        }
    }
    const auto graph_at = [&](std::uint32_t g) -> const Graph& {
        return config.graph.fixed() ? graphs[0] : graphs[g];
    };
    const NodeId n = graph_at(0).node_count();

    const std::vector<double> fractions =
        config.fractions.empty() ? default_fraction_grid() : config.fractions;
    RunOptions run_opts;
    run_opts.step_cap = config.step_cap;
    run_opts.fractions = fractions;

    // Start nodes per graph index, shared by all policies.
    std::vector<std::vector<NodeId>> starts(G);
    for (std::uint32_t g = 0; g < G; ++g) {
        Engine eng = make_engine(seed_hash({config.base_seed, kDomainStarts, g}));
        starts[g] = draw_starts(n, S, eng);
    }

    // Replicate seeds; one per (graph, policy, start, run). Collisions would
    // silently correlate arms, so they are grounds to abort.
    std::vector<Job> jobs;
    jobs.reserve(runs_per_policy * P);
    std::unordered_set<std::uint64_t> seen_seeds;
    seen_seeds.reserve(runs_per_policy * P);
    for (std::uint32_t g = 0; g < G; ++g) {
        for (std::uint32_t p = 0; p < P; ++p) {
            for (std::uint32_t s = 0; s < S; ++s) {
                for (std::uint32_t k = 0; k < K; ++k) {
                    const std::uint64_t seed =
                        seed_hash({config.base_seed, kDomainRun, g, p, s, k});
                    if (!seen_seeds.insert(seed).second) {
                        throw Error("replicate seed collision; change base_seed");
                    }
                    const std::uint32_t slot = (g * S + s) * K + k;
                    jobs.push_back(Job{g, p, slot, starts[g][s], seed});
                }
            }
        }
    }

    // Per-policy sinks. Accumulator folds are integer-exact and protected by
    // a mutex; per-slot arrays are written lock-free at unique indices. Both
    // make the outcome independent of scheduling.
    std::vector<ReportAccumulator> accumulators;
    accumulators.reserve(P);
    for (std::size_t p = 0; p < P; ++p) accumulators.emplace_back(n, fractions.size());
    std::vector<std::mutex> accumulator_locks(P);
    std::vector<std::vector<std::uint64_t>> cs_by_run(
        P, std::vector<std::uint64_t>(runs_per_policy));
    std::vector<std::vector<std::int64_t>> mnl_by_run(
        P, std::vector<std::int64_t>(runs_per_policy));

    std::atomic<std::size_t> next_job{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_lock;

    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next_job.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs.size() || failed.load(std::memory_order_relaxed)) return;
            const Job& job = jobs[i];
            try {
                RunRecord rec = run_replicate(graph_at(job.graph_index),
                                              config.policies[job.policy_index],
                                              job.start, job.seed, run_opts);
                rec.replicate_index = job.slot;
                cs_by_run[job.policy_index][job.slot] = rec.cover_steps;
                mnl_by_run[job.policy_index][job.slot] = rec.max_node_load;
                std::lock_guard<std::mutex> lock(accumulator_locks[job.policy_index]);
                accumulators[job.policy_index].add(rec);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_lock);
                if (!failed.exchange(true)) {
                    try {
                        std::throw_with_nested(
                            Error("replicate failed (graph " +
                                  std::to_string(job.graph_index) + ", policy " +
                                  config.policies[job.policy_index].name() + ", start " +
                                  std::to_string(job.start) + ", seed " +
                                  std::to_string(job.seed) + ")"));
                    } catch (...) {
                        first_error = std::current_exception();
                    }
                }
            }
        }
    };

    const int worker_count = std::max(1, config.jobs);
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failed.load()) std::rethrow_exception(first_error);

    ExperimentResult result;
    result.n = n;
    result.base_seed = config.base_seed;
    result.fractions = fractions;
    result.graph_hashes = std::move(graph_hashes);
    result.starts = std::move(starts);
    result.policies.reserve(P);
    for (std::size_t p = 0; p < P; ++p) {
        PolicyOutcome outcome;
        outcome.policy = config.policies[p];
        outcome.report = accumulators[p].finish(fractions);
        outcome.cover_steps_by_run = std::move(cs_by_run[p]);
        outcome.mnlcs_by_run = std::move(mnl_by_run[p]);
        result.policies.push_back(std::move(outcome));
    }
    return result;
}

SweepResult sweep_h(const GraphSpec& spec, std::span<const int> d_list,
                    std::span<const Rational> h_values, const Replication& replication,
                    std::uint64_t base_seed, int jobs, std::uint64_t step_cap) {
    if (d_list.empty()) throw std::invalid_argument("sweep needs at least one d");
    if (h_values.empty()) throw std::invalid_argument("sweep needs a nonempty h grid");

    ExperimentConfig config;
    config.graph = spec;
    config.replication = replication;
    config.base_seed = base_seed;
    config.jobs = jobs;
    config.step_cap = step_cap;
    config.policies.reserve(d_list.size() * h_values.size());
    for (const int d : d_list) {
        for (const Rational& h : h_values) config.policies.push_back(Policy::erwc(d, h));
    }

    const ExperimentResult result = run_experiment(config);

    SweepResult sweep;
    sweep.n = result.n;
    sweep.base_seed = base_seed;
    sweep.rows.reserve(config.policies.size());
    std::size_t cell = 0;
    for (const int d : d_list) {
        SweepBest best;
        best.d = d;
        bool first = true;
        for (const Rational& h : h_values) {
            const ExperimentReport& rep = result.policies[cell].report;
            sweep.rows.push_back(SweepRow{d, h, rep.mean_cs_normalized, rep.mean_mnlcs});
            if (first || rep.mean_mnlcs < best.mean_mnlcs ||
                (rep.mean_mnlcs == best.mean_mnlcs && h.value() < best.h.value())) {
                best.h = h;
                best.mean_mnlcs = rep.mean_mnlcs;
                first = false;
            }
            ++cell;
        }
        sweep.best_h.push_back(best);
    }
    return sweep;
}

HeuristicInterval recommend_h(const GraphStats& stats) {
    const double dn = stats.mean_degree.value();
    if (!(dn > 0.0)) throw std::invalid_argument("mean degree must be positive");
    constexpr double kJustAboveOne = 1.0 + 1e-9;
    HeuristicInterval range;
    range.low = std::max(dn / 3.0, kJustAboveOne);
    range.high = std::max(dn / 2.0, range.low);
    return range;
}

}  // namespace rwalk
