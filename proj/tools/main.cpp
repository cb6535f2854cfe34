// rwalk: command-line front end for the random-walk cover-time lab.
//
// Subcommands: gen (graph files), run (single replicate), experiment
// (replicated multi-policy comparison, CSV outputs), sweep (ERWC h grid).
// Exit codes: 0 ok, 2 usage/input error, 3 generation failure, 4 walk could
// not cover (step cap exceeded or stuck), 5 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rwalk/errors.hpp"
#include "rwalk/experiment.hpp"
#include "rwalk/graph.hpp"
#include "rwalk/io.hpp"
#include "rwalk/metrics.hpp"
#include "rwalk/oracle.hpp"
#include "rwalk/walk.hpp"

namespace {

using nlohmann::json;
using namespace rwalk;

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    if (!out.flush()) throw Error("write failed: " + path);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::vector<Policy> parse_policy_list(const std::string& text) {
    std::vector<Policy> policies;
    for (const std::string& token : split_list(text)) {
        policies.push_back(Policy::parse(token));
    }
    return policies;
}

std::vector<double> parse_fraction_list(const std::string& text) {
    std::vector<double> fractions;
    for (const std::string& token : split_list(text)) {
        try {
            fractions.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid fraction: '" + token + "'");
        }
    }
    return fractions;
}

json stats_json(const GraphStats& s) {
    return json{{"n", s.n},
                {"m", s.m},
                {"mean_degree", s.mean_degree.value()},
                {"min_degree", s.min_degree},
                {"max_degree", s.max_degree},
                {"connected", s.connected}};
}

// ---------------------------------------------------------------------------
// gen

struct GenCommon {
    std::string out;
    std::optional<std::uint64_t> seed;
};

int finish_gen(const Graph& g, json extra, const GenCommon& common) {
    write_file(common.out, save_edge_list(g));
    json doc = stats_json(stats(g));
    doc["path"] = common.out;
    doc.update(extra);
    std::cout << doc.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// run

struct RunOpts {
    std::string graph_path;
    std::string policy;
    NodeId start = 0;
    std::optional<std::uint64_t> seed;
    std::uint64_t step_cap = 0;
    std::string fractions;
    std::string trace_path;
};

json record_json(const RunRecord& rec, const Policy& policy, NodeId n,
                 std::span<const double> fractions) {
    json partial = json::array();
    for (std::size_t j = 0; j < fractions.size(); ++j) {
        json entry{{"fraction", fractions[j]}};
        if (rec.partial_cover_steps[j] == kFractionUnreached) {
            entry["steps"] = nullptr;
        } else {
            entry["steps"] = rec.partial_cover_steps[j];
        }
        partial.push_back(entry);
    }
    return json{{"policy", policy.name()},
                {"start", rec.start},
                {"seed", rec.seed},
                {"completed", rec.completed},
                {"covered", rec.covered},
                {"cover_steps", rec.cover_steps},
                {"cover_steps_norm", static_cast<double>(rec.cover_steps) / n},
                {"max_node_load", rec.max_node_load},
                {"partial_cover", partial},
                {"visit_counts", rec.visit_counts}};
}

int cmd_run(const RunOpts& opts) {
    const Graph g = load_edge_list(read_file(opts.graph_path));
    const Policy policy = Policy::parse(opts.policy);
    const std::uint64_t seed = opts.seed ? *opts.seed : entropy_seed();

    RunOptions run_opts;
    run_opts.step_cap = opts.step_cap;
    if (!opts.fractions.empty()) run_opts.fractions = parse_fraction_list(opts.fractions);
    const std::vector<double> fractions =
        run_opts.fractions.empty() ? default_fraction_grid() : run_opts.fractions;

    std::ofstream trace_out;
    TraceSink sink;
    if (!opts.trace_path.empty()) {
        trace_out.open(opts.trace_path, std::ios::binary);
        if (!trace_out) throw Error("cannot open " + opts.trace_path + " for writing");
        sink = [&trace_out](const StepTrace& tr) {
            trace_out << json{{"t", tr.t},
                              {"from", tr.from},
                              {"candidates", tr.candidates},
                              {"considered", tr.considered},
                              {"scores", tr.scores},
                              {"chosen", tr.chosen}}
                             .dump()
                      << '\n';
        };
    }

    try {
        const RunRecord rec =
            run_replicate(g, policy, opts.start, seed, run_opts, sink);
        std::cout << record_json(rec, policy, g.node_count(), fractions).dump(2) << '\n';
        return 0;
    } catch (const CapExceeded& e) {
        std::cout << record_json(e.partial(), policy, g.node_count(), fractions).dump(2)
                  << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}

// ---------------------------------------------------------------------------
// experiment and sweep

struct GraphFlags {
    std::string family;
    NodeId n = 900;
    double radius = 0.0;
    double radius_mult = 2.0;
    std::uint32_t rows = 30;
    std::uint32_t cols = 30;
    std::string file;
    int max_retries = 100;

    bool specified() const { return !family.empty(); }

    GraphSpec to_spec() const {
        GraphSpec spec;
        if (family == "rgg") {
            spec.family = GraphSpec::Family::Rgg;
        } else if (family == "torus") {
            spec.family = GraphSpec::Family::Torus;
        } else if (family == "complete") {
            spec.family = GraphSpec::Family::Complete;
        } else if (family == "edge_list") {
            spec.family = GraphSpec::Family::EdgeList;
        } else {
            throw std::invalid_argument(
                "unknown --family '" + family +
                "' (expected rgg, torus, complete or edge_list)");
        }
        spec.n = n;
        spec.radius = radius;
        spec.radius_mult = radius_mult;
        spec.rows = rows;
        spec.cols = cols;
        spec.path = file;
        spec.max_retries = max_retries;
        spec.validate();
        return spec;
    }
};

void add_graph_flags(CLI::App* cmd, GraphFlags& flags) {
    cmd->add_option("--family", flags.family,
                    "graph family: rgg, torus, complete or edge_list");
    cmd->add_option("--n", flags.n, "node count (rgg, complete)");
    cmd->add_option("--radius", flags.radius, "explicit rgg radius");
    cmd->add_option("--radius-mult", flags.radius_mult,
                    "rgg radius as a multiple of the connectivity radius");
    cmd->add_option("--rows", flags.rows, "torus rows");
    cmd->add_option("--cols", flags.cols, "torus columns");
    cmd->add_option("--graph-file", flags.file, "edge-list file (family edge_list)");
    cmd->add_option("--max-retries", flags.max_retries,
                    "connected-rgg resampling budget");
}

struct ExperimentOpts {
    GraphFlags graph;
    std::string policies;
    std::uint32_t graphs = 1;
    std::uint32_t starts = 1;
    std::uint32_t runs = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t step_cap = 0;
    std::string fractions;
    int jobs = 1;
    std::string out;
    std::string config_path;
};

json policy_summary(const ExperimentResult& result) {
    json arr = json::array();
    const ExperimentReport& base = result.policies.front().report;
    for (const PolicyOutcome& outcome : result.policies) {
        const ExperimentReport& rep = outcome.report;
        arr.push_back(
            {{"policy", outcome.policy.name()},
             {"replicates", rep.replicate_count},
             {"mean_cs_norm", rep.mean_cs_normalized},
             {"mean_mnlcs", rep.mean_mnlcs},
             {"ct_norm", rep.ct_normalized},
             {"mnlct", rep.mnlct},
             {"bc_cs_norm", rep.bc_cs_normalized},
             {"bc_mnlcs", rep.bc_mnlcs},
             {"improvement_cs_pct",
              improvement(base.mean_cs_normalized, rep.mean_cs_normalized)},
             {"improvement_mnlcs_pct", improvement(base.mean_mnlcs, rep.mean_mnlcs)}});
    }
    return arr;
}

int cmd_experiment(const ExperimentOpts& opts) {
    ExperimentConfig config;
    if (opts.graph.specified()) config.graph = opts.graph.to_spec();
    if (!opts.policies.empty()) config.policies = parse_policy_list(opts.policies);
    config.replication = {opts.graphs, opts.starts, opts.runs};
    config.base_seed = opts.seed ? *opts.seed : entropy_seed();
    config.step_cap = opts.step_cap;
    if (!opts.fractions.empty()) config.fractions = parse_fraction_list(opts.fractions);
    config.jobs = opts.jobs;

    // The config file, when given, overrides flag values field by field.
    if (!opts.config_path.empty()) {
        config = io::merge_config_json(read_file(opts.config_path), std::move(config));
    } else if (!opts.graph.specified()) {
        throw std::invalid_argument("specify a graph (--family ...) or --config FILE");
    }
    if (opts.out.empty()) throw std::invalid_argument("--out DIR is required");
    config.validate();

    const ExperimentResult result = run_experiment(config);
    const auto files = io::write_experiment_csvs(opts.out, result);

    json doc{{"base_seed", config.base_seed},
             {"graph", config.graph.label()},
             {"n", result.n},
             {"replicates_per_policy", result.policies.front().report.replicate_count},
             {"out_dir", opts.out},
             {"policies", policy_summary(result)}};
    json file_list = json::array();
    for (const auto& f : files) file_list.push_back(f.string());
    doc["files"] = file_list;
    std::cout << doc.dump(2) << '\n';
    return 0;
}

struct SweepOpts {
    GraphFlags graph;
    std::string d_list = "2,3,4";
    int h_min = 2;
    int h_max = 133;
    std::uint32_t graphs = 100;
    std::uint32_t starts = 2;
    std::uint32_t runs = 2;
    std::optional<std::uint64_t> seed;
    std::uint64_t step_cap = 0;
    int jobs = 1;
    std::string out;
};

int cmd_sweep(const SweepOpts& opts) {
    if (!opts.graph.specified()) {
        throw std::invalid_argument("specify a graph with --family ...");
    }
    const GraphSpec spec = opts.graph.to_spec();

    std::vector<int> ds;
    for (const std::string& token : split_list(opts.d_list)) {
        try {
            ds.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid d: '" + token + "'");
        }
    }
    if (opts.h_min < 2 || opts.h_max < opts.h_min) {
        throw std::invalid_argument("need 2 <= h-min <= h-max");
    }
    std::vector<Rational> hs;
    for (int h = opts.h_min; h <= opts.h_max; ++h) hs.push_back(Rational{h, 1});

    const std::uint64_t base_seed = opts.seed ? *opts.seed : entropy_seed();
    const SweepResult sweep =
        sweep_h(spec, ds, hs, Replication{opts.graphs, opts.starts, opts.runs},
                base_seed, opts.jobs, opts.step_cap);

    std::vector<std::filesystem::path> files;
    if (!opts.out.empty()) files = io::write_sweep_csvs(opts.out, sweep);

    json best = json::array();
    for (const SweepBest& b : sweep.best_h) {
        best.push_back({{"d", b.d}, {"h", b.h.str()}, {"mean_mnlcs", b.mean_mnlcs}});
    }
    // heuristic starting range from one representative instance
    const GraphStats gs = stats(build_graph(spec, base_seed));
    const HeuristicInterval range = recommend_h(gs);

    json doc{{"base_seed", base_seed},
             {"graph", spec.label()},
             {"n", sweep.n},
             {"rows", sweep.rows.size()},
             {"best_h_by_mean_mnlcs", best},
             {"h_heuristic",
              {{"low", range.low},
               {"high", range.high},
               {"note", "heuristic mean_degree/3 .. mean_degree/2; verify by sweep"}}}};
    if (!files.empty()) doc["files"] = json::array({files.front().string()});
    std::cout << doc.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

int classify_error(const Error& e);

int nested_exit_code(const Error& outer) {
    try {
        std::rethrow_if_nested(outer);
    } catch (const CapExceeded&) {
        return 4;
    } catch (const StuckWalk&) {
        return 4;
    } catch (const GenerationFailure&) {
        return 3;
    } catch (const Error& inner) {
        return classify_error(inner);
    } catch (...) {
        return 5;
    }
    return 5;
}

int classify_error(const Error& e) {
    if (dynamic_cast<const rwalk::ParseError*>(&e)) return 2;
    if (dynamic_cast<const GenerationFailure*>(&e)) return 3;
    if (dynamic_cast<const CapExceeded*>(&e)) return 4;
    if (dynamic_cast<const StuckWalk*>(&e)) return 4;
    return nested_exit_code(e);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-walk cover-time lab: SRW, RWC(d) and ERWC(d,h) on "
                 "geometric graphs, tori and edge lists"};
    app.require_subcommand(1);
    int rc = 0;

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate a graph edge-list file");
    gen->require_subcommand(1);

    GenCommon gen_rgg_common;
    NodeId rgg_n = 900;
    double rgg_radius = 0.0;
    double rgg_radius_mult = 2.0;
    int rgg_max_retries = 100;
    bool rgg_allow_disconnected = false;
    std::string rgg_coords;
    CLI::App* gen_rgg = gen->add_subcommand("rgg", "random geometric graph G(n, r)");
    gen_rgg->add_option("--n", rgg_n, "node count")->required();
    gen_rgg->add_option("--radius", rgg_radius, "explicit radius");
    gen_rgg->add_option("--radius-mult", rgg_radius_mult,
                        "radius as a multiple of the connectivity radius (default 2)");
    gen_rgg->add_option("--seed", gen_rgg_common.seed, "rng seed (default: entropy)");
    gen_rgg->add_option("--out", gen_rgg_common.out, "edge-list output path")->required();
    gen_rgg->add_option("--coords", rgg_coords, "also write point coordinates (csv)");
    gen_rgg->add_option("--max-retries", rgg_max_retries,
                        "connected resampling budget (default 100)");
    gen_rgg->add_flag("--allow-disconnected", rgg_allow_disconnected,
                      "accept the first sample even if disconnected");
    gen_rgg->callback([&] {
        const std::uint64_t seed =
            gen_rgg_common.seed ? *gen_rgg_common.seed : entropy_seed();
        const double radius =
            rgg_radius > 0.0 ? rgg_radius : rgg_radius_mult * connectivity_radius(rgg_n);
        Engine eng = make_engine(seed);
        RggResult rgg =
            generate_rgg(rgg_n, radius, eng, !rgg_allow_disconnected, rgg_max_retries);
        if (!rgg_coords.empty()) {
            std::string text = "x,y\n";
            char buf[64];
            for (std::size_t i = 0; i < rgg.points.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", rgg.points.x[i],
                              rgg.points.y[i]);
                text += buf;
            }
            write_file(rgg_coords, text);
        }
        rc = finish_gen(rgg.graph,
                        json{{"family", "rgg"},
                             {"seed", seed},
                             {"radius", radius},
                             {"attempts", rgg.attempts}},
                        gen_rgg_common);
    });

    GenCommon gen_torus_common;
    std::uint32_t torus_rows = 30;
    std::uint32_t torus_cols = 30;
    CLI::App* gen_torus = gen->add_subcommand("torus", "2-d torus T(rows, cols)");
    gen_torus->add_option("--rows", torus_rows, "rows")->required();
    gen_torus->add_option("--cols", torus_cols, "columns")->required();
    gen_torus->add_option("--out", gen_torus_common.out, "edge-list output path")
        ->required();
    gen_torus->callback([&] {
        rc = finish_gen(generate_torus(torus_rows, torus_cols),
                        json{{"family", "torus"}}, gen_torus_common);
    });

    GenCommon gen_complete_common;
    NodeId complete_n = 0;
    CLI::App* gen_complete = gen->add_subcommand("complete", "complete graph K_n");
    gen_complete->add_option("--n", complete_n, "node count")->required();
    gen_complete->add_option("--out", gen_complete_common.out, "edge-list output path")
        ->required();
    gen_complete->callback([&] {
        rc = finish_gen(generate_complete(complete_n), json{{"family", "complete"}},
                        gen_complete_common);
    });

    // run
    RunOpts run_opts;
    CLI::App* run = app.add_subcommand("run", "run a single replicate to full cover");
    run->add_option("--graph", run_opts.graph_path, "edge-list file")->required();
    run->add_option("--policy", run_opts.policy, "srw, rwc:d or erwc:d:h")->required();
    run->add_option("--start", run_opts.start, "start node")->required();
    run->add_option("--seed", run_opts.seed, "rng seed (default: entropy)");
    run->add_option("--step-cap", run_opts.step_cap,
                    "abort after this many steps (default 10^4 * n)");
    run->add_option("--fractions", run_opts.fractions,
                    "partial-cover fractions, e.g. 0.25,0.5,1");
    run->add_option("--trace", run_opts.trace_path, "dump per-step traces (json lines)");
    run->callback([&] { rc = cmd_run(run_opts); });

    // experiment
    ExperimentOpts exp_opts;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "replicated multi-policy comparison; writes csv reports");
    add_graph_flags(experiment, exp_opts.graph);
    experiment->add_option("--policies", exp_opts.policies,
                           "comma list, e.g. srw,rwc:2,erwc:2:9");
    experiment->add_option("--graphs", exp_opts.graphs,
                           "graph instances (rgg) or repeats (fixed families)");
    experiment->add_option("--starts", exp_opts.starts, "distinct start nodes per graph");
    experiment->add_option("--runs", exp_opts.runs, "runs per start and policy");
    experiment->add_option("--seed", exp_opts.seed, "base seed (default: entropy)");
    experiment->add_option("--step-cap", exp_opts.step_cap, "per-run step cap");
    experiment->add_option("--fractions", exp_opts.fractions, "partial-cover fractions");
    experiment->add_option("--jobs", exp_opts.jobs, "worker threads (default 1)");
    experiment->add_option("--out", exp_opts.out, "output directory for csv files");
    experiment->add_option("--config", exp_opts.config_path,
                           "json config file; overrides flags");
    experiment->callback([&] { rc = cmd_experiment(exp_opts); });

    // sweep
    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "sweep ERWC over an integer h grid; writes sweep.csv");
    add_graph_flags(sweep, sweep_opts.graph);
    sweep->add_option("--d", sweep_opts.d_list, "comma list of d values (default 2,3,4)");
    sweep->add_option("--h-min", sweep_opts.h_min, "grid lower bound (default 2)");
    sweep->add_option("--h-max", sweep_opts.h_max, "grid upper bound (default 133)");
    sweep->add_option("--graphs", sweep_opts.graphs, "instances/repeats (default 100)");
    sweep->add_option("--starts", sweep_opts.starts, "starts per graph (default 2)");
    sweep->add_option("--runs", sweep_opts.runs, "runs per start (default 2)");
    sweep->add_option("--seed", sweep_opts.seed, "base seed (default: entropy)");
    sweep->add_option("--step-cap", sweep_opts.step_cap, "per-run step cap");
    sweep->add_option("--jobs", sweep_opts.jobs, "worker threads (default 1)");
    sweep->add_option("--out", sweep_opts.out, "output directory for sweep.csv");
    sweep->callback([&] { rc = cmd_sweep(sweep_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 5;
    }
    return rc;
}
