#include "rwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rwalk/errors.hpp"
#include "rwalk/metrics.hpp"

namespace rwalk::io {

using nlohmann::json;

std::string fmt6(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field '" + field + "': " + why);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) bad_field(where.empty() ? key : where + "." + key, "unknown key");
    }
}

GraphSpec graph_spec_from_json(const json& obj) {
    if (!obj.is_object()) bad_field("graph", "must be an object");
    reject_unknown_keys(obj,
                        {"family", "n", "radius", "radius_mult", "rows", "cols", "path",
                         "max_retries"},
                        "graph");
    GraphSpec spec;
    const std::string family = obj.value("family", std::string{});
    if (family == "rgg") {
        spec.family = GraphSpec::Family::Rgg;
    } else if (family == "torus") {
        spec.family = GraphSpec::Family::Torus;
    } else if (family == "complete") {
        spec.family = GraphSpec::Family::Complete;
    } else if (family == "edge_list") {
        spec.family = GraphSpec::Family::EdgeList;
    } else {
        bad_field("graph.family", "expected rgg, torus, complete or edge_list");
    }
    spec.n = obj.value("n", 0U);
    spec.radius = obj.value("radius", 0.0);
    spec.radius_mult = obj.value("radius_mult", 2.0);
    spec.rows = obj.value("rows", 0U);
    spec.cols = obj.value("cols", 0U);
    spec.path = obj.value("path", std::string{});
    spec.max_retries = obj.value("max_retries", 100);
    spec.validate();
    return spec;
}

json graph_spec_to_json(const GraphSpec& spec) {
    json obj;
    switch (spec.family) {
        case GraphSpec::Family::Rgg:
            obj["family"] = "rgg";
            obj["n"] = spec.n;
            if (spec.radius > 0.0) {
                obj["radius"] = spec.radius;
            } else {
                obj["radius_mult"] = spec.radius_mult;
            }
            obj["max_retries"] = spec.max_retries;
            break;
        case GraphSpec::Family::Torus:
            obj["family"] = "torus";
            obj["rows"] = spec.rows;
            obj["cols"] = spec.cols;
            break;
        case GraphSpec::Family::Complete:
            obj["family"] = "complete";
            obj["n"] = spec.n;
            break;
        case GraphSpec::Family::EdgeList:
            obj["family"] = "edge_list";
            obj["path"] = spec.path;
            break;
    }
    return obj;
}

}  // namespace

GraphSpec parse_graph_spec_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return graph_spec_from_json(doc);
}

namespace {

ExperimentConfig config_from_json(const json& doc, ExperimentConfig base,
                                  bool require_core_fields) {
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    reject_unknown_keys(doc,
                        {"graph", "policies", "replication", "base_seed", "step_cap",
                         "fractions", "jobs"},
                        "");

    ExperimentConfig config = std::move(base);
    if (doc.contains("graph")) {
        config.graph = graph_spec_from_json(doc["graph"]);
    } else if (require_core_fields) {
        bad_field("graph", "required");
    }

    if (doc.contains("policies")) {
        const json& policies = doc["policies"];
        if (!policies.is_array() || policies.empty()) {
            bad_field("policies", "must be a nonempty array of policy tokens");
        }
        config.policies.clear();
        for (const json& token : policies) {
            if (!token.is_string()) bad_field("policies", "entries must be strings");
            try {
                config.policies.push_back(Policy::parse(token.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                bad_field("policies", e.what());
            }
        }
    } else if (require_core_fields) {
        bad_field("policies", "required");
    }

    if (doc.contains("replication")) {
        const json& rep = doc["replication"];
        if (!rep.is_object()) bad_field("replication", "must be an object");
        reject_unknown_keys(rep, {"graphs", "starts_per_graph", "runs_per_start"},
                            "replication");
        config.replication.graphs = rep.value("graphs", config.replication.graphs);
        config.replication.starts_per_graph =
            rep.value("starts_per_graph", config.replication.starts_per_graph);
        config.replication.runs_per_start =
            rep.value("runs_per_start", config.replication.runs_per_start);
    }
    config.base_seed = doc.value("base_seed", config.base_seed);
    config.step_cap = doc.value("step_cap", config.step_cap);
    if (doc.contains("fractions")) {
        const json& fr = doc["fractions"];
        if (!fr.is_array()) bad_field("fractions", "must be an array of reals in (0, 1]");
        config.fractions.clear();
        for (const json& f : fr) {
            if (!f.is_number()) bad_field("fractions", "entries must be numbers");
            config.fractions.push_back(f.get<double>());
        }
    }
    config.jobs = doc.value("jobs", config.jobs);
    config.validate();
    return config;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

ExperimentConfig parse_config_json(std::string_view text) {
    return config_from_json(parse_document(text), ExperimentConfig{}, true);
}

ExperimentConfig merge_config_json(std::string_view text, ExperimentConfig base) {
    return config_from_json(parse_document(text), std::move(base), false);
}

std::string config_json(const ExperimentConfig& config) {
    json doc;
    doc["graph"] = graph_spec_to_json(config.graph);
    doc["policies"] = json::array();
    for (const Policy& p : config.policies) doc["policies"].push_back(p.name());
    doc["replication"] = {{"graphs", config.replication.graphs},
                          {"starts_per_graph", config.replication.starts_per_graph},
                          {"runs_per_start", config.replication.runs_per_start}};
    doc["base_seed"] = config.base_seed;
    if (config.step_cap) doc["step_cap"] = config.step_cap;
    if (!config.fractions.empty()) doc["fractions"] = config.fractions;
    doc["jobs"] = config.jobs;
    return doc.dump(2);
}

void write_report_csv(std::ostream& out, const ExperimentResult& result) {
    out << "policy,replicates,mean_cs,mean_cs_norm,mean_mnlcs,ct,ct_norm,mnlct,"
           "bc_cs,bc_cs_norm,bc_mnlcs,improvement_cs_pct,improvement_mnlcs_pct\n";
    const ExperimentReport& base = result.policies.front().report;
    for (const PolicyOutcome& outcome : result.policies) {
        const ExperimentReport& rep = outcome.report;
        out << outcome.policy.name() << ',' << rep.replicate_count << ','
            << fmt6(rep.mean_cs) << ',' << fmt6(rep.mean_cs_normalized) << ','
            << fmt6(rep.mean_mnlcs) << ',' << rep.ct << ',' << fmt6(rep.ct_normalized)
            << ',' << rep.mnlct << ',' << rep.bc_cs << ',' << fmt6(rep.bc_cs_normalized)
            << ',' << rep.bc_mnlcs << ','
            << fmt6(improvement(base.mean_cs_normalized, rep.mean_cs_normalized)) << ','
            << fmt6(improvement(base.mean_mnlcs, rep.mean_mnlcs)) << '\n';
    }
}

void write_cs_dist_csv(std::ostream& out, const ExperimentResult& result) {
    out << "policy,rank,cover_steps,cover_steps_norm\n";
    for (const PolicyOutcome& outcome : result.policies) {
        const auto& dist = outcome.report.cs_distribution;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            out << outcome.policy.name() << ',' << i << ',' << dist[i] << ','
                << fmt6(static_cast<double>(dist[i]) / result.n) << '\n';
        }
    }
}

void write_mnl_dist_csv(std::ostream& out, const ExperimentResult& result) {
    out << "policy,rank,mnlcs\n";
    for (const PolicyOutcome& outcome : result.policies) {
        const auto& dist = outcome.report.mnl_distribution;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            out << outcome.policy.name() << ',' << i << ',' << dist[i] << '\n';
        }
    }
}

void write_partial_cover_csv(std::ostream& out, const ExperimentResult& result) {
    out << "policy,fraction,mean_steps_norm\n";
    for (const PolicyOutcome& outcome : result.policies) {
        const ExperimentReport& rep = outcome.report;
        for (std::size_t j = 0; j < rep.fractions.size(); ++j) {
            out << outcome.policy.name() << ',' << fmt6(rep.fractions[j]) << ','
                << fmt6(rep.partial_cover_curve[j]) << '\n';
        }
    }
}

void write_visit_hist_csv(std::ostream& out, const ExperimentResult& result) {
    out << "policy,bin_low,bin_high,node_count\n";
    for (const PolicyOutcome& outcome : result.policies) {
        const auto& hist = outcome.report.visit_histogram;
        for (std::size_t bin = 0; bin < hist.size(); ++bin) {
            out << outcome.policy.name() << ',' << bin << ',' << bin + 1 << ','
                << hist[bin] << '\n';
        }
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "d,h,mean_cs_norm,mean_mnlcs\n";
    for (const SweepRow& row : result.rows) {
        out << row.d << ',' << row.h.str() << ',' << fmt6(row.mean_cs_normalized) << ','
            << fmt6(row.mean_mnlcs) << '\n';
    }
}

namespace {

std::vector<std::filesystem::path> write_files(
    const std::filesystem::path& dir,
    const std::vector<std::pair<const char*, std::function<void(std::ostream&)>>>& files) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    try {
        for (const auto& [name, writer] : files) {
            const std::filesystem::path path = dir / name;
            std::ofstream out(path, std::ios::binary);
            if (!out) throw Error("cannot open " + path.string() + " for writing");
            written.push_back(path);
            writer(out);
            out.flush();
            if (!out) throw Error("write failed: " + path.string());
        }
    } catch (...) {
        for (const auto& path : written) {
            std::error_code ec;
            std::filesystem::remove(path, ec);
        }
        throw;
    }
    return written;
}

}  // namespace

std::vector<std::filesystem::path> write_experiment_csvs(const std::filesystem::path& dir,
                                                         const ExperimentResult& result) {
    return write_files(
        dir, {{"report.csv", [&](std::ostream& o) { write_report_csv(o, result); }},
              {"cs_dist.csv", [&](std::ostream& o) { write_cs_dist_csv(o, result); }},
              {"mnl_dist.csv", [&](std::ostream& o) { write_mnl_dist_csv(o, result); }},
              {"partial_cover.csv",
               [&](std::ostream& o) { write_partial_cover_csv(o, result); }},
              {"visit_hist.csv", [&](std::ostream& o) { write_visit_hist_csv(o, result); }}});
}

std::vector<std::filesystem::path> write_sweep_csvs(const std::filesystem::path& dir,
                                                    const SweepResult& result) {
    return write_files(dir,
                       {{"sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, result); }}});
}

}  // namespace rwalk::io
