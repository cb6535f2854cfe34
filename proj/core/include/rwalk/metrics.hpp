#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rwalk/run_record.hpp"

namespace rwalk {

/// Aggregate statistics over the replicates of one policy.
///
/// "Normalized" values are step counts divided by the node count n. The
/// cover-time estimate CT is the worst observed run and bcCS the best; MNLCT
/// and bcMNLCS are the max node loads of those particular runs, not extremes
/// over all runs.
struct ExperimentReport {
    NodeId n = 0;
    std::uint64_t replicate_count = 0;

    double mean_cs = 0.0;
    double mean_cs_normalized = 0.0;
    double mean_mnlcs = 0.0;

    std::uint64_t ct = 0;            // max cover steps over replicates
    double ct_normalized = 0.0;
    std::int64_t mnlct = 0;          // max node load of the CT run

    std::uint64_t bc_cs = 0;         // min cover steps over replicates
    double bc_cs_normalized = 0.0;
    std::int64_t bc_mnlcs = 0;       // max node load of the bcCS run

    std::vector<double> fractions;            // grid the curve aligns to
    std::vector<double> partial_cover_curve;  // mean normalized steps per fraction
    std::vector<std::uint64_t> visit_histogram;  // nodes per unit-width bin of
                                                 // mean visits, bins [k, k+1)
    std::vector<std::uint64_t> cs_distribution;  // sorted ascending
    std::vector<std::int64_t> mnl_distribution;  // sorted ascending
};

/// Streaming, order-independent aggregation. All sums are integer-exact, so
/// any fold or merge order yields the same report; extreme runs tie-break on
/// the lower replicate index.
class ReportAccumulator {
public:
    ReportAccumulator(NodeId n, std::size_t fraction_count);

    /// Folds one completed record in. Throws std::invalid_argument on
    /// incomplete records or mismatched dimensions.
    void add(const RunRecord& rec);

    void merge(const ReportAccumulator& other);

    std::uint64_t count() const noexcept { return count_; }

    ExperimentReport finish(std::span<const double> fractions) const;

private:
    struct Extreme {
        std::uint64_t cover_steps = 0;
        std::int64_t max_node_load = 0;
        std::uint32_t replicate_index = 0;
        bool set = false;
    };

    static void take_max(Extreme& e, const RunRecord& rec);
    static void take_min(Extreme& e, const RunRecord& rec);

    NodeId n_;
    std::uint64_t count_ = 0;
    std::uint64_t cs_sum_ = 0;
    std::uint64_t mnl_sum_ = 0;
    std::vector<std::uint64_t> partial_sums_;
    std::vector<std::uint64_t> visit_sums_;
    std::vector<std::uint64_t> cs_values_;
    std::vector<std::int64_t> mnl_values_;
    Extreme ct_;
    Extreme bc_;
};

/// Aggregates records from same-n graphs into a report. `fractions` is the
/// grid the records' partial_cover_steps align to.
ExperimentReport aggregate(std::span<const RunRecord> records, NodeId n,
                           std::span<const double> fractions);

/// Relative improvement of `enhanced` over `baseline` in percent:
/// (baseline - enhanced) / baseline * 100. Requires baseline > 0.
double improvement(double baseline, double enhanced);

/// Histogram of mean visits per node over the records (bin width 1 from 0).
std::vector<std::uint64_t> visit_histogram(std::span<const RunRecord> records);

}  // namespace rwalk
