#include "rwalk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rwalk {

ReportAccumulator::ReportAccumulator(NodeId n, std::size_t fraction_count)
    : n_(n), partial_sums_(fraction_count, 0), visit_sums_(n, 0) {
    if (n < 1) throw std::invalid_argument("accumulator needs n >= 1");
}

void ReportAccumulator::take_max(Extreme& e, const RunRecord& rec) {
    if (!e.set || rec.cover_steps > e.cover_steps ||
        (rec.cover_steps == e.cover_steps && rec.replicate_index < e.replicate_index)) {
        e = {rec.cover_steps, rec.max_node_load, rec.replicate_index, true};
    }
}

void ReportAccumulator::take_min(Extreme& e, const RunRecord& rec) {
    if (!e.set || rec.cover_steps < e.cover_steps ||
        (rec.cover_steps == e.cover_steps && rec.replicate_index < e.replicate_index)) {
        e = {rec.cover_steps, rec.max_node_load, rec.replicate_index, true};
    }
}

void ReportAccumulator::add(const RunRecord& rec) {
    if (!rec.completed) {
        throw std::invalid_argument("cannot aggregate an incomplete run record");
    }
    if (rec.visit_counts.size() != n_ ||
        rec.partial_cover_steps.size() != partial_sums_.size()) {
        throw std::invalid_argument("run record dimensions do not match accumulator");
    }
    ++count_;
    cs_sum_ += rec.cover_steps;
    mnl_sum_ += static_cast<std::uint64_t>(rec.max_node_load);
    for (std::size_t j = 0; j < partial_sums_.size(); ++j) {
        partial_sums_[j] += rec.partial_cover_steps[j];
    }
    for (NodeId v = 0; v < n_; ++v) {
        visit_sums_[v] += static_cast<std::uint64_t>(rec.visit_counts[v]);
    }
    cs_values_.push_back(rec.cover_steps);
    mnl_values_.push_back(rec.max_node_load);
    take_max(ct_, rec);
    take_min(bc_, rec);
}

void ReportAccumulator::merge(const ReportAccumulator& other) {
    if (other.n_ != n_ || other.partial_sums_.size() != partial_sums_.size()) {
        throw std::invalid_argument("accumulator dimensions do not match");
    }
    count_ += other.count_;
    cs_sum_ += other.cs_sum_;
    mnl_sum_ += other.mnl_sum_;
    for (std::size_t j = 0; j < partial_sums_.size(); ++j) {
        partial_sums_[j] += other.partial_sums_[j];
    }
    for (NodeId v = 0; v < n_; ++v) visit_sums_[v] += other.visit_sums_[v];
    cs_values_.insert(cs_values_.end(), other.cs_values_.begin(), other.cs_values_.end());
    mnl_values_.insert(mnl_values_.end(), other.mnl_values_.begin(),
                       other.mnl_values_.end());

    const auto fold_extreme = [](Extreme& mine, const Extreme& theirs, bool maximum) {
        if (!theirs.set) return;
        if (!mine.set || (maximum ? theirs.cover_steps > mine.cover_steps
                                  : theirs.cover_steps < mine.cover_steps) ||
            (theirs.cover_steps == mine.cover_steps &&
             theirs.replicate_index < mine.replicate_index)) {
            mine = theirs;
        }
    };
    fold_extreme(ct_, other.ct_, true);
    fold_extreme(bc_, other.bc_, false);
}

ExperimentReport ReportAccumulator::finish(std::span<const double> fractions) const {
    if (count_ == 0) throw std::invalid_argument("no records to aggregate");
    if (fractions.size() != partial_sums_.size()) {
        throw std::invalid_argument("fraction grid does not match accumulator");
    }

    ExperimentReport rep;
    rep.n = n_;
    rep.replicate_count = count_;
    const double r = static_cast<double>(count_);
    const double n = static_cast<double>(n_);

    rep.mean_cs = static_cast<double>(cs_sum_) / r;
    rep.mean_cs_normalized = rep.mean_cs / n;
    rep.mean_mnlcs = static_cast<double>(mnl_sum_) / r;

    rep.ct = ct_.cover_steps;
    rep.ct_normalized = static_cast<double>(ct_.cover_steps) / n;
    rep.mnlct = ct_.max_node_load;
    rep.bc_cs = bc_.cover_steps;
    rep.bc_cs_normalized = static_cast<double>(bc_.cover_steps) / n;
    rep.bc_mnlcs = bc_.max_node_load;

    rep.fractions.assign(fractions.begin(), fractions.end());
    rep.partial_cover_curve.reserve(partial_sums_.size());
    for (const std::uint64_t sum : partial_sums_) {
        rep.partial_cover_curve.push_back(static_cast<double>(sum) / (r * n));
    }

    // Mean visits per node, binned with width 1 from 0.
    std::vector<std::uint64_t> hist;
    for (NodeId v = 0; v < n_; ++v) {
        const double mean = static_cast<double>(visit_sums_[v]) / r;
        const auto bin = static_cast<std::size_t>(std::floor(mean));
        if (hist.size() <= bin) hist.resize(bin + 1, 0);
        ++hist[bin];
    }
    rep.visit_histogram = std::move(hist);

    rep.cs_distribution = cs_values_;
    std::sort(rep.cs_distribution.begin(), rep.cs_distribution.end());
    rep.mnl_distribution = mnl_values_;
    std::sort(rep.mnl_distribution.begin(), rep.mnl_distribution.end());
    return rep;
}

ExperimentReport aggregate(std::span<const RunRecord> records, NodeId n,
                           std::span<const double> fractions) {
    if (records.empty()) throw std::invalid_argument("no records to aggregate");
    ReportAccumulator acc(n, fractions.size());
    for (const RunRecord& rec : records) acc.add(rec);
    return acc.finish(fractions);
}

double improvement(double baseline, double enhanced) {
    if (!(baseline > 0.0)) throw std::invalid_argument("baseline must be positive");
    return (baseline - enhanced) / baseline * 100.0;
}

std::vector<std::uint64_t> visit_histogram(std::span<const RunRecord> records) {
    if (records.empty()) throw std::invalid_argument("no records");
    const std::size_t n = records.front().visit_counts.size();
    std::vector<std::uint64_t> sums(n, 0);
    for (const RunRecord& rec : records) {
        if (rec.visit_counts.size() != n) {
            throw std::invalid_argument("records disagree on node count");
        }
        for (std::size_t v = 0; v < n; ++v) {
            sums[v] += static_cast<std::uint64_t>(rec.visit_counts[v]);
        }
    }
    std::vector<std::uint64_t> hist;
    const double r = static_cast<double>(records.size());
    for (std::size_t v = 0; v < n; ++v) {
        const auto bin =
            static_cast<std::size_t>(std::floor(static_cast<double>(sums[v]) / r));
        if (hist.size() <= bin) hist.resize(bin + 1, 0);
        ++hist[bin];
    }
    return hist;
}

}  // namespace rwalk
