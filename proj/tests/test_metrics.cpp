#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rwalk/metrics.hpp"
#include "support/test_support.hpp"

using namespace rwalk;

namespace {

RunRecord record(std::uint64_t cover_steps, std::int64_t mnl,
                 std::vector<std::int64_t> visits, std::uint32_t index) {
    RunRecord rec;
    rec.cover_steps = cover_steps;
    rec.max_node_load = mnl;
    rec.visit_counts = std::move(visits);
    rec.partial_cover_steps = {cover_steps};
    rec.covered = static_cast<std::uint32_t>(rec.visit_counts.size());
    rec.completed = true;
    rec.replicate_index = index;
    return rec;
}

const std::vector<double> kFullCover{1.0};

}  // namespace

TEST_CASE("aggregate of a single record") {
    const std::vector<RunRecord> records{record(10, 3, {3, 2, 2, 2, 2}, 0)};
    const ExperimentReport rep = aggregate(records, 5, kFullCover);
    CHECK(rep.mean_cs_normalized == doctest::Approx(2.0));
    CHECK(rep.ct_normalized == doctest::Approx(2.0));
    CHECK(rep.bc_cs_normalized == doctest::Approx(2.0));
    CHECK(rep.replicate_count == 1);
}

TEST_CASE("aggregate mean, worst and best cover steps") {
    const std::vector<RunRecord> records{
        record(10, 2, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1}, 0),
        record(30, 7, {7, 6, 5, 4, 3, 2, 1, 1, 1, 1}, 1),
    };
    const ExperimentReport rep = aggregate(records, 10, kFullCover);
    CHECK(rep.mean_cs_normalized == doctest::Approx(2.0));
    CHECK(rep.ct_normalized == doctest::Approx(3.0));
    CHECK(rep.bc_cs_normalized == doctest::Approx(1.0));
    CHECK(rep.mean_cs == doctest::Approx(20.0));
}

TEST_CASE("mnlct belongs to the worst run, bc_mnlcs to the best") {
    // the worst run has the lower load; mnlct must not take the overall max
    const std::vector<RunRecord> records{
        record(30, 4, {4, 4, 4, 4, 4, 4, 3, 2, 1, 1}, 0),
        record(10, 9, {9, 1, 1, 0, 0, 0, 0, 0, 0, 0}, 1),
    };
    const ExperimentReport rep = aggregate(records, 10, kFullCover);
    CHECK(rep.ct == 30);
    CHECK(rep.mnlct == 4);
    CHECK(rep.bc_cs == 10);
    CHECK(rep.bc_mnlcs == 9);
}

TEST_CASE("aggregate is permutation invariant") {
    Engine eng = make_engine(8);
    std::vector<RunRecord> records;
    for (std::uint32_t i = 0; i < 40; ++i) {
        const auto cs = 4 + uniform_below(eng, 60);
        std::vector<std::int64_t> visits(5, 1);
        std::int64_t left = static_cast<std::int64_t>(cs) + 1 - 5;
        for (std::size_t v = 0; left > 0; v = (v + 1) % 5) {
            const std::int64_t add =
                std::min<std::int64_t>(left, 1 + static_cast<std::int64_t>(
                                                     uniform_below(eng, 5)));
            visits[v] += add;
            left -= add;
        }
        const std::int64_t mnl = *std::max_element(visits.begin(), visits.end());
        records.push_back(record(cs, mnl, std::move(visits), i));
        records.back().partial_cover_steps = {cs / 2, cs};
    }
    const std::vector<double> grid{0.5, 1.0};
    const ExperimentReport base = aggregate(records, 5, grid);

    std::vector<RunRecord> shuffled = records;
    std::mt19937 shuffle_eng(99);
    std::shuffle(shuffled.begin(), shuffled.end(), shuffle_eng);
    const ExperimentReport again = aggregate(shuffled, 5, grid);

    CHECK(base.mean_cs == again.mean_cs);
    CHECK(base.mean_mnlcs == again.mean_mnlcs);
    CHECK(base.ct == again.ct);
    CHECK(base.mnlct == again.mnlct);
    CHECK(base.bc_cs == again.bc_cs);
    CHECK(base.bc_mnlcs == again.bc_mnlcs);
    CHECK(base.cs_distribution == again.cs_distribution);
    CHECK(base.mnl_distribution == again.mnl_distribution);
    CHECK(base.visit_histogram == again.visit_histogram);
    CHECK(base.partial_cover_curve == again.partial_cover_curve);
}

TEST_CASE("accumulator merge equals one-shot aggregation") {
    std::vector<RunRecord> records;
    for (std::uint32_t i = 0; i < 20; ++i) {
        records.push_back(record(10 + i, 3, {static_cast<std::int64_t>(3 + i), 4, 4}, i));
        records.back().visit_counts = {static_cast<std::int64_t>(i) + 3, 4, 4};
        records.back().max_node_load =
            *std::max_element(records.back().visit_counts.begin(),
                              records.back().visit_counts.end());
        records.back().cover_steps = static_cast<std::uint64_t>(i) + 3 + 4 + 4 - 1;
        records.back().partial_cover_steps = {records.back().cover_steps};
    }
    ReportAccumulator whole(3, 1);
    ReportAccumulator left(3, 1);
    ReportAccumulator right(3, 1);
    for (std::size_t i = 0; i < records.size(); ++i) {
        whole.add(records[i]);
        (i % 2 ? left : right).add(records[i]);
    }
    left.merge(right);
    const ExperimentReport a = whole.finish(kFullCover);
    const ExperimentReport b = left.finish(kFullCover);
    CHECK(a.mean_cs == b.mean_cs);
    CHECK(a.mean_mnlcs == b.mean_mnlcs);
    CHECK(a.ct == b.ct);
    CHECK(a.mnlct == b.mnlct);
    CHECK(a.cs_distribution == b.cs_distribution);
    CHECK(a.visit_histogram == b.visit_histogram);
}

TEST_CASE("aggregate rejects bad input") {
    CHECK_THROWS_AS(aggregate({}, 5, kFullCover), std::invalid_argument);
    RunRecord incomplete = record(10, 2, {2, 2, 2, 2, 3}, 0);
    incomplete.completed = false;
    const std::vector<RunRecord> records{incomplete};
    CHECK_THROWS_AS(aggregate(records, 5, kFullCover), std::invalid_argument);
}

TEST_CASE("improvement percentages") {
    CHECK(improvement(6.44, 4.87) == doctest::Approx(24.3789).epsilon(1e-4));
    CHECK(std::abs(improvement(6.44, 4.87) - 24.37) < 0.01);
    CHECK(improvement(7.32, 6.44) == doctest::Approx(12.0219).epsilon(1e-4));
    CHECK(improvement(3.5, 3.5) == 0.0);
    CHECK_THROWS_AS(improvement(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(improvement(-2.0, 1.0), std::invalid_argument);
}

TEST_CASE("improvement inverts back to the enhanced value") {
    Engine eng = make_engine(3);
    for (int iter = 0; iter < 100; ++iter) {
        const double baseline = 0.1 + uniform_unit(eng) * 50.0;
        const double enhanced = uniform_unit(eng) * baseline;
        const double pct = improvement(baseline, enhanced);
        CHECK(baseline * (1.0 - pct / 100.0) == doctest::Approx(enhanced).epsilon(1e-9));
    }
}

TEST_CASE("visit histogram buckets mean visits per node") {
    SUBCASE("single record on a two-node path") {
        const std::vector<RunRecord> records{record(1, 1, {1, 1}, 0)};
        CHECK(visit_histogram(records) == std::vector<std::uint64_t>{0, 2});
    }
    SUBCASE("two mirrored records average to the same bin") {
        const std::vector<RunRecord> records{record(3, 3, {1, 3}, 0),
                                             record(3, 3, {3, 1}, 1)};
        CHECK(visit_histogram(records) == std::vector<std::uint64_t>{0, 0, 2});
    }
}

TEST_CASE("cover steps are stored exactly and normalized only at reporting") {
    std::vector<RunRecord> records;
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < 7; ++i) {
        const std::uint64_t cs = 1000003ULL + 13ULL * i;
        records.push_back(record(cs, 2, {}, i));
        auto& rec = records.back();
        rec.visit_counts.assign(9, 1);
        rec.visit_counts[0] = static_cast<std::int64_t>(cs + 1 - 8);
        rec.max_node_load = rec.visit_counts[0];
        rec.partial_cover_steps = {cs};
        total += cs;
    }
    const ExperimentReport rep = aggregate(records, 9, kFullCover);
    CHECK(rep.mean_cs == static_cast<double>(total) / 7.0);
    CHECK(rep.cs_distribution.front() == 1000003ULL);
}
