#include <gtest/gtest.h>

#include <set>

#include "ladder/bench/harness.hpp"

using namespace ladder;
using namespace ladder::bench;

namespace {

std::set<std::string> names(const std::vector<VariantDescriptor>& v) {
    std::set<std::string> s;
    for (const auto& d : v) s.insert(d.name);
    return s;
}

WorkloadSpec small_spec(Task t) {
    WorkloadSpec s;
    s.task = t;
    s.seed = 11;
    s.bytes = 20000;
    s.width = 128;
    s.height = 64;
    s.iters = 5;
    s.n = 3000;
    s.m = 8;
    s.k = 32;
    return s;
}

ReportRow row(std::string variant, std::string stage, double median_ns, std::size_t workers) {
    ReportRow r;
    r.variant = std::move(variant);
    r.stage = std::move(stage);
    r.workload = {{"bytes", 100}, {"seed", 1}};
    r.parameters = {{"workers", workers}};
    r.repetitions = 1;
    r.times_ns = {static_cast<std::int64_t>(median_ns)};
    r.median_ns = median_ns;
    r.baseline = "shared-atomic";
    r.verdict = "pass";
    return r;
}

} // namespace

TEST(Registry, GolListing) {
    const auto gol = names(list_variants(Task::Gol));
    for (const char* n : {"byte", "row-naive", "row-popc", "row-fulladder", "tile-popc"}) EXPECT_TRUE(gol.count(n)) << n;
    EXPECT_FALSE(gol.count("broken-offbyone"));
    EXPECT_TRUE(names(list_variants(Task::Gol, true)).count("broken-offbyone"));
}

TEST(Registry, HistogramLadderCoversAllStages) {
    std::vector<std::string> stages;
    for (const auto& d : list_variants(Task::Histogram))
        if (d.stage != "oracle") stages.push_back(d.stage);
    EXPECT_EQ(stages, (std::vector<std::string>{"His1", "His2", "His3", "His4", "His5", "His6", "His7"}));
}

TEST(Registry, EveryVariantRunsAndHasAnOracle) {
    for (const auto& d : list_variants(std::nullopt, true)) {
        EXPECT_EQ(oracle_of(d.task).stage, "oracle");
        EXPECT_TRUE(baseline_of(d.task).baseline);
        const bool stage_ok = d.stage == "oracle" || d.stage == "fixture" || d.stage == "GoL2-tiled" ||
                              stage_rank(d.stage) < 999;
        EXPECT_TRUE(stage_ok) << d.stage;
    }
    EXPECT_EQ(baseline_of(Task::Histogram).name, "shared-atomic");
    EXPECT_EQ(baseline_of(Task::Gol).name, "byte");
    EXPECT_EQ(baseline_of(Task::Knn).name, "heap");
}

TEST(Registry, UnknownNames) {
    try {
        parse_task("foo");
        FAIL();
    } catch (const RegistryError& e) {
        EXPECT_NE(std::string(e.what()).find("histogram, gol, knn"), std::string::npos);
    }
    EXPECT_THROW(find_variant(Task::Knn, "nope"), RegistryError);
}

TEST(Registry, StageRankOrdersLadders) {
    EXPECT_LT(stage_rank("oracle"), stage_rank("His1"));
    EXPECT_LT(stage_rank("His2"), stage_rank("His10"));
    EXPECT_LT(stage_rank("GoL2"), stage_rank("GoL2-tiled"));
    EXPECT_LT(stage_rank("GoL2-tiled"), stage_rank("GoL3"));
    EXPECT_LT(stage_rank("kNN7"), stage_rank("fixture"));
}

TEST(Verify, EveryShippedVariantPassesOnSmallInputs) {
    for (const Task t : kTasks) {
        const auto spec = small_spec(t);
        const auto w = make_workload(spec);
        const auto expected = run_oracle(w, spec);
        for (const auto& d : list_variants(t)) {
            KernelParams p;
            p.workers = 3;
            p.items_per_worker = 4;
            const auto v = verify(d, w, spec, p, expected);
            EXPECT_TRUE(v.pass) << d.name << ": " << v.detail;
        }
    }
}

TEST(Verify, OracleAgainstItself) {
    const auto spec = small_spec(Task::Gol);
    const auto w = make_workload(spec);
    const auto v = verify(oracle_of(Task::Gol), w, spec, {}, run_oracle(w, spec));
    EXPECT_TRUE(v.pass);
}

TEST(Verify, BrokenFixtureNamesFirstMismatchingCell) {
    auto spec = small_spec(Task::Gol);
    spec.iters = 1;
    const auto w = make_workload(spec);
    const auto v = verify(find_variant(Task::Gol, "broken-offbyone"), w, spec, {}, run_oracle(w, spec));
    EXPECT_FALSE(v.pass);
    EXPECT_NE(v.detail.find("first mismatching cell: row "), std::string::npos) << v.detail;

    // The fixture reports exactly the first cell in row-major order.
    const auto& g = std::get<gol::ByteGrid>(w);
    const auto good = gol::step_reference(g);
    const auto bad = fixtures::step_offbyone(g);
    std::size_t r = 0, c = 0;
    [&] {
        for (r = 0; r < g.height(); ++r)
            for (c = 0; c < g.width(); ++c)
                if (good.at(r, c) != bad.at(r, c)) return;
    }();
    EXPECT_NE(v.detail.find("row " + std::to_string(r) + ", column " + std::to_string(c)), std::string::npos);
}

TEST(Verify, HistogramAndKnnMismatchDetail) {
    histogram::Histogram a{histogram::CharRange(32, 127), std::vector<histogram::Count>(96)};
    auto b = a;
    b.bins[3] = 1;
    const auto v = compare(a, b);
    EXPECT_FALSE(v.pass);
    EXPECT_NE(v.detail.find("byte 35"), std::string::npos);

    knn::KnnResult x{knn::NeighborList{{{1.0, 2}, {2.0, 5}}}};
    auto y = x;
    y[0].entries[1].index = 6;
    const auto kv = compare(x, y);
    EXPECT_FALSE(kv.pass);
    EXPECT_NE(kv.detail.find("query 0, rank 1"), std::string::npos);
}

TEST(Verify, ParameterErrorsCarryCallContext) {
    const auto spec = small_spec(Task::Histogram);
    const auto w = make_workload(spec);
    KernelParams p;
    p.workers = 0;
    try {
        prepare(find_variant(Task::Histogram, "privatized"), w, spec, p);
        FAIL();
    } catch (const ParameterError& e) {
        EXPECT_NE(std::string(e.what()).find("histogram/privatized"), std::string::npos) << e.what();
    }
    auto gspec = small_spec(Task::Gol);
    gspec.width = 100;
    EXPECT_THROW(make_workload(gspec), ParameterError);
}

TEST(Workload, HexdumpTextIsExactSize) {
    for (const std::size_t n : {0, 1, 2, 3, 47, 48, 1000}) EXPECT_EQ(make_text(3, n, TextKind::Hexdump).size(), n);
}

TEST(Timing, MedianIsTrueMedian) {
    EXPECT_EQ(median({5}), 5.0);
    EXPECT_EQ(median({9, 1, 5}), 5.0);
    EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
    EXPECT_THROW(median({}), ParameterError);
}

TEST(Timing, SingleRepetitionIsItsOwnMedian) {
    const auto spec = small_spec(Task::Histogram);
    const auto w = make_workload(spec);
    const auto r = measure(find_variant(Task::Histogram, "privatized"), w, spec, {}, {1, 0}, "pass");
    ASSERT_EQ(r.times_ns.size(), 1u);
    EXPECT_EQ(r.median_ns, double(r.times_ns[0]));
    EXPECT_EQ(r.work_units, 20000.0);
    EXPECT_EQ(r.baseline, "shared-atomic");
    int calls = 0;
    const auto ns = time_repetitions([&] { ++calls; }, 3, 4);
    EXPECT_EQ(calls, 7);
    EXPECT_EQ(ns.size(), 4u);
    EXPECT_THROW(time_repetitions([] {}, 0, 0), ParameterError);
}

TEST(Report, JsonRoundTrip) {
    BenchReport rep;
    rep.task = "histogram";
    rep.machine = MachineInfo::current();
    rep.rows = {row("shared-atomic", "His1", 100, 8), row("privatized", "His3", 25, 8)};
    rep.rows[1].speedup = 4.0;
    const auto back = parse_report(render_json(rep));
    EXPECT_EQ(render_json(back), render_json(rep));
    EXPECT_EQ(back.machine, rep.machine);
}

TEST(Report, SchemaErrorsCarryFieldPaths) {
    BenchReport rep;
    rep.task = "gol";
    rep.rows = {row("byte", "GoL1", 10, 1), row("row-popc", "GoL4", 5, 1)};
    auto j = to_json(rep);
    j["rows"][1].erase("median_ns");
    try {
        report_from_json(j);
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_EQ(e.path(), "$.rows[1].median_ns");
    }
    j = to_json(rep);
    j["schema"] = 2;
    EXPECT_THROW(report_from_json(j), FormatError);
    j = to_json(rep);
    j["rows"][0]["verdict"] = "maybe";
    try {
        report_from_json(j);
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_EQ(e.path(), "$.rows[0].verdict");
    }
    EXPECT_THROW(parse_report("{\"schema\": 1,"), FormatError);
}

TEST(Report, MergeOrdersStagesAndComputesSpeedups) {
    BenchReport a, b;
    a.task = b.task = "histogram";
    a.rows = {row("multicopy", "His7", 10, 8), row("shared-atomic", "His1", 80, 8)};
    b.rows = {row("privatized", "His3", 20, 8), row("shared-atomic", "His1", 40, 1), row("privatized", "His3", 5, 1)};
    const auto m = merge_reports({a, b});
    ASSERT_EQ(m.rows.size(), 5u);
    EXPECT_EQ(m.rows[0].stage, "His1");
    EXPECT_EQ(m.rows[1].stage, "His1");
    EXPECT_EQ(m.rows.back().stage, "His7");
    // Same-worker baselines are preferred.
    for (const auto& r : m.rows) {
        ASSERT_TRUE(r.speedup.has_value());
        const double base = r.parameters["workers"] == 8 ? 80 : 40;
        EXPECT_DOUBLE_EQ(*r.speedup, base / r.median_ns) << r.variant;
    }
}

TEST(Report, MergeRefusesMixedTasks) {
    BenchReport a, b;
    a.task = "histogram";
    b.task = "gol";
    EXPECT_THROW(merge_reports({a, b}), ParameterError);
    EXPECT_EQ(merge_reports({a, b}, true).task, "mixed");
    EXPECT_THROW(merge_reports({}), ParameterError);
}

TEST(Report, NoBaselineMeansNoSpeedup) {
    std::vector<ReportRow> rows{row("privatized", "His3", 20, 8)};
    rows[0].workload["bytes"] = 7;
    rows.push_back(row("shared-atomic", "His1", 50, 8));
    assign_speedups(rows);
    EXPECT_FALSE(rows[0].speedup.has_value());
    EXPECT_DOUBLE_EQ(*rows[1].speedup, 1.0);
}

TEST(Report, SingleReportRendersIdentically) {
    BenchReport rep;
    rep.task = "histogram";
    rep.rows = {row("shared-atomic", "His1", 80, 8), row("privatized", "His3", 20, 8)};
    assign_speedups(rep.rows);
    const auto merged = merge_reports({rep});
    EXPECT_EQ(render_json(merged), render_json(rep));
}

TEST(Report, CsvAndTable) {
    BenchReport rep;
    rep.task = "histogram";
    rep.rows = {row("shared-atomic", "His1", 80, 8), row("privatized", "His3", 20, 8)};
    assign_speedups(rep.rows);
    const auto csv = render_csv(rep);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_NE(csv.find("histogram,His3,privatized,bytes=100;seed=1,workers=8,1,0,20,"), std::string::npos) << csv;
    const auto table = render_table(rep);
    EXPECT_NE(table.find("4.00x"), std::string::npos);
    EXPECT_LT(table.find("His1"), table.find("His3"));
    EXPECT_THROW(parse_format("xml"), ParameterError);
}
