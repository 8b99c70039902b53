#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ladder/bench/fixtures.hpp"
#include "ladder/bench/params.hpp"
#include "ladder/bench/registry.hpp"
#include "ladder/bench/report.hpp"
#include "ladder/errors.hpp"
#include "ladder/gol/iterate.hpp"
#include "ladder/histogram/variants.hpp"
#include "ladder/knn/serialize.hpp"
#include "ladder/knn/variants.hpp"
#include "ladder/workload/generate.hpp"
#include "ladder/workload/io.hpp"

namespace ladder::bench {

struct KnnInput {
    knn::PointCloud data;
    knn::PointCloud queries;
};

using Workload = std::variant<workload::Bytes, gol::ByteGrid, KnnInput>;
using Output = std::variant<histogram::Histogram, gol::ByteGrid, knn::KnnResult>;

/// Seed of the query cloud relative to the data cloud's seed.
inline constexpr std::uint64_t kQuerySeedOffset = 1;

/// Text of the requested kind, exactly `bytes` long. The hexdump variant is
/// the dump of ceil((bytes+1)/3) lorem bytes cut to size.
inline workload::Bytes make_text(std::uint64_t seed, std::size_t bytes, TextKind kind) {
    if (kind == TextKind::Lorem) return workload::gen_lorem(seed, bytes);
    auto dump = workload::to_hexdump(workload::gen_lorem(seed, (bytes + 3) / 3));
    dump.resize(bytes);
    return dump;
}

inline Workload make_workload(const WorkloadSpec& spec) {
    switch (spec.task) {
    case Task::Histogram: {
        if (spec.input_path) return workload::read_text(*spec.input_path);
        if (spec.repeat_unit == 0) return make_text(spec.seed, spec.bytes, spec.text_kind);
        return workload::repeat_to_size(make_text(spec.seed, spec.repeat_unit, spec.text_kind), spec.bytes);
    }
    case Task::Gol:
        if (spec.input_path) return workload::read_grid(*spec.input_path);
        return workload::gen_grid(spec.seed, spec.width, spec.height, spec.density);
    case Task::Knn: {
        KnnInput in;
        in.data = spec.input_path ? workload::read_points(*spec.input_path) : workload::gen_points(spec.seed, spec.n);
        in.queries = spec.queries_path ? workload::read_points(*spec.queries_path)
                                       : workload::gen_points(spec.seed + kQuerySeedOffset, spec.m);
        return in;
    }
    }
    throw RegistryError("unknown task");
}

/// Input description recorded with every report row.
inline json describe_workload(const WorkloadSpec& spec, const Workload& w) {
    json j;
    j["seed"] = spec.seed;
    switch (spec.task) {
    case Task::Histogram:
        j["bytes"] = std::get<workload::Bytes>(w).size();
        j["range_from"] = spec.range_from;
        j["range_to"] = spec.range_to;
        j["text"] = spec.input_path ? *spec.input_path : std::string(to_string(spec.text_kind));
        if (spec.repeat_unit) j["repeat_unit"] = spec.repeat_unit;
        break;
    case Task::Gol: {
        const auto& g = std::get<gol::ByteGrid>(w);
        j["width"] = g.width();
        j["height"] = g.height();
        j["iters"] = spec.iters;
        if (spec.input_path)
            j["input"] = *spec.input_path;
        else
            j["density"] = spec.density;
        break;
    }
    case Task::Knn: {
        const auto& in = std::get<KnnInput>(w);
        j["n"] = in.data.size();
        j["m"] = in.queries.size();
        j["k"] = spec.k;
        break;
    }
    }
    return j;
}

inline json describe_params(const VariantDescriptor& d, const KernelParams& p, const WorkloadSpec& spec) {
    json j = json::object();
    for (const auto& f : d.flags) {
        if (f == "--workers") j["workers"] = p.workers;
        if (f == "--items-per-worker") j["items_per_worker"] = p.items_per_worker;
        if (f == "--pattern") j["pattern"] = std::string(histogram::to_string(p.pattern));
        if (f == "--batch-size") j["batch_size"] = p.batch_size ? p.batch_size : spec.k;
    }
    return j;
}

namespace detail {

inline histogram::Histogram run_histogram(const std::string& name, histogram::TextView text,
                                          const histogram::CharRange& range, const KernelParams& p) {
    using namespace histogram;
    if (name == "reference") return histogram_reference(text, range);
    if (name == "shared-atomic") return histogram_shared_atomic(text, range, p.workers);
    if (name == "privatized-atomic") return histogram_privatized_atomic(text, range, p.workers);
    if (name == "privatized") return histogram_privatized(text, range, p.workers);
    if (name == "multiitem") return histogram_multiitem(text, range, p.workers, p.items_per_worker, p.pattern);
    if (name == "multicopy-copymajor")
        return histogram_multicopy<CopyMajorCopies>(text, range, p.workers, p.items_per_worker, p.pattern);
    if (name == "multicopy-padded")
        return histogram_multicopy<PaddedCopies>(text, range, p.workers, p.items_per_worker, p.pattern);
    if (name == "multicopy")
        return histogram_multicopy<StridedCopies>(text, range, p.workers, p.items_per_worker, p.pattern);
    throw RegistryError("no histogram entry point for '" + name + "'");
}

inline knn::KnnResult run_knn(const std::string& name, const KnnInput& in, std::size_t k, const KernelParams& p) {
    const std::size_t batch = p.batch_size ? p.batch_size : k;
    if (name == "reference") return knn::knn_reference(in.data, in.queries, k, p.workers);
    if (name == "heap") return knn::knn_heap(in.data, in.queries, k, p.workers);
    if (name == "sorted-insert") return knn::knn_sorted_insert(in.data, in.queries, k, p.workers);
    if (name == "buffered-sort")
        return knn::knn_buffered(in.data, in.queries, k, batch, p.workers, knn::FlushMethod::LibrarySort);
    if (name == "buffered") return knn::knn_buffered(in.data, in.queries, k, batch, p.workers);
    throw RegistryError("no kNN entry point for '" + name + "'");
}

inline std::string describe_call(const VariantDescriptor& d, const KernelParams& p, const WorkloadSpec& spec) {
    return std::string(to_string(d.task)) + "/" + d.name + " " + flatten(describe_params(d, p, spec));
}

} // namespace detail

/// A variant bound to its input with all encoding done up front. `kernel`
/// performs only the timed computation; `result` runs it once more and
/// decodes the output.
struct PreparedRun {
    std::function<void()> kernel;
    std::function<Output()> result;
};

inline PreparedRun prepare(const VariantDescriptor& d, const Workload& w, const WorkloadSpec& spec,
                           const KernelParams& p) {
    try {
        switch (d.task) {
        case Task::Histogram: {
            const auto& text = std::get<workload::Bytes>(w);
            const histogram::CharRange range(spec.range_from, spec.range_to);
            auto run = [name = d.name, &text, range, p] { return detail::run_histogram(name, text, range, p); };
            histogram::detail::require_workers(p.workers);
            histogram::detail::require_items(p.items_per_worker);
            return {[run] { (void)run(); }, [run] { return Output(run()); }};
        }
        case Task::Gol: {
            const auto& grid = std::get<gol::ByteGrid>(w);
            if (d.name == "broken-offbyone") {
                auto run = [&grid, n = spec.iters] { return gol::run_iterations(grid, n, fixtures::step_offbyone); };
                return {[run] { (void)run(); }, [run] { return Output(run()); }};
            }
            const auto v = gol::parse_step_variant(d.name);
            auto encoded = std::make_shared<gol::EncodedGrid>(grid, gol::step_variant_info(v).encoding);
            auto run = [encoded, v, n = spec.iters, workers = p.workers] {
                return encoded->advanced(v, n, workers);
            };
            return {[run] { (void)run(); }, [run] { return Output(run().decode()); }};
        }
        case Task::Knn: {
            const auto& in = std::get<KnnInput>(w);
            knn::detail::validate_problem(in.data, in.queries, spec.k);
            auto run = [name = d.name, &in, k = spec.k, p] { return detail::run_knn(name, in, k, p); };
            return {[run] { (void)run(); }, [run] { return Output(run()); }};
        }
        }
    } catch (const FormatError&) {
        throw;
    } catch (const ParameterError& e) {
        throw ParameterError(detail::describe_call(d, p, spec) + ": " + e.what());
    }
    throw RegistryError("unknown task");
}

inline Output run_variant(const VariantDescriptor& d, const Workload& w, const WorkloadSpec& spec,
                          const KernelParams& p) {
    return prepare(d, w, spec, p).result();
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

/// Exact comparison; on mismatch `detail` names the first divergence.
inline Verdict compare(const Output& expected, const Output& actual) {
    if (expected.index() != actual.index()) return {false, "outputs are of different kinds"};
    std::ostringstream os;
    if (const auto* e = std::get_if<histogram::Histogram>(&expected)) {
        const auto& a = std::get<histogram::Histogram>(actual);
        if (!(e->range == a.range) || e->bins.size() != a.bins.size()) return {false, "histogram ranges differ"};
        for (std::size_t i = 0; i < e->bins.size(); ++i)
            if (e->bins[i] != a.bins[i]) {
                os << "first mismatching bin: byte " << (e->range.from() + i) << " expected " << e->bins[i]
                   << ", got " << a.bins[i];
                return {false, os.str()};
            }
        return {true, "all " + std::to_string(e->bins.size()) + " bins equal"};
    }
    if (const auto* e = std::get_if<gol::ByteGrid>(&expected)) {
        const auto& a = std::get<gol::ByteGrid>(actual);
        if (e->width() != a.width() || e->height() != a.height()) return {false, "grid dimensions differ"};
        for (std::size_t r = 0; r < e->height(); ++r)
            for (std::size_t c = 0; c < e->width(); ++c)
                if (e->at(r, c) != a.at(r, c)) {
                    os << "first mismatching cell: row " << r << ", column " << c << " expected "
                       << int(e->at(r, c)) << ", got " << int(a.at(r, c));
                    return {false, os.str()};
                }
        return {true, "all " + std::to_string(e->cell_count()) + " cells equal"};
    }
    const auto& e = std::get<knn::KnnResult>(expected);
    const auto& a = std::get<knn::KnnResult>(actual);
    if (e.size() != a.size()) return {false, "query counts differ"};
    for (std::size_t q = 0; q < e.size(); ++q) {
        if (e[q].k() != a[q].k()) {
            os << "query " << q << ": list lengths differ";
            return {false, os.str()};
        }
        for (std::size_t i = 0; i < e[q].k(); ++i) {
            const auto& x = e[q].entries[i];
            const auto& y = a[q].entries[i];
            if (!(x == y)) {
                os << "first mismatching neighbor: query " << q << ", rank " << i << " expected (" << x.index << ", "
                   << knn::format_distance(x.distance) << "), got (" << y.index << ", "
                   << knn::format_distance(y.distance) << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, "all " + std::to_string(e.size()) + " neighbor lists equal"};
}

inline Verdict verify(const VariantDescriptor& d, const Workload& w, const WorkloadSpec& spec, const KernelParams& p,
                      const Output& oracle_output) {
    return compare(oracle_output, run_variant(d, w, spec, p));
}

inline Output run_oracle(const Workload& w, const WorkloadSpec& spec) {
    KernelParams p;
    p.workers = 1;
    return run_variant(oracle_of(spec.task), w, spec, p);
}

/// Wall time of each timed repetition in nanoseconds, after `warmups`
/// untimed calls, on the steady clock.
template <typename Fn>
std::vector<std::int64_t> time_repetitions(Fn&& fn, std::size_t warmups, std::size_t repeats) {
    if (repeats == 0) throw ParameterError("repeat count must be at least 1");
    for (std::size_t i = 0; i < warmups; ++i) fn();
    std::vector<std::int64_t> ns;
    ns.reserve(repeats);
    for (std::size_t i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    return ns;
}

/// Units of work one kernel call performs and their name.
inline std::pair<double, std::string> work_units(const WorkloadSpec& spec, const Workload& w) {
    switch (spec.task) {
    case Task::Histogram: return {double(std::get<workload::Bytes>(w).size()), "bytes/s"};
    case Task::Gol: {
        const auto& g = std::get<gol::ByteGrid>(w);
        return {double(g.cell_count()) * double(spec.iters), "cell-updates/s"};
    }
    case Task::Knn: {
        const auto& in = std::get<KnnInput>(w);
        return {double(in.data.size()) * double(in.queries.size()), "point-query pairs/s"};
    }
    }
    return {0, ""};
}

struct TimingConfig {
    std::size_t repeat = 10;
    std::size_t warmup = 3;
};

/// Times one prepared variant and fills a report row. `verdict` is recorded
/// as given.
inline ReportRow measure(const VariantDescriptor& d, const Workload& w, const WorkloadSpec& spec,
                         const KernelParams& p, const TimingConfig& cfg, const std::string& verdict) {
    const PreparedRun run = prepare(d, w, spec, p);
    ReportRow row;
    row.variant = d.name;
    row.stage = d.stage;
    row.workload = describe_workload(spec, w);
    row.parameters = describe_params(d, p, spec);
    row.repetitions = cfg.repeat;
    row.warmups = cfg.warmup;
    row.times_ns = time_repetitions(run.kernel, cfg.warmup, cfg.repeat);
    row.median_ns = median(row.times_ns);
    const auto [units, unit_name] = work_units(spec, w);
    row.work_units = units;
    row.throughput_unit = unit_name;
    row.throughput = row.median_ns > 0 ? units / (row.median_ns * 1e-9) : 0.0;
    row.normalized_ns = units > 0 ? row.median_ns / units : 0.0;
    row.baseline = baseline_of(d.task).name;
    row.verdict = verdict;
    return row;
}

} // namespace ladder::bench
