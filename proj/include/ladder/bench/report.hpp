#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/utsname.h>

#include "ladder/bench/params.hpp"
#include "ladder/bench/registry.hpp"
#include "ladder/errors.hpp"

// Benchmark report records and their JSON / CSV / table renderings.
//
// JSON (schema 1):
//   { "schema": 1, "task": str, "timing_scope": str,
//     "machine": { "os": str, "release": str, "arch": str,
//                  "hardware_threads": int, "compiler": str },
//     "rows": [ { "variant": str, "stage": str,
//                 "workload": {str: scalar}, "parameters": {str: scalar},
//                 "repetitions": int, "warmups": int, "times_ns": [int],
//                 "median_ns": num, "work_units": num,
//                 "throughput": num, "throughput_unit": str,
//                 "normalized_ns": num, "baseline": str,
//                 "speedup": num | null, "verdict": "pass"|"fail"|"skipped" } ] }
namespace ladder::bench {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kTimingScope =
    "kernel computation only; inputs generated, encoded and resident in memory before timing";

struct MachineInfo {
    std::string os;
    std::string release;
    std::string arch;
    unsigned hardware_threads = 0;
    std::string compiler;

    static MachineInfo current() {
        MachineInfo m;
        utsname u{};
        if (uname(&u) == 0) {
            m.os = u.sysname;
            m.release = u.release;
            m.arch = u.machine;
        }
        m.hardware_threads = std::thread::hardware_concurrency();
#if defined(__clang__)
        m.compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
        m.compiler = "gcc " __VERSION__;
#else
        m.compiler = "unknown";
#endif
        return m;
    }

    friend bool operator==(const MachineInfo&, const MachineInfo&) = default;
};

struct ReportRow {
    std::string variant;
    std::string stage;
    json workload = json::object();
    json parameters = json::object();
    std::size_t repetitions = 0;
    std::size_t warmups = 0;
    std::vector<std::int64_t> times_ns;
    double median_ns = 0;
    double work_units = 0;
    double throughput = 0;
    std::string throughput_unit;
    double normalized_ns = 0;
    std::string baseline;
    std::optional<double> speedup;
    std::string verdict;
};

struct BenchReport {
    int schema = kSchemaVersion;
    std::string task;
    std::string timing_scope = kTimingScope;
    MachineInfo machine;
    std::vector<ReportRow> rows;
};

/// True median: middle element, or the mean of the two middle elements.
inline double median(std::vector<std::int64_t> values) {
    if (values.empty()) throw ParameterError("median of no values");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return static_cast<double>(values[n / 2]);
    return (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2.0;
}

inline json to_json(const MachineInfo& m) {
    return {{"os", m.os}, {"release", m.release}, {"arch", m.arch}, {"hardware_threads", m.hardware_threads},
            {"compiler", m.compiler}};
}

inline json to_json(const ReportRow& r) {
    json j = {{"variant", r.variant},
              {"stage", r.stage},
              {"workload", r.workload},
              {"parameters", r.parameters},
              {"repetitions", r.repetitions},
              {"warmups", r.warmups},
              {"times_ns", r.times_ns},
              {"median_ns", r.median_ns},
              {"work_units", r.work_units},
              {"throughput", r.throughput},
              {"throughput_unit", r.throughput_unit},
              {"normalized_ns", r.normalized_ns},
              {"baseline", r.baseline},
              {"speedup", nullptr},
              {"verdict", r.verdict}};
    if (r.speedup) j["speedup"] = *r.speedup;
    return j;
}

inline json to_json(const BenchReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    return {{"schema", rep.schema},
            {"task", rep.task},
            {"timing_scope", rep.timing_scope},
            {"machine", to_json(rep.machine)},
            {"rows", std::move(rows)}};
}

namespace detail {

inline const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw FormatError("expected an object", path);
    const auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(std::string("missing field '") + key + "'", path + "." + key);
    return *it;
}

inline std::string get_string(const json& obj, const char* key, const std::string& path) {
    const auto& v = field(obj, key, path);
    if (!v.is_string()) throw FormatError("expected a string", path + "." + key);
    return v.get<std::string>();
}

inline double get_number(const json& obj, const char* key, const std::string& path) {
    const auto& v = field(obj, key, path);
    if (!v.is_number()) throw FormatError("expected a number", path + "." + key);
    return v.get<double>();
}

inline std::uint64_t get_count(const json& obj, const char* key, const std::string& path) {
    const auto& v = field(obj, key, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw FormatError("expected a non-negative integer", path + "." + key);
    return v.get<std::uint64_t>();
}

inline const json& get_scalar_object(const json& obj, const char* key, const std::string& path) {
    const auto& v = field(obj, key, path);
    if (!v.is_object()) throw FormatError("expected an object", path + "." + key);
    for (const auto& [k, x] : v.items())
        if (!x.is_primitive() || x.is_null()) throw FormatError("expected a scalar", path + "." + key + "." + k);
    return v;
}

} // namespace detail

inline ReportRow row_from_json(const json& j, const std::string& path) {
    using namespace detail;
    ReportRow r;
    r.variant = get_string(j, "variant", path);
    r.stage = get_string(j, "stage", path);
    r.workload = get_scalar_object(j, "workload", path);
    r.parameters = get_scalar_object(j, "parameters", path);
    r.repetitions = get_count(j, "repetitions", path);
    r.warmups = get_count(j, "warmups", path);
    const auto& times = field(j, "times_ns", path);
    if (!times.is_array()) throw FormatError("expected an array", path + ".times_ns");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!times[i].is_number_integer())
            throw FormatError("expected an integer", path + ".times_ns[" + std::to_string(i) + "]");
        r.times_ns.push_back(times[i].get<std::int64_t>());
    }
    if (r.times_ns.size() != r.repetitions)
        throw FormatError("times_ns holds " + std::to_string(r.times_ns.size()) + " entries for " +
                              std::to_string(r.repetitions) + " repetitions",
                          path + ".times_ns");
    r.median_ns = get_number(j, "median_ns", path);
    r.work_units = get_number(j, "work_units", path);
    r.throughput = get_number(j, "throughput", path);
    r.throughput_unit = get_string(j, "throughput_unit", path);
    r.normalized_ns = get_number(j, "normalized_ns", path);
    r.baseline = get_string(j, "baseline", path);
    const auto& s = field(j, "speedup", path);
    if (!s.is_null() && !s.is_number()) throw FormatError("expected a number or null", path + ".speedup");
    if (s.is_number()) r.speedup = s.get<double>();
    r.verdict = get_string(j, "verdict", path);
    if (r.verdict != "pass" && r.verdict != "fail" && r.verdict != "skipped")
        throw FormatError("verdict must be pass, fail or skipped", path + ".verdict");
    return r;
}

/// Parses and validates a schema-1 report; errors name the offending field.
inline BenchReport report_from_json(const json& j) {
    using namespace detail;
    const std::string root = "$";
    BenchReport rep;
    const auto& schema = field(j, "schema", root);
    if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion)
        throw FormatError("unsupported schema version, expected 1", root + ".schema");
    rep.task = get_string(j, "task", root);
    parse_task(rep.task);
    rep.timing_scope = get_string(j, "timing_scope", root);
    const auto& m = field(j, "machine", root);
    const std::string mp = root + ".machine";
    rep.machine.os = get_string(m, "os", mp);
    rep.machine.release = get_string(m, "release", mp);
    rep.machine.arch = get_string(m, "arch", mp);
    rep.machine.hardware_threads = static_cast<unsigned>(get_count(m, "hardware_threads", mp));
    rep.machine.compiler = get_string(m, "compiler", mp);
    const auto& rows = field(j, "rows", root);
    if (!rows.is_array()) throw FormatError("expected an array", root + ".rows");
    for (std::size_t i = 0; i < rows.size(); ++i)
        rep.rows.push_back(row_from_json(rows[i], root + ".rows[" + std::to_string(i) + "]"));
    return rep;
}

inline BenchReport parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what(), static_cast<std::uint64_t>(e.byte));
    }
    return report_from_json(j);
}

/// Ladder order, then variant name; the sort is stable so sweeps keep their
/// run order.
inline void sort_rows(std::vector<ReportRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        const int ra = stage_rank(a.stage), rb = stage_rank(b.stage);
        if (ra != rb) return ra < rb;
        return a.variant < b.variant;
    });
}

/// Fills every row's speedup from the baseline row measured on the same
/// workload, preferring one with the same worker count. Rows without a
/// matching baseline get no speedup.
inline void assign_speedups(std::vector<ReportRow>& rows) {
    for (auto& r : rows) {
        const ReportRow* best = nullptr;
        for (const auto& b : rows) {
            if (b.variant != r.baseline || b.workload != r.workload || b.median_ns <= 0) continue;
            const bool same_workers = b.parameters.value("workers", json()) == r.parameters.value("workers", json());
            if (!best || same_workers) best = &b;
            if (same_workers) break;
        }
        if (best && r.median_ns > 0)
            r.speedup = best->median_ns / r.median_ns;
        else
            r.speedup.reset();
    }
}

/// Merges several reports into one stage-ordered report. Reports for
/// different tasks are refused unless `allow_mixed`.
inline BenchReport merge_reports(const std::vector<BenchReport>& reports, bool allow_mixed = false) {
    if (reports.empty()) throw ParameterError("no reports to merge");
    BenchReport out;
    out.task = reports.front().task;
    out.machine = reports.front().machine;
    out.timing_scope = reports.front().timing_scope;
    for (const auto& rep : reports) {
        if (rep.task != out.task) {
            if (!allow_mixed)
                throw ParameterError("reports mix tasks '" + out.task + "' and '" + rep.task +
                                     "' (pass --allow-mixed to combine them)");
            out.task = "mixed";
        }
        out.rows.insert(out.rows.end(), rep.rows.begin(), rep.rows.end());
    }
    sort_rows(out.rows);
    assign_speedups(out.rows);
    return out;
}

inline std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// "key=value;key=value" in key order.
inline std::string flatten(const json& obj) {
    std::string s;
    for (const auto& [k, v] : obj.items()) s += (s.empty() ? "" : ";") + k + "=" + scalar_text(v);
    return s;
}

inline std::string render_json(const BenchReport& rep) { return to_json(rep).dump(2) + "\n"; }

inline constexpr const char* kCsvHeader =
    "task,stage,variant,workload,parameters,repetitions,warmups,median_ns,work_units,throughput,"
    "throughput_unit,normalized_ns,baseline,speedup,verdict";

inline std::string render_csv(const BenchReport& rep) {
    const auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (const char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    const auto num = [](double d) {
        std::ostringstream os;
        os << std::setprecision(17) << d;
        return os.str();
    };
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : rep.rows) {
        out += quote(rep.task) + "," + quote(r.stage) + "," + quote(r.variant) + "," + quote(flatten(r.workload)) +
               "," + quote(flatten(r.parameters)) + "," + std::to_string(r.repetitions) + "," +
               std::to_string(r.warmups) + "," + num(r.median_ns) + "," + num(r.work_units) + "," +
               num(r.throughput) + "," + quote(r.throughput_unit) + "," + num(r.normalized_ns) + "," +
               quote(r.baseline) + "," + (r.speedup ? num(*r.speedup) : std::string()) + "," + r.verdict + "\n";
    }
    return out;
}

inline std::string render_table(const BenchReport& rep) {
    const std::vector<std::string> head{"stage", "variant", "parameters", "median ms", "throughput", "speedup",
                                        "verdict"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rep.rows) {
        std::ostringstream ms, tp, sp;
        ms << std::fixed << std::setprecision(3) << r.median_ns / 1e6;
        tp << std::scientific << std::setprecision(3) << r.throughput << " " << r.throughput_unit;
        if (r.speedup)
            sp << std::fixed << std::setprecision(2) << *r.speedup << "x";
        else
            sp << "-";
        cells.push_back({r.stage, r.variant, flatten(r.parameters), ms.str(), tp.str(), sp.str(), r.verdict});
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    const auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t c = 0; c < row.size(); ++c) {
            s += row[c] + std::string(width[c] - row[c].size(), ' ');
            if (c + 1 < row.size()) s += "  ";
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    std::string out = "task: " + rep.task + "\n";
    out += "machine: " + rep.machine.os + " " + rep.machine.release + " " + rep.machine.arch + ", " +
           std::to_string(rep.machine.hardware_threads) + " hardware threads, " + rep.machine.compiler + "\n";
    out += "timing: " + rep.timing_scope + "\n\n";
    out += line(head);
    std::vector<std::string> rule;
    for (const auto w : width) rule.push_back(std::string(w, '-'));
    out += line(rule);
    for (const auto& row : cells) out += line(row);
    return out;
}

enum class OutputFormat { Table, Csv, Json };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw ParameterError("unknown format '" + std::string(s) + "' (valid: table, csv, json)");
}

inline std::string render(const BenchReport& rep, OutputFormat f) {
    switch (f) {
    case OutputFormat::Table: return render_table(rep);
    case OutputFormat::Csv: return render_csv(rep);
    case OutputFormat::Json: break;
    }
    return render_json(rep);
}

} // namespace ladder::bench
