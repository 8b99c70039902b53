#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/bench/params.hpp"
#include "ladder/errors.hpp"

namespace ladder::bench {

/// One runnable kernel variant and the ladder stage it implements.
struct VariantDescriptor {
    Task task;
    std::string name;
    /// His1..His7, GoL1..GoL6, GoL2-tiled, kNN1..kNN8, "oracle", or "fixture".
    std::string stage;
    std::vector<std::string> flags;
    std::string summary;
    bool baseline = false;
    /// Deliberately broken variants used to self-test the harness; hidden
    /// from listings and sweeps.
    bool fixture = false;
};

namespace detail {

inline std::vector<VariantDescriptor> build_registry() {
    using T = Task;
    const std::vector<std::string> w{"--workers"};
    const std::vector<std::string> wip{"--workers", "--items-per-worker", "--pattern"};
    const std::vector<std::string> wb{"--workers", "--batch-size"};
    return {
        {T::Histogram, "reference", "oracle", {}, "sequential count", false, false},
        {T::Histogram, "shared-atomic", "His1", w, "one shared bin array, atomic increment per byte", true, false},
        {T::Histogram, "privatized-atomic", "His2", w, "per-worker copy with atomic increments, full merge", false, false},
        {T::Histogram, "privatized", "His3", w, "per-worker plain copy, merge skips zero bins", false, false},
        {T::Histogram, "multiitem", "His4", wip, "privatized, items-per-worker chunks in a chosen pattern", false, false},
        {T::Histogram, "multicopy-copymajor", "His5", wip, "32 copies, copy c at offset c*bins + i", false, false},
        {T::Histogram, "multicopy-padded", "His6", wip, "32 copies, copy c at offset c*(bins+1) + i", false, false},
        {T::Histogram, "multicopy", "His7", wip, "32 copies, value i of copy c at offset i*32 + c", false, false},

        {T::Gol, "reference", "oracle", {}, "rule-level per-cell oracle", false, false},
        {T::Gol, "byte", "GoL1", w, "one byte per cell", true, false},
        {T::Gol, "row-percell", "GoL2", w, "row-packed bits, one cell at a time", false, false},
        {T::Gol, "tile-popc", "GoL2-tiled", w, "8x8 tile per word, popcount of 3x3 mask", false, false},
        {T::Gol, "row-naive", "GoL3", w, "one word at a time, individual bit tests", false, false},
        {T::Gol, "row-popc", "GoL4", w, "one word at a time, popcount of 3x3 mask", false, false},
        {T::Gol, "row-vecadd", "GoL5", w, "64 cells at once, bit-sliced ripple counter", false, false},
        {T::Gol, "row-fulladder", "GoL6", w, "64 cells at once, carry-save full adders", false, false},
        {T::Gol, "broken-offbyone", "fixture", w, "drops the south-east neighbor (harness self-test)", false, true},

        {T::Knn, "reference", "oracle", {}, "all distances, partial sort", false, false},
        {T::Knn, "heap", "kNN1", w, "per-query binary max-heap", true, false},
        {T::Knn, "sorted-insert", "kNN2", w, "sorted top-k array, insertion per candidate", false, false},
        {T::Knn, "buffered-sort", "kNN6", wb, "candidate buffer, library sort and merge", false, false},
        {T::Knn, "buffered", "kNN7", wb, "candidate buffer, bitonic sort and bitonic merge", false, false},
    };
}

} // namespace detail

inline const std::vector<VariantDescriptor>& registry() {
    static const std::vector<VariantDescriptor> r = detail::build_registry();
    return r;
}

/// Position of a stage label in its ladder; the oracle sorts first.
inline int stage_rank(std::string_view stage) {
    if (stage == "oracle") return 0;
    if (stage == "fixture") return 1000;
    if (stage == "GoL2-tiled") return 25;
    for (const std::string_view prefix : {"His", "GoL", "kNN"})
        if (stage.starts_with(prefix)) {
            int n = 0;
            for (const char c : stage.substr(prefix.size())) {
                if (c < '0' || c > '9') return 999;
                n = n * 10 + (c - '0');
            }
            return n * 10;
        }
    return 999;
}

/// Registered variants, optionally restricted to one task, in ladder order.
inline std::vector<VariantDescriptor> list_variants(std::optional<Task> task = std::nullopt,
                                                    bool include_fixtures = false) {
    std::vector<VariantDescriptor> out;
    for (const auto& d : registry())
        if ((!task || d.task == *task) && (include_fixtures || !d.fixture)) out.push_back(d);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.task != b.task) return a.task < b.task;
        return stage_rank(a.stage) < stage_rank(b.stage);
    });
    return out;
}

inline const VariantDescriptor& find_variant(Task task, std::string_view name) {
    for (const auto& d : registry())
        if (d.task == task && d.name == name) return d;
    std::string valid;
    for (const auto& d : list_variants(task, true)) valid += (valid.empty() ? "" : ", ") + d.name;
    throw RegistryError("unknown " + std::string(to_string(task)) + " variant '" + std::string(name) +
                        "' (valid: " + valid + ")");
}

inline const VariantDescriptor& oracle_of(Task task) { return find_variant(task, "reference"); }

inline const VariantDescriptor& baseline_of(Task task) {
    for (const auto& d : registry())
        if (d.task == task && d.baseline) return d;
    throw RegistryError("task has no baseline variant");
}

} // namespace ladder::bench
