#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>

#include "ladder/errors.hpp"
#include "ladder/histogram/variants.hpp"

namespace ladder::bench {

enum class Task { Histogram, Gol, Knn };

inline constexpr std::array<Task, 3> kTasks{Task::Histogram, Task::Gol, Task::Knn};

inline std::string_view to_string(Task t) noexcept {
    switch (t) {
    case Task::Histogram: return "histogram";
    case Task::Gol: return "gol";
    case Task::Knn: return "knn";
    }
    return "?";
}

inline Task parse_task(std::string_view s) {
    for (const Task t : kTasks)
        if (to_string(t) == s) return t;
    throw RegistryError("unknown task '" + std::string(s) + "' (valid: histogram, gol, knn)");
}

enum class TextKind { Lorem, Hexdump };

inline std::string_view to_string(TextKind k) noexcept { return k == TextKind::Lorem ? "lorem" : "hexdump"; }

inline TextKind parse_text_kind(std::string_view s) {
    if (s == "lorem") return TextKind::Lorem;
    if (s == "hexdump") return TextKind::Hexdump;
    throw ParameterError("unknown text kind '" + std::string(s) + "' (valid: lorem, hexdump)");
}

inline constexpr std::size_t kMiB = std::size_t{1} << 20;

/// What to generate (or load) as the input of one task.
struct WorkloadSpec {
    Task task = Task::Histogram;
    std::uint64_t seed = 1;

    // histogram
    std::size_t bytes = 256 * kMiB;
    unsigned range_from = 32;
    unsigned range_to = 127;
    TextKind text_kind = TextKind::Lorem;
    /// Generate `repeat_unit` bytes and tile them up to `bytes`; 0 generates
    /// `bytes` directly.
    std::size_t repeat_unit = 0;

    // gol
    std::size_t width = 4096;
    std::size_t height = 4096;
    double density = 0.5;
    std::size_t iters = 20;

    // knn
    std::size_t n = std::size_t{1} << 20;
    std::size_t m = 256;
    std::size_t k = 64;

    // optional files replacing generation
    std::optional<std::string> input_path;
    std::optional<std::string> queries_path;
};

inline std::size_t default_workers() noexcept {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Knobs of the kernel itself, as opposed to its input.
struct KernelParams {
    std::size_t workers = default_workers();
    std::size_t items_per_worker = 16;
    histogram::IterationPattern pattern = histogram::IterationPattern::ContiguousBlock;
    /// 0 means "use k".
    std::size_t batch_size = 0;
};

} // namespace ladder::bench
