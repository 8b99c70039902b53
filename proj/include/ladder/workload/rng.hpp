#pragma once

#include <cstdint>
#include <random>

namespace ladder::workload {

/// Seeded stream over std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Derived values use only the arithmetic below (never the
/// implementation-defined std:: distributions), so a seed reproduces the
/// same bytes on every platform.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits: (next() >> 11) * 2^-53.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n) by 128-bit multiply-high: (next() * n) >> 64.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Uniform in [lo, hi] inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 engine_;
};

} // namespace ladder::workload
