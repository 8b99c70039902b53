#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ladder/errors.hpp"

namespace ladder::histogram {

using Count = std::uint64_t;
using TextView = std::span<const std::uint8_t>;

/// Inclusive byte-value range [from, to].
class CharRange {
public:
    CharRange(unsigned from, unsigned to) {
        if (from > 255 || to > 255 || from > to)
            throw ParameterError("invalid character range " + std::to_string(from) + ".." + std::to_string(to));
        from_ = static_cast<std::uint8_t>(from);
        to_ = static_cast<std::uint8_t>(to);
    }

    std::uint8_t from() const noexcept { return from_; }
    std::uint8_t to() const noexcept { return to_; }
    std::size_t bin_count() const noexcept { return std::size_t{to_} - from_ + 1; }

    bool contains(std::uint8_t c) const noexcept { return c >= from_ && c <= to_; }

    /// Bin of byte `c`, or bin_count() when `c` is out of range. Bytes below
    /// `from` wrap to at least 256 - from >= bin_count(), so one unsigned
    /// compare covers both ends.
    std::size_t bin_of(std::uint8_t c) const noexcept {
        const std::size_t b = static_cast<std::uint8_t>(c - from_);
        return b < bin_count() ? b : bin_count();
    }

    friend bool operator==(const CharRange&, const CharRange&) = default;

private:
    std::uint8_t from_ = 0;
    std::uint8_t to_ = 0;
};

/// Bin i counts occurrences of byte value from + i.
struct Histogram {
    explicit Histogram(CharRange r) : range(r), bins(r.bin_count(), 0) {}
    Histogram(CharRange r, std::vector<Count> b) : range(r), bins(std::move(b)) {
        if (bins.size() != range.bin_count()) throw ParameterError("histogram bin count does not match its range");
    }

    CharRange range;
    std::vector<Count> bins;

    Count total() const noexcept {
        Count s = 0;
        for (auto b : bins) s += b;
        return s;
    }

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// "<byteValue>\t<count>\n" per bin, byte values ascending.
inline std::string serialize(const Histogram& h) {
    std::string out;
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
        out += std::to_string(static_cast<unsigned>(h.range.from()) + i);
        out += '\t';
        out += std::to_string(h.bins[i]);
        out += '\n';
    }
    return out;
}

} // namespace ladder::histogram
