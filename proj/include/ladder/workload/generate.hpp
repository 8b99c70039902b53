#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ladder/errors.hpp"
#include "ladder/gol/grid.hpp"
#include "ladder/knn/types.hpp"
#include "ladder/workload/rng.hpp"

namespace ladder::workload {

using Bytes = std::vector<std::uint8_t>;

/// Text profile of gen_lorem. All draws come from one SeededStream in the
/// order they are listed:
///   sentence: words = between(4, 12)
///   word:     length = between(2, 12), then each letter = kLoremLetters[below(20)]
/// The first word of a sentence is capitalized and the last one ends with
/// '.'. Words are joined by a space, or by '\n' when the word (with its
/// period) would run past column 80. Output is cut at exactly `bytes`.
inline constexpr char kLoremLetters[] = "abcdefghilmnopqrstuv";
inline constexpr std::size_t kLoremLineWidth = 80;

inline Bytes gen_lorem(std::uint64_t seed, std::size_t bytes) {
    Bytes out;
    out.reserve(bytes + 16);
    SeededStream rng(seed);
    std::size_t column = 0;
    std::string word;
    while (out.size() < bytes) {
        const auto words = rng.between(4, 12);
        for (std::uint64_t w = 0; w < words && out.size() < bytes; ++w) {
            const auto len = rng.between(2, 12);
            word.clear();
            for (std::uint64_t i = 0; i < len; ++i) word += kLoremLetters[rng.below(20)];
            if (w == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
            if (w + 1 == words) word += '.';
            if (column > 0) {
                if (column + 1 + word.size() > kLoremLineWidth) {
                    out.push_back('\n');
                    column = 0;
                } else {
                    out.push_back(' ');
                    ++column;
                }
            }
            out.insert(out.end(), word.begin(), word.end());
            column += word.size();
        }
    }
    out.resize(bytes);
    return out;
}

/// Two lowercase hex digits per byte, one space between bytes of a line,
/// '\n' after every 16th byte.
inline Bytes to_hexdump(std::span<const std::uint8_t> text) {
    static constexpr char kDigits[] = "0123456789abcdef";
    Bytes out;
    out.reserve(text.size() * 3);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i % 16 != 0) out.push_back(' ');
        out.push_back(static_cast<std::uint8_t>(kDigits[text[i] >> 4]));
        out.push_back(static_cast<std::uint8_t>(kDigits[text[i] & 0xF]));
        if (i % 16 == 15) out.push_back('\n');
    }
    return out;
}

/// Tiles `text` end to end until exactly `bytes` long.
inline Bytes repeat_to_size(std::span<const std::uint8_t> text, std::size_t bytes) {
    if (bytes > 0 && text.empty()) throw ParameterError("cannot repeat an empty text to a positive size");
    Bytes out(bytes);
    for (std::size_t i = 0; i < bytes; i += text.size())
        std::copy_n(text.begin(), std::min(text.size(), bytes - i), out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

/// Row-major: cell (r, c) is alive iff the (r*width + c)-th unit() draw is
/// below `density`.
inline gol::ByteGrid gen_grid(std::uint64_t seed, std::size_t width, std::size_t height, double density) {
    if (width == 0 || height == 0 || width % gol::kWordBits != 0)
        throw ParameterError("grid width must be a positive multiple of 64 and height positive, got " +
                             std::to_string(width) + "x" + std::to_string(height));
    if (!(density >= 0.0 && density <= 1.0))
        throw ParameterError("density must lie in [0, 1]");
    gol::ByteGrid g(width, height);
    SeededStream rng(seed);
    std::uint8_t* cells = g.data();
    for (std::size_t i = 0; i < g.cell_count(); ++i) cells[i] = rng.unit() < density ? 1 : 0;
    return g;
}

/// Axis-aligned box [x_lo, x_hi) x [y_lo, y_hi).
struct Box {
    double x_lo = 0.0;
    double x_hi = 1.0;
    double y_lo = 0.0;
    double y_hi = 1.0;
};

namespace detail {

inline double scale_into(double u, double lo, double hi) {
    const double v = lo + (hi - lo) * u;
    return v < hi ? v : std::nextafter(hi, lo);
}

} // namespace detail

/// Point i takes draws 2i (x) and 2i+1 (y), each mapped as lo + (hi-lo)*u.
inline knn::PointCloud gen_points(std::uint64_t seed, std::size_t n, const Box& box = {}) {
    if (n == 0) throw ParameterError("point count must be at least 1");
    if (!(box.x_lo < box.x_hi && box.y_lo < box.y_hi) || !std::isfinite(box.x_lo) || !std::isfinite(box.x_hi) ||
        !std::isfinite(box.y_lo) || !std::isfinite(box.y_hi))
        throw ParameterError("point bounds need finite lo < hi on both axes");
    knn::PointCloud pts(n);
    SeededStream rng(seed);
    for (auto& p : pts) {
        p.x = detail::scale_into(rng.unit(), box.x_lo, box.x_hi);
        p.y = detail::scale_into(rng.unit(), box.y_lo, box.y_hi);
    }
    return pts;
}

} // namespace ladder::workload
