#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/errors.hpp"
#include "ladder/gol/grid.hpp"
#include "ladder/knn/types.hpp"

// On-disk formats. All integers and doubles are little-endian.
//
//   grid   "GOLB" u32 width, u32 height, u32 reserved (0), then
//          height * width/64 row-packed u64 words, rows in order
//   points "PTS2" u32 count, u64 reserved (0), then count (x, y) f64 pairs
//   text   raw bytes, no header
namespace ladder::workload {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::string_view kGridMagic = "GOLB";
inline constexpr std::string_view kPointsMagic = "PTS2";
inline constexpr std::size_t kHeaderSize = 16;

namespace detail {

template <typename T>
void put_le(Bytes& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> in, std::size_t offset) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(in[offset + i]) << (8 * i);
    return v;
}

inline void put_f64(Bytes& out, double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    put_le(out, bits);
}

inline double get_f64(std::span<const std::uint8_t> in, std::size_t offset) {
    const auto bits = get_le<std::uint64_t>(in, offset);
    double d;
    std::memcpy(&d, &bits, sizeof d);
    return d;
}

inline void check_header(std::span<const std::uint8_t> in, std::string_view magic, const char* what) {
    const std::size_t have = std::min(in.size(), magic.size());
    if (!std::equal(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(have), magic.begin()))
        throw FormatError(std::string("bad ") + what + " magic, expected \"" + std::string(magic) + "\"",
                          std::uint64_t{0});
    if (in.size() < kHeaderSize)
        throw FormatError(std::string("truncated ") + what + " header", static_cast<std::uint64_t>(in.size()));
}

inline void check_payload(std::span<const std::uint8_t> in, std::uint64_t expected, const char* what) {
    if (in.size() < expected)
        throw FormatError(std::string(what) + " truncated: header announces " + std::to_string(expected) +
                              " bytes, file has " + std::to_string(in.size()),
                          static_cast<std::uint64_t>(in.size()));
    if (in.size() > expected)
        throw FormatError(std::string(what) + " has trailing bytes", expected);
}

} // namespace detail

inline Bytes encode_grid(const gol::RowPackedGrid& g) {
    if (g.width() > UINT32_MAX || g.height() > UINT32_MAX) throw ParameterError("grid too large for the file format");
    Bytes out(kGridMagic.begin(), kGridMagic.end());
    detail::put_le(out, static_cast<std::uint32_t>(g.width()));
    detail::put_le(out, static_cast<std::uint32_t>(g.height()));
    detail::put_le(out, std::uint32_t{0});
    out.reserve(out.size() + g.words().size() * 8);
    for (const auto w : g.words()) detail::put_le(out, w);
    return out;
}

inline Bytes encode_grid(const gol::ByteGrid& g) { return encode_grid(gol::pack_rows(g)); }

inline gol::RowPackedGrid decode_grid(std::span<const std::uint8_t> in) {
    detail::check_header(in, kGridMagic, "grid");
    const auto width = detail::get_le<std::uint32_t>(in, 4);
    const auto height = detail::get_le<std::uint32_t>(in, 8);
    if (width == 0 || width % gol::kWordBits != 0)
        throw FormatError("grid width " + std::to_string(width) + " is not a positive multiple of 64",
                          std::uint64_t{4});
    if (height == 0) throw FormatError("grid height is zero", std::uint64_t{8});
    if (detail::get_le<std::uint32_t>(in, 12) != 0)
        throw FormatError("grid reserved field is not zero", std::uint64_t{12});
    const std::uint64_t words = std::uint64_t{height} * (width / gol::kWordBits);
    detail::check_payload(in, kHeaderSize + words * 8, "grid");
    std::vector<gol::Word> data(words);
    for (std::uint64_t i = 0; i < words; ++i) data[i] = detail::get_le<std::uint64_t>(in, kHeaderSize + i * 8);
    return gol::RowPackedGrid(width, height, std::move(data));
}

inline Bytes encode_points(std::span<const knn::Point> pts) {
    if (pts.size() > UINT32_MAX) throw ParameterError("too many points for the file format");
    Bytes out(kPointsMagic.begin(), kPointsMagic.end());
    detail::put_le(out, static_cast<std::uint32_t>(pts.size()));
    detail::put_le(out, std::uint64_t{0});
    out.reserve(out.size() + pts.size() * 16);
    for (const auto& p : pts) {
        detail::put_f64(out, p.x);
        detail::put_f64(out, p.y);
    }
    return out;
}

inline knn::PointCloud decode_points(std::span<const std::uint8_t> in) {
    detail::check_header(in, kPointsMagic, "point");
    const auto count = detail::get_le<std::uint32_t>(in, 4);
    if (count == 0) throw FormatError("point file holds no points", std::uint64_t{4});
    if (detail::get_le<std::uint64_t>(in, 8) != 0)
        throw FormatError("point reserved field is not zero", std::uint64_t{8});
    detail::check_payload(in, kHeaderSize + std::uint64_t{count} * 16, "point file");
    knn::PointCloud pts(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t off = kHeaderSize + i * 16;
        pts[i] = {detail::get_f64(in, off), detail::get_f64(in, off + 8)};
        if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y))
            throw FormatError("non-finite coordinate in point " + std::to_string(i), static_cast<std::uint64_t>(off));
    }
    return pts;
}

inline Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open '" + path.string() + "' for reading");
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParameterError("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ParameterError("write to '" + path.string() + "' failed");
}

inline gol::ByteGrid read_grid(const std::filesystem::path& path) { return gol::unpack_rows(decode_grid(read_file(path))); }
inline void write_grid(const std::filesystem::path& path, const gol::ByteGrid& g) { write_file(path, encode_grid(g)); }

inline knn::PointCloud read_points(const std::filesystem::path& path) { return decode_points(read_file(path)); }
inline void write_points(const std::filesystem::path& path, std::span<const knn::Point> pts) {
    write_file(path, encode_points(pts));
}

inline Bytes read_text(const std::filesystem::path& path) { return read_file(path); }
inline void write_text(const std::filesystem::path& path, std::span<const std::uint8_t> text) { write_file(path, text); }

} // namespace ladder::workload
