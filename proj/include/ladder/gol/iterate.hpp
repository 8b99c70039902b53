#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ladder/errors.hpp"
#include "ladder/gol/grid.hpp"
#include "ladder/gol/step.hpp"

namespace ladder::gol {

enum class StepVariant {
    Reference,
    Byte,
    RowPerCell,
    RowNaive,
    RowPopc,
    RowVecAdd,
    RowFullAdder,
    TilePopc,
};

enum class Encoding { Bytes, Rows, Tiles };

struct StepVariantInfo {
    StepVariant variant;
    std::string_view name;
    Encoding encoding;
};

inline constexpr std::array<StepVariantInfo, 8> kStepVariants{{
    {StepVariant::Reference, "reference", Encoding::Bytes},
    {StepVariant::Byte, "byte", Encoding::Bytes},
    {StepVariant::RowPerCell, "row-percell", Encoding::Rows},
    {StepVariant::RowNaive, "row-naive", Encoding::Rows},
    {StepVariant::RowPopc, "row-popc", Encoding::Rows},
    {StepVariant::RowVecAdd, "row-vecadd", Encoding::Rows},
    {StepVariant::RowFullAdder, "row-fulladder", Encoding::Rows},
    {StepVariant::TilePopc, "tile-popc", Encoding::Tiles},
}};

inline const StepVariantInfo& step_variant_info(StepVariant v) {
    for (const auto& info : kStepVariants)
        if (info.variant == v) return info;
    throw RegistryError("unregistered Game of Life variant");
}

inline StepVariant parse_step_variant(std::string_view name) {
    for (const auto& info : kStepVariants)
        if (info.name == name) return info.variant;
    std::string valid;
    for (const auto& info : kStepVariants) valid += (valid.empty() ? "" : ", ") + std::string(info.name);
    throw RegistryError("unknown Game of Life variant '" + std::string(name) + "' (valid: " + valid + ")");
}

/// n-fold composition of `step`. Step i consumes the buffer produced by step
/// i-1 and returns a fresh one; the input itself is only read.
template <typename Grid, std::invocable<const Grid&> Step>
Grid run_iterations(const Grid& grid, std::size_t n, Step&& step) {
    if (n == 0) return grid;
    Grid current = step(grid);
    for (std::size_t i = 1; i < n; ++i) current = step(std::as_const(current));
    return current;
}

/// A grid held in the encoding a variant operates on.
class EncodedGrid {
public:
    EncodedGrid(const ByteGrid& g, Encoding enc) : encoding_(enc) {
        switch (enc) {
        case Encoding::Bytes: bytes_ = g; break;
        case Encoding::Rows: rows_ = pack_rows(g); break;
        case Encoding::Tiles: tiles_ = pack_tiles(g); break;
        }
    }

    Encoding encoding() const noexcept { return encoding_; }

    ByteGrid decode() const {
        switch (encoding_) {
        case Encoding::Rows: return unpack_rows(*rows_);
        case Encoding::Tiles: return unpack_tiles(*tiles_);
        case Encoding::Bytes: break;
        }
        return *bytes_;
    }

    /// The grid n generations later under the given variant.
    EncodedGrid advanced(StepVariant v, std::size_t n, std::size_t workers) const {
        if (step_variant_info(v).encoding != encoding_)
            throw ParameterError("variant '" + std::string(step_variant_info(v).name) +
                                 "' does not operate on this grid encoding");
        EncodedGrid out(encoding_);
        switch (v) {
        case StepVariant::Reference:
            out.bytes_ = run_iterations(*bytes_, n, [](const ByteGrid& g) { return step_reference(g); });
            break;
        case StepVariant::Byte:
            out.bytes_ = run_iterations(*bytes_, n, [&](const ByteGrid& g) { return step_byte(g, workers); });
            break;
        case StepVariant::RowPerCell: out.rows_ = iterate_rows(n, workers, step_row_percell); break;
        case StepVariant::RowNaive: out.rows_ = iterate_rows(n, workers, step_row_naive); break;
        case StepVariant::RowPopc: out.rows_ = iterate_rows(n, workers, step_row_popc); break;
        case StepVariant::RowVecAdd: out.rows_ = iterate_rows(n, workers, step_row_vecadd); break;
        case StepVariant::RowFullAdder: out.rows_ = iterate_rows(n, workers, step_row_fulladder); break;
        case StepVariant::TilePopc:
            out.tiles_ =
                run_iterations(*tiles_, n, [&](const TilePackedGrid& g) { return step_tile_popc(g, workers); });
            break;
        }
        return out;
    }

private:
    explicit EncodedGrid(Encoding enc) : encoding_(enc) {}

    template <typename Step>
    RowPackedGrid iterate_rows(std::size_t n, std::size_t workers, Step step) const {
        return run_iterations(*rows_, n, [&](const RowPackedGrid& g) { return step(g, workers); });
    }

    Encoding encoding_;
    std::optional<ByteGrid> bytes_;
    std::optional<RowPackedGrid> rows_;
    std::optional<TilePackedGrid> tiles_;
};

/// Encodes `g` for the named variant, runs n generations and decodes.
inline ByteGrid run_iterations(const ByteGrid& g, std::size_t n, std::string_view variant, std::size_t workers = 1) {
    const StepVariant v = parse_step_variant(variant);
    return EncodedGrid(g, step_variant_info(v).encoding).advanced(v, n, workers).decode();
}

} // namespace ladder::gol
