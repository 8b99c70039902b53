#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ladder/errors.hpp"

namespace ladder::gol {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kTileSide = 8;

/// One byte per cell, row-major, each cell 0 (dead) or 1 (alive).
class ByteGrid {
public:
    ByteGrid(std::size_t width, std::size_t height) : width_(width), height_(height) {
        if (width == 0 || height == 0)
            throw ParameterError("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                                 std::to_string(height));
        cells_.assign(width * height, 0);
    }

    ByteGrid(std::size_t width, std::size_t height, std::vector<std::uint8_t> cells)
        : ByteGrid(width, height) {
        if (cells.size() != width * height)
            throw ParameterError("cell array holds " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(width * height));
        for (auto c : cells)
            if (c > 1) throw ParameterError("cell values must be 0 or 1");
        cells_ = std::move(cells);
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }

    std::uint8_t at(std::size_t row, std::size_t col) const noexcept { return cells_[row * width_ + col]; }
    void set(std::size_t row, std::size_t col, bool alive) noexcept { cells_[row * width_ + col] = alive ? 1 : 0; }

    /// Cell state with everything outside the grid reading as dead.
    std::uint8_t at_or_dead(std::ptrdiff_t row, std::ptrdiff_t col) const noexcept {
        if (row < 0 || col < 0 || row >= static_cast<std::ptrdiff_t>(height_) ||
            col >= static_cast<std::ptrdiff_t>(width_))
            return 0;
        return cells_[static_cast<std::size_t>(row) * width_ + static_cast<std::size_t>(col)];
    }

    const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
    std::uint8_t* data() noexcept { return cells_.data(); }
    const std::uint8_t* data() const noexcept { return cells_.data(); }

    std::size_t alive_count() const noexcept {
        std::size_t n = 0;
        for (auto c : cells_) n += c;
        return n;
    }

    friend bool operator==(const ByteGrid&, const ByteGrid&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<std::uint8_t> cells_;
};

/// 64 row-consecutive cells per word. Bit i of word j in row r holds cell
/// (r, 64*j + i).
class RowPackedGrid {
public:
    RowPackedGrid(std::size_t width, std::size_t height) : width_(width), height_(height) {
        if (width == 0 || height == 0)
            throw ParameterError("grid dimensions must be positive");
        if (width % kWordBits != 0)
            throw EncodingError("row packing needs width divisible by 64, got " + std::to_string(width));
        words_.assign(height * words_per_row(), 0);
    }

    RowPackedGrid(std::size_t width, std::size_t height, std::vector<Word> words) : RowPackedGrid(width, height) {
        if (words.size() != words_.size())
            throw EncodingError("row-packed grid expects " + std::to_string(words_.size()) + " words, got " +
                                std::to_string(words.size()));
        words_ = std::move(words);
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t words_per_row() const noexcept { return width_ / kWordBits; }

    Word word(std::size_t row, std::size_t index) const noexcept { return words_[row * words_per_row() + index]; }
    Word& word(std::size_t row, std::size_t index) noexcept { return words_[row * words_per_row() + index]; }

    bool cell(std::size_t row, std::size_t col) const noexcept {
        return (word(row, col / kWordBits) >> (col % kWordBits)) & 1U;
    }
    void set(std::size_t row, std::size_t col, bool alive) noexcept {
        const Word bit = Word{1} << (col % kWordBits);
        auto& w = word(row, col / kWordBits);
        w = alive ? (w | bit) : (w & ~bit);
    }

    const std::vector<Word>& words() const noexcept { return words_; }
    Word* data() noexcept { return words_.data(); }
    const Word* data() const noexcept { return words_.data(); }

    friend bool operator==(const RowPackedGrid&, const RowPackedGrid&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<Word> words_;
};

/// One 8x8 tile per word, tiles stored tile-row-major. Bit (8*y + x) of a
/// tile holds cell (8*tileRow + y, 8*tileCol + x).
class TilePackedGrid {
public:
    TilePackedGrid(std::size_t width, std::size_t height) : width_(width), height_(height) {
        if (width == 0 || height == 0)
            throw ParameterError("grid dimensions must be positive");
        if (width % kTileSide != 0 || height % kTileSide != 0)
            throw EncodingError("tile packing needs both dimensions divisible by 8, got " + std::to_string(width) +
                                "x" + std::to_string(height));
        words_.assign(tile_rows() * tile_cols(), 0);
    }

    TilePackedGrid(std::size_t width, std::size_t height, std::vector<Word> words) : TilePackedGrid(width, height) {
        if (words.size() != words_.size())
            throw EncodingError("tile-packed grid expects " + std::to_string(words_.size()) + " words");
        words_ = std::move(words);
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t tile_rows() const noexcept { return height_ / kTileSide; }
    std::size_t tile_cols() const noexcept { return width_ / kTileSide; }

    Word tile(std::size_t tile_row, std::size_t tile_col) const noexcept { return words_[tile_row * tile_cols() + tile_col]; }
    Word& tile(std::size_t tile_row, std::size_t tile_col) noexcept { return words_[tile_row * tile_cols() + tile_col]; }

    static constexpr unsigned bit_index(std::size_t y, std::size_t x) noexcept {
        return static_cast<unsigned>(y * kTileSide + x);
    }

    bool cell(std::size_t row, std::size_t col) const noexcept {
        return (tile(row / kTileSide, col / kTileSide) >> bit_index(row % kTileSide, col % kTileSide)) & 1U;
    }

    const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const TilePackedGrid&, const TilePackedGrid&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<Word> words_;
};

inline RowPackedGrid pack_rows(const ByteGrid& g) {
    RowPackedGrid p(g.width(), g.height());
    const std::size_t wpr = p.words_per_row();
    for (std::size_t r = 0; r < g.height(); ++r) {
        const std::uint8_t* row = g.data() + r * g.width();
        for (std::size_t j = 0; j < wpr; ++j) {
            Word w = 0;
            for (std::size_t i = 0; i < kWordBits; ++i)
                w |= static_cast<Word>(row[j * kWordBits + i]) << i;
            p.word(r, j) = w;
        }
    }
    return p;
}

inline ByteGrid unpack_rows(const RowPackedGrid& p) {
    ByteGrid g(p.width(), p.height());
    const std::size_t wpr = p.words_per_row();
    for (std::size_t r = 0; r < p.height(); ++r) {
        std::uint8_t* row = g.data() + r * g.width();
        for (std::size_t j = 0; j < wpr; ++j) {
            const Word w = p.word(r, j);
            for (std::size_t i = 0; i < kWordBits; ++i)
                row[j * kWordBits + i] = static_cast<std::uint8_t>((w >> i) & 1U);
        }
    }
    return g;
}

inline TilePackedGrid pack_tiles(const ByteGrid& g) {
    TilePackedGrid p(g.width(), g.height());
    for (std::size_t tr = 0; tr < p.tile_rows(); ++tr)
        for (std::size_t tc = 0; tc < p.tile_cols(); ++tc) {
            Word w = 0;
            for (std::size_t y = 0; y < kTileSide; ++y)
                for (std::size_t x = 0; x < kTileSide; ++x)
                    w |= static_cast<Word>(g.at(tr * kTileSide + y, tc * kTileSide + x))
                         << TilePackedGrid::bit_index(y, x);
            p.tile(tr, tc) = w;
        }
    return p;
}

inline ByteGrid unpack_tiles(const TilePackedGrid& p) {
    ByteGrid g(p.width(), p.height());
    for (std::size_t tr = 0; tr < p.tile_rows(); ++tr)
        for (std::size_t tc = 0; tc < p.tile_cols(); ++tc) {
            const Word w = p.tile(tr, tc);
            for (std::size_t y = 0; y < kTileSide; ++y)
                for (std::size_t x = 0; x < kTileSide; ++x)
                    g.set(tr * kTileSide + y, tc * kTileSide + x, (w >> TilePackedGrid::bit_index(y, x)) & 1U);
        }
    return g;
}

} // namespace ladder::gol
