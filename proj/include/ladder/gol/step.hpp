#pragma once

#include <bit>
#include <cstddef>

#include "ladder/gol/bitwise.hpp"
#include "ladder/gol/grid.hpp"
#include "ladder/parallel.hpp"

// One Game of Life generation per call. Cells outside the grid are
// permanently dead. Every step reads an immutable input and writes a fresh
// output; `workers` splits the rows (tile rows for tile grids) into
// contiguous chunks.
namespace ladder::gol {

namespace detail {

constexpr bool rule(bool alive, unsigned neighbors) noexcept {
    return neighbors == 3 || (alive && neighbors == 2);
}

/// Row r's word j, with out-of-grid positions reading as zero.
inline Word word_or_zero(const RowPackedGrid& g, std::ptrdiff_t r, std::ptrdiff_t j) noexcept {
    if (r < 0 || j < 0 || r >= static_cast<std::ptrdiff_t>(g.height()) ||
        j >= static_cast<std::ptrdiff_t>(g.words_per_row()))
        return 0;
    return g.word(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
}

/// Three consecutive words of one row: the word being updated and its
/// horizontal neighbors.
struct RowTriple {
    Word left;
    Word center;
    Word right;
};

/// The 3x3 block of words around word (r, j).
struct WordNeighborhood {
    RowTriple up;
    RowTriple mid;
    RowTriple down;
};

inline WordNeighborhood load_neighborhood(const RowPackedGrid& g, std::size_t r, std::size_t j) noexcept {
    const auto row = [&](std::ptrdiff_t rr) {
        const auto jj = static_cast<std::ptrdiff_t>(j);
        return RowTriple{word_or_zero(g, rr, jj - 1), word_or_zero(g, rr, jj), word_or_zero(g, rr, jj + 1)};
    };
    const auto rr = static_cast<std::ptrdiff_t>(r);
    return {row(rr - 1), row(rr), row(rr + 1)};
}

/// State of column `pos` in -1..64 relative to the center word.
constexpr unsigned bit_at(const RowTriple& t, int pos) noexcept {
    if (pos < 0) return static_cast<unsigned>(t.left >> 63);
    if (pos > 63) return static_cast<unsigned>(t.right & 1U);
    return static_cast<unsigned>((t.center >> pos) & 1U);
}

/// Columns i-1, i, i+1 of a row packed into bits 0..2.
constexpr unsigned window3(const RowTriple& t, unsigned i) noexcept {
    if (i == 0) return static_cast<unsigned>(((t.center << 1) | (t.left >> 63)) & 7U);
    if (i == 63) return static_cast<unsigned>((t.center >> 62) | ((t.right & 1U) << 2));
    return static_cast<unsigned>((t.center >> (i - 1)) & 7U);
}

inline bitwise::NeighborMasks neighbor_masks(const WordNeighborhood& n) noexcept {
    using bitwise::east;
    using bitwise::west;
    return {west(n.up.center, n.up.left),     n.up.center,   east(n.up.center, n.up.right),
            west(n.mid.center, n.mid.left),   east(n.mid.center, n.mid.right),
            west(n.down.center, n.down.left), n.down.center, east(n.down.center, n.down.right)};
}

template <typename WordStep>
RowPackedGrid step_rows_wordwise(const RowPackedGrid& in, std::size_t workers, WordStep&& word_step) {
    RowPackedGrid out(in.width(), in.height());
    const std::size_t wpr = in.words_per_row();
    parallel_for(workers, in.height(), [&](std::size_t, IndexRange rows) {
        for (std::size_t r = rows.begin; r < rows.end; ++r)
            for (std::size_t j = 0; j < wpr; ++j)
                out.word(r, j) = word_step(load_neighborhood(in, r, j));
    });
    return out;
}

/// 9-bit neighborhood mask with the cell itself at bit 4.
inline constexpr unsigned kCenterBit = 1U << 4;
inline constexpr unsigned kNeighborBits = 0x1FFU & ~kCenterBit;

} // namespace detail

/// Rule-level oracle: direct per-cell evaluation, single-threaded.
inline ByteGrid step_reference(const ByteGrid& g) {
    ByteGrid out(g.width(), g.height());
    const auto h = static_cast<std::ptrdiff_t>(g.height());
    const auto w = static_cast<std::ptrdiff_t>(g.width());
    for (std::ptrdiff_t r = 0; r < h; ++r)
        for (std::ptrdiff_t c = 0; c < w; ++c) {
            unsigned n = 0;
            for (std::ptrdiff_t dr = -1; dr <= 1; ++dr)
                for (std::ptrdiff_t dc = -1; dc <= 1; ++dc)
                    if (dr != 0 || dc != 0) n += g.at_or_dead(r + dr, c + dc);
            out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                    detail::rule(g.at_or_dead(r, c) != 0, n));
        }
    return out;
}

/// Byte-per-cell baseline, rows split across workers.
inline ByteGrid step_byte(const ByteGrid& g, std::size_t workers = 1) {
    ByteGrid out(g.width(), g.height());
    const std::size_t w = g.width();
    const std::size_t h = g.height();
    const std::uint8_t* in = g.data();
    std::uint8_t* dst = out.data();
    parallel_for(workers, h, [&](std::size_t, IndexRange rows) {
        for (std::size_t r = rows.begin; r < rows.end; ++r) {
            const std::size_t r0 = r == 0 ? 0 : r - 1;
            const std::size_t r1 = r + 1 == h ? r : r + 1;
            for (std::size_t c = 0; c < w; ++c) {
                const std::size_t c0 = c == 0 ? 0 : c - 1;
                const std::size_t c1 = c + 1 == w ? c : c + 1;
                unsigned n = 0;
                for (std::size_t rr = r0; rr <= r1; ++rr)
                    for (std::size_t cc = c0; cc <= c1; ++cc) n += in[rr * w + cc];
                const std::uint8_t self = in[r * w + c];
                dst[r * w + c] = detail::rule(self != 0, n - self) ? 1 : 0;
            }
        }
    });
    return out;
}

/// Row-packed grid evaluated one cell at a time through bounds-checked
/// accessors, ignoring the word structure.
inline RowPackedGrid step_row_percell(const RowPackedGrid& g, std::size_t workers = 1) {
    RowPackedGrid out(g.width(), g.height());
    const auto h = static_cast<std::ptrdiff_t>(g.height());
    const auto w = static_cast<std::ptrdiff_t>(g.width());
    parallel_for(workers, g.height(), [&](std::size_t, IndexRange rows) {
        for (auto r = static_cast<std::ptrdiff_t>(rows.begin); r < static_cast<std::ptrdiff_t>(rows.end); ++r)
            for (std::ptrdiff_t c = 0; c < w; ++c) {
                unsigned n = 0;
                for (std::ptrdiff_t dr = -1; dr <= 1; ++dr)
                    for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        const auto rr = r + dr;
                        const auto cc = c + dc;
                        if (rr >= 0 && rr < h && cc >= 0 && cc < w)
                            n += g.cell(static_cast<std::size_t>(rr), static_cast<std::size_t>(cc));
                    }
                const auto ur = static_cast<std::size_t>(r);
                const auto uc = static_cast<std::size_t>(c);
                if (detail::rule(g.cell(ur, uc), n)) out.set(ur, uc, true);
            }
    });
    return out;
}

/// One word at a time; each of the 64 cells tests its eight neighbor bits
/// individually.
inline RowPackedGrid step_row_naive(const RowPackedGrid& g, std::size_t workers = 1) {
    return detail::step_rows_wordwise(g, workers, [](const detail::WordNeighborhood& n) {
        Word next = 0;
        for (int i = 0; i < 64; ++i) {
            const unsigned count = detail::bit_at(n.up, i - 1) + detail::bit_at(n.up, i) +
                                   detail::bit_at(n.up, i + 1) + detail::bit_at(n.mid, i - 1) +
                                   detail::bit_at(n.mid, i + 1) + detail::bit_at(n.down, i - 1) +
                                   detail::bit_at(n.down, i) + detail::bit_at(n.down, i + 1);
            if (detail::rule(detail::bit_at(n.mid, i) != 0, count)) next |= Word{1} << i;
        }
        return next;
    });
}

/// One word at a time; each cell assembles its 3x3 neighborhood into a mask
/// and counts it with a population count.
inline RowPackedGrid step_row_popc(const RowPackedGrid& g, std::size_t workers = 1) {
    return detail::step_rows_wordwise(g, workers, [](const detail::WordNeighborhood& n) {
        Word next = 0;
        for (unsigned i = 0; i < 64; ++i) {
            const unsigned mask =
                detail::window3(n.up, i) | (detail::window3(n.mid, i) << 3) | (detail::window3(n.down, i) << 6);
            const auto count = static_cast<unsigned>(std::popcount(mask & detail::kNeighborBits));
            if (detail::rule((mask & detail::kCenterBit) != 0, count)) next |= Word{1} << i;
        }
        return next;
    });
}

/// All 64 cells of a word at once: shifted neighbor masks summed by a
/// bit-sliced ripple-carry counter.
inline RowPackedGrid step_row_vecadd(const RowPackedGrid& g, std::size_t workers = 1) {
    return detail::step_rows_wordwise(g, workers, [](const detail::WordNeighborhood& n) {
        return bitwise::next_state_ripple(detail::neighbor_masks(n), n.mid.center);
    });
}

/// All 64 cells of a word at once: shifted neighbor masks reduced by a
/// carry-save full-adder tree into count bit-planes.
inline RowPackedGrid step_row_fulladder(const RowPackedGrid& g, std::size_t workers = 1) {
    return detail::step_rows_wordwise(g, workers, [](const detail::WordNeighborhood& n) {
        return bitwise::next_state(detail::neighbor_masks(n), n.mid.center);
    });
}

namespace detail {

inline Word tile_or_zero(const TilePackedGrid& g, std::ptrdiff_t tr, std::ptrdiff_t tc) noexcept {
    if (tr < 0 || tc < 0 || tr >= static_cast<std::ptrdiff_t>(g.tile_rows()) ||
        tc >= static_cast<std::ptrdiff_t>(g.tile_cols()))
        return 0;
    return g.tile(static_cast<std::size_t>(tr), static_cast<std::size_t>(tc));
}

constexpr unsigned tile_row_bits(Word tile, unsigned y) noexcept { return static_cast<unsigned>((tile >> (8 * y)) & 0xFFU); }

/// The 3x3 tiles around one tile flattened into ten 10-bit rows: row e holds
/// tile-local row e-1, bit b holds tile-local column b-1.
inline std::array<unsigned, 10> tile_halo_rows(const TilePackedGrid& g, std::size_t tr, std::size_t tc) noexcept {
    const auto r = static_cast<std::ptrdiff_t>(tr);
    const auto c = static_cast<std::ptrdiff_t>(tc);
    Word t[3][3];
    for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) t[dr + 1][dc + 1] = tile_or_zero(g, r + dr, c + dc);

    std::array<unsigned, 10> ext{};
    for (unsigned e = 0; e < 10; ++e) {
        const unsigned band = e == 0 ? 0 : (e == 9 ? 2 : 1);
        const unsigned y = e == 0 ? 7 : (e == 9 ? 0 : e - 1);
        const unsigned west_bit = (tile_row_bits(t[band][0], y) >> 7) & 1U;
        const unsigned east_bit = tile_row_bits(t[band][2], y) & 1U;
        ext[e] = west_bit | (tile_row_bits(t[band][1], y) << 1) | (east_bit << 9);
    }
    return ext;
}

} // namespace detail

/// One 8x8 tile at a time from its 3x3 tile neighborhood; each cell counts
/// its 3x3 mask with a population count.
inline TilePackedGrid step_tile_popc(const TilePackedGrid& g, std::size_t workers = 1) {
    TilePackedGrid out(g.width(), g.height());
    parallel_for(workers, g.tile_rows(), [&](std::size_t, IndexRange tile_rows) {
        for (std::size_t tr = tile_rows.begin; tr < tile_rows.end; ++tr)
            for (std::size_t tc = 0; tc < g.tile_cols(); ++tc) {
                const auto ext = detail::tile_halo_rows(g, tr, tc);
                Word next = 0;
                for (unsigned y = 0; y < 8; ++y)
                    for (unsigned x = 0; x < 8; ++x) {
                        const unsigned mask = ((ext[y] >> x) & 7U) | (((ext[y + 1] >> x) & 7U) << 3) |
                                              (((ext[y + 2] >> x) & 7U) << 6);
                        const auto count = static_cast<unsigned>(std::popcount(mask & detail::kNeighborBits));
                        if (detail::rule((mask & detail::kCenterBit) != 0, count))
                            next |= Word{1} << TilePackedGrid::bit_index(y, x);
                    }
                out.tile(tr, tc) = next;
            }
    });
    return out;
}

} // namespace ladder::gol
