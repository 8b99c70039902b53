#pragma once

#include "ladder/gol/grid.hpp"

namespace ladder::bench::fixtures {

/// Game of Life step that forgets the south-east neighbor. Registered as a
/// hidden variant so the verifier can prove it catches divergence.
inline gol::ByteGrid step_offbyone(const gol::ByteGrid& g) {
    gol::ByteGrid out(g.width(), g.height());
    const auto h = static_cast<std::ptrdiff_t>(g.height());
    const auto w = static_cast<std::ptrdiff_t>(g.width());
    for (std::ptrdiff_t r = 0; r < h; ++r)
        for (std::ptrdiff_t c = 0; c < w; ++c) {
            unsigned n = 0;
            for (std::ptrdiff_t dr = -1; dr <= 1; ++dr)
                for (std::ptrdiff_t dc = -1; dc <= 1; ++dc)
                    if ((dr != 0 || dc != 0) && !(dr == 1 && dc == 1)) n += g.at_or_dead(r + dr, c + dc);
            const bool alive = g.at_or_dead(r, c) != 0;
            out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), n == 3 || (alive && n == 2));
        }
    return out;
}

} // namespace ladder::bench::fixtures
