#pragma once

#include <array>

#include "ladder/gol/grid.hpp"

// Word-parallel neighbor counting. Each bit position of a word is an
// independent cell; the eight inputs hold, per cell, one neighbor's state.
namespace ladder::gol::bitwise {

struct SumCarry {
    Word sum;
    Word carry;
};

constexpr SumCarry half_add(Word a, Word b) noexcept { return {a ^ b, a & b}; }

constexpr SumCarry full_add(Word a, Word b, Word c) noexcept {
    const Word t = a ^ b;
    return {t ^ c, (a & b) | (c & t)};
}

/// Binary digits of the per-cell neighbor count (0..8): count = b0 + 2*b1 + 4*b2 + 8*b3.
struct CountPlanes {
    Word b0;
    Word b1;
    Word b2;
    Word b3;
};

using NeighborMasks = std::array<Word, 8>;

/// Carry-save reduction of eight neighbor masks into count bit-planes.
constexpr CountPlanes count_planes(const NeighborMasks& n) noexcept {
    const auto [s0, t0] = full_add(n[0], n[1], n[2]);
    const auto [s1, t1] = full_add(n[3], n[4], n[5]);
    const auto [s2, t2] = half_add(n[6], n[7]);
    const auto [ones, t3] = full_add(s0, s1, s2);
    // twos column: t0 + t1 + t2 + t3
    const auto [p, q] = full_add(t0, t1, t2);
    const auto [twos, r] = half_add(p, t3);
    return {ones, twos, q ^ r, q & r};
}

/// Survives with 2 or 3 neighbors, born with 3. Counts 2 and 3 are exactly
/// the counts with b1 = 1 and b2 = 0 (8 has b1 = 0), so b3 is never needed.
constexpr Word next_from_planes(const CountPlanes& c, Word alive) noexcept {
    return c.b1 & ~c.b2 & (c.b0 | alive);
}

constexpr Word next_state(const NeighborMasks& n, Word alive) noexcept {
    return next_from_planes(count_planes(n), alive);
}

/// Bit-sliced counter incremented one mask at a time (ripple carry), the
/// straightforward form of vectorized addition.
constexpr Word next_state_ripple(const NeighborMasks& n, Word alive) noexcept {
    Word c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    for (const Word m : n) {
        Word carry = c0 & m;
        c0 ^= m;
        const Word carry1 = c1 & carry;
        c1 ^= carry;
        const Word carry2 = c2 & carry1;
        c2 ^= carry1;
        c3 ^= carry2;
    }
    const Word low = ~c3 & ~c2 & c1;
    return (low & c0) | (low & ~c0 & alive);
}

/// Cell to the west of each bit: column c-1, carrying in the top bit of the
/// previous word.
constexpr Word west(Word center, Word left) noexcept { return (center << 1) | (left >> 63); }

/// Cell to the east of each bit: column c+1, carrying in the low bit of the
/// next word.
constexpr Word east(Word center, Word right) noexcept { return (center >> 1) | (right << 63); }

} // namespace ladder::gol::bitwise
