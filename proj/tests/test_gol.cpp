#include <gtest/gtest.h>

#include <random>

#include "ladder/gol/bitwise.hpp"
#include "ladder/gol/iterate.hpp"
#include "ladder/gol/step.hpp"
#include "test_support.hpp"

using namespace ladder;
using namespace ladder::gol;
using ladder::testing::glider_at;
using ladder::testing::grid_with;
using ladder::testing::random_grid;

namespace {

ByteGrid via_naive(const ByteGrid& g, std::size_t w = 1) { return unpack_rows(step_row_naive(pack_rows(g), w)); }
ByteGrid via_popc(const ByteGrid& g, std::size_t w = 1) { return unpack_rows(step_row_popc(pack_rows(g), w)); }
ByteGrid via_fulladder(const ByteGrid& g, std::size_t w = 1) {
    return unpack_rows(step_row_fulladder(pack_rows(g), w));
}
ByteGrid via_vecadd(const ByteGrid& g, std::size_t w = 1) { return unpack_rows(step_row_vecadd(pack_rows(g), w)); }
ByteGrid via_percell(const ByteGrid& g, std::size_t w = 1) {
    return unpack_rows(step_row_percell(pack_rows(g), w));
}
ByteGrid via_tiles(const ByteGrid& g, std::size_t w = 1) { return unpack_tiles(step_tile_popc(pack_tiles(g), w)); }

using StepFn = ByteGrid (*)(const ByteGrid&, std::size_t);

struct NamedStep {
    const char* name;
    StepFn fn;
};

const NamedStep kPackedSteps[] = {
    {"row-percell", via_percell}, {"row-naive", via_naive},   {"row-popc", via_popc},
    {"row-vecadd", via_vecadd},   {"row-fulladder", via_fulladder}, {"tile-popc", via_tiles},
};

} // namespace

TEST(ByteGrid, RejectsZeroDimension) {
    EXPECT_THROW(ByteGrid(0, 4), ParameterError);
    EXPECT_THROW(ByteGrid(4, 0), ParameterError);
    EXPECT_THROW(ByteGrid(2, 2, {0, 1, 2, 0}), ParameterError);
}

TEST(StepReference, AllDeadStaysDead) {
    const ByteGrid g(8, 8);
    EXPECT_EQ(step_reference(g), g);
}

TEST(StepReference, BlockIsStill) {
    const auto block = grid_with(6, 6, {{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    EXPECT_EQ(step_reference(block), block);
}

TEST(StepReference, BlinkerRotates) {
    const auto horizontal = grid_with(5, 5, {{2, 1}, {2, 2}, {2, 3}});
    const auto vertical = grid_with(5, 5, {{1, 2}, {2, 2}, {3, 2}});
    EXPECT_EQ(step_reference(horizontal), vertical);
    EXPECT_EQ(step_reference(vertical), horizontal);
}

TEST(StepReference, LoneCornerCellsDie) {
    const auto g = grid_with(8, 8, {{0, 0}, {0, 7}, {7, 0}, {7, 7}});
    EXPECT_EQ(step_reference(g).alive_count(), 0u);
}

TEST(StepReference, NothingIsBornOutsideTheGrid) {
    // Three cells along the top edge: the birth above the middle cell falls
    // off the board, so only the vertical stub inside remains.
    const auto g = grid_with(5, 5, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_EQ(step_reference(g), grid_with(5, 5, {{0, 2}, {1, 2}}));
}

TEST(RowPacking, LayoutAndErrors) {
    EXPECT_EQ(pack_rows(ByteGrid(64, 1)).words(), std::vector<Word>{0});
    EXPECT_EQ(pack_rows(grid_with(64, 1, {{0, 0}})).word(0, 0), Word{1});
    EXPECT_EQ(pack_rows(grid_with(128, 2, {{1, 65}})).word(1, 1), Word{2});
    EXPECT_THROW(pack_rows(ByteGrid(65, 1)), EncodingError);
    EXPECT_THROW(RowPackedGrid(32, 2), EncodingError);
}

TEST(TilePacking, LayoutAndErrors) {
    ByteGrid all(8, 8, std::vector<std::uint8_t>(64, 1));
    EXPECT_EQ(pack_tiles(all).tile(0, 0), ~Word{0});
    EXPECT_EQ(pack_tiles(grid_with(8, 8, {{1, 0}})).tile(0, 0), Word{1} << 8);
    EXPECT_EQ(pack_tiles(grid_with(16, 16, {{9, 10}})).tile(1, 1), Word{1} << (1 * 8 + 2));
    EXPECT_THROW(pack_tiles(ByteGrid(12, 8)), EncodingError);
    EXPECT_THROW(pack_tiles(ByteGrid(8, 12)), EncodingError);
}

TEST(Packing, RoundTripProperty) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t w = 64 * (1 + rng() % 4);
        const std::size_t h = 8 * (1 + rng() % 6);
        const auto g = random_grid(rng, w, h, 0.1 + 0.8 * double(rng() % 100) / 100.0);
        ASSERT_EQ(unpack_rows(pack_rows(g)), g);
        ASSERT_EQ(unpack_tiles(pack_tiles(g)), g);
    }
    std::mt19937_64 small(3);
    const auto g128 = random_grid(small, 128, 4, 0.5);
    EXPECT_EQ(unpack_rows(pack_rows(g128)), g128);
    const auto g16 = random_grid(small, 16, 16, 0.5);
    EXPECT_EQ(unpack_tiles(pack_tiles(g16)), g16);
}

TEST(FullAdder, IdentityHoldsForAll512Neighborhoods) {
    // Every configuration of 8 neighbors plus the cell itself, one per bit
    // position: 512 configurations fill 8 words.
    for (unsigned base = 0; base < 512; base += 64) {
        bitwise::NeighborMasks masks{};
        Word alive = 0;
        for (unsigned bit = 0; bit < 64; ++bit) {
            const unsigned config = base + bit;
            for (unsigned n = 0; n < 8; ++n)
                if (config & (1U << n)) masks[n] |= Word{1} << bit;
            if (config & (1U << 8)) alive |= Word{1} << bit;
        }
        const auto planes = bitwise::count_planes(masks);
        const Word next = bitwise::next_state(masks, alive);
        const Word ripple = bitwise::next_state_ripple(masks, alive);
        for (unsigned bit = 0; bit < 64; ++bit) {
            const unsigned config = base + bit;
            unsigned count = 0;
            for (unsigned n = 0; n < 8; ++n) count += (config >> n) & 1U;
            const bool is_alive = (config >> 8) & 1U;
            const bool expected = is_alive ? (count == 2 || count == 3) : count == 3;
            const unsigned got_count = unsigned((planes.b0 >> bit) & 1) + 2 * unsigned((planes.b1 >> bit) & 1) +
                                       4 * unsigned((planes.b2 >> bit) & 1) + 8 * unsigned((planes.b3 >> bit) & 1);
            ASSERT_EQ(got_count, count) << "config " << config;
            ASSERT_EQ(((next >> bit) & 1) != 0, expected) << "config " << config;
            ASSERT_EQ(((ripple >> bit) & 1) != 0, expected) << "config " << config;
        }
    }
}

TEST(PackedSteps, AllDeadStaysDead) {
    const ByteGrid g(128, 16);
    for (const auto& s : kPackedSteps) EXPECT_EQ(s.fn(g, 1), g) << s.name;
}

TEST(PackedSteps, StillLifes) {
    const auto block = grid_with(64, 8, {{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    const auto beehive = grid_with(64, 8, {{2, 3}, {2, 4}, {3, 2}, {3, 5}, {4, 3}, {4, 4}});
    for (const auto& s : kPackedSteps) {
        EXPECT_EQ(s.fn(block, 1), block) << s.name;
        EXPECT_EQ(s.fn(beehive, 1), beehive) << s.name;
    }
}

TEST(PackedSteps, BlinkerWithinOneWordAndTile) {
    const auto horizontal = grid_with(64, 8, {{3, 2}, {3, 3}, {3, 4}});
    const auto vertical = grid_with(64, 8, {{2, 3}, {3, 3}, {4, 3}});
    for (const auto& s : kPackedSteps) EXPECT_EQ(s.fn(horizontal, 1), vertical) << s.name;
}

TEST(PackedSteps, WordBoundaryColumns63And64) {
    const auto g = grid_with(128, 8, {{2, 62}, {2, 63}, {2, 64}, {3, 63}, {3, 64}, {1, 64}});
    const auto expected = step_reference(g);
    for (const auto& s : kPackedSteps) EXPECT_EQ(s.fn(g, 1), expected) << s.name;
}

TEST(PackedSteps, TileEdgeColumns7And8) {
    const auto g = grid_with(64, 16, {{6, 7}, {7, 7}, {8, 7}, {7, 8}, {8, 8}, {9, 8}, {15, 7}, {15, 8}, {14, 8}});
    const auto expected = step_reference(g);
    for (const auto& s : kPackedSteps) EXPECT_EQ(s.fn(g, 1), expected) << s.name;
}

TEST(PackedSteps, AllAliveInteriorDies) {
    ByteGrid g(64, 3, std::vector<std::uint8_t>(64 * 3, 1));
    const auto next = via_popc(g);
    for (std::size_t c = 1; c < 63; ++c) EXPECT_EQ(next.at(1, c), 0) << c;
    EXPECT_EQ(next, step_reference(g));
}

TEST(PackedSteps, GliderTranslatesDiagonally) {
    const auto start = glider_at(64, 64, 10, 10);
    const auto oracle = run_iterations(start, 4, step_reference);
    ASSERT_EQ(oracle, glider_at(64, 64, 11, 11));
    for (const auto& s : kPackedSteps) {
        ByteGrid g = start;
        for (int i = 0; i < 4; ++i) g = s.fn(g, 1);
        EXPECT_EQ(g, oracle) << s.name;
    }
}

TEST(PackedSteps, MatchOracleOnRandomGrids) {
    std::mt19937_64 rng(2024);
    const std::pair<std::size_t, std::size_t> sizes[] = {{64, 64}, {192, 128}, {128, 8}, {64, 1 * 8}};
    for (const auto& [w, h] : sizes)
        for (const double d : {0.1, 0.5, 0.9}) {
            const auto g = random_grid(rng, w, h, d);
            const auto expected = step_reference(g);
            for (const auto& s : kPackedSteps) ASSERT_EQ(s.fn(g, 1), expected) << s.name << " " << w << "x" << h;
            ASSERT_EQ(step_byte(g, 1), expected);
        }
}

TEST(PackedSteps, IndependentOfWorkerCount) {
    std::mt19937_64 rng(99);
    const auto g = random_grid(rng, 192, 40, 0.4);
    for (const auto& s : kPackedSteps) {
        const auto one = s.fn(g, 1);
        EXPECT_EQ(s.fn(g, 2), one) << s.name;
        EXPECT_EQ(s.fn(g, 8), one) << s.name;
        EXPECT_EQ(s.fn(g, 1), one) << s.name;
    }
    EXPECT_EQ(step_byte(g, 8), step_byte(g, 1));
}

TEST(RunIterations, ZeroIterationsIsIdentity) {
    std::mt19937_64 rng(5);
    const auto g = random_grid(rng, 64, 16, 0.5);
    for (const auto& info : kStepVariants) EXPECT_EQ(run_iterations(g, 0, info.name), g) << info.name;
}

TEST(RunIterations, BlinkerHasPeriodTwo) {
    const auto blinker = grid_with(64, 8, {{3, 2}, {3, 3}, {3, 4}});
    for (const auto& info : kStepVariants) {
        EXPECT_EQ(run_iterations(blinker, 2, info.name), blinker) << info.name;
        EXPECT_NE(run_iterations(blinker, 1, info.name), blinker) << info.name;
    }
}

TEST(RunIterations, GliderDisplacedByMAfter4M) {
    const auto start = glider_at(128, 64, 1, 1);
    for (const auto& info : kStepVariants)
        for (std::size_t m : {1, 3, 10})
            EXPECT_EQ(run_iterations(start, 4 * m, info.name, 2), glider_at(128, 64, 1 + m, 1 + m))
                << info.name << " m=" << m;
}

TEST(RunIterations, UnknownVariantIsARegistryError) {
    EXPECT_THROW(run_iterations(ByteGrid(64, 8), 1, "row-magic"), RegistryError);
}

TEST(RunIterations, InputIsNotModified) {
    std::mt19937_64 rng(8);
    const auto g = random_grid(rng, 64, 16, 0.5);
    EncodedGrid enc(g, Encoding::Rows);
    const auto once = enc.advanced(StepVariant::RowFullAdder, 3, 1).decode();
    EXPECT_EQ(enc.decode(), g);
    EXPECT_EQ(enc.advanced(StepVariant::RowFullAdder, 3, 1).decode(), once);
    EXPECT_THROW(enc.advanced(StepVariant::TilePopc, 1, 1), ParameterError);
}
