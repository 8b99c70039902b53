// Runs one variant of each kernel on a small generated input and checks it
// against the oracle.

#include <iostream>

#include "ladder/ladder.hpp"

int main() {
    using namespace ladder;

    const auto text = workload::gen_lorem(1, 1 << 16);
    const histogram::CharRange printable(32, 127);
    const auto h = histogram::histogram_multicopy(text, printable, 4, 16, histogram::IterationPattern::WorkerStride);
    std::cout << "histogram: " << h.total() << " bytes counted, matches oracle: " << std::boolalpha
              << (h == histogram::histogram_reference(text, printable)) << "\n";
    std::cout << "  'e' occurs " << h.bins['e' - 32] << " times\n";

    const auto grid = workload::gen_grid(2, 256, 256, 0.3);
    const auto after = gol::run_iterations(grid, 50, "row-fulladder", 2);
    std::cout << "life: " << grid.alive_count() << " alive -> " << after.alive_count()
              << " after 50 generations, matches oracle: "
              << (after == gol::run_iterations(grid, 50, gol::step_reference)) << "\n";

    const auto data = workload::gen_points(3, 20000);
    const auto queries = workload::gen_points(4, 4);
    const auto knn = knn::knn_buffered(data, queries, 32, 128, 2);
    std::cout << "knn: nearest to query 0 is point " << knn[0].entries[0].index << " at squared distance "
              << knn::format_distance(knn[0].entries[0].distance)
              << ", matches oracle: " << (knn == knn::knn_reference(data, queries, 32)) << "\n";
}
