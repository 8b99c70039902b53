#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "ladder/errors.hpp"
#include "ladder/knn/types.hpp"

namespace ladder::knn {

enum class SortDirection { Ascending, Descending };

/// Compare-exchanges performed by a bitonic network on n = 2^m keys:
/// (n/2) * m * (m + 1) / 2.
constexpr std::size_t bitonic_network_size(std::size_t n) noexcept {
    if (n < 2) return 0;
    const auto m = static_cast<std::size_t>(std::countr_zero(n));
    return n / 2 * m * (m + 1) / 2;
}

namespace detail {

template <typename T, typename Less>
constexpr void compare_exchange(T& a, T& b, bool ascending, Less& less) {
    if (ascending ? less(b, a) : less(a, b)) std::swap(a, b);
}

/// Half-cleaner cascade turning a bitonic sequence into a sorted one.
/// Returns the number of compare-exchanges.
template <typename T, typename Less>
std::size_t bitonic_merge(std::span<T> data, bool ascending, Less& less) {
    const std::size_t n = data.size();
    std::size_t ops = 0;
    for (std::size_t stride = n / 2; stride > 0; stride /= 2)
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i ^ stride;
            if (j > i) {
                compare_exchange(data[i], data[j], ascending, less);
                ++ops;
            }
        }
    return ops;
}

} // namespace detail

/// Sorts a power-of-two length sequence with the bitonic network: log2(n)
/// merge phases, phase s running s half-cleaner stages of n/2
/// compare-exchanges. Returns the number of compare-exchanges.
template <typename T, typename Less = std::less<>>
std::size_t bitonic_sort(std::span<T> data, SortDirection dir = SortDirection::Ascending, Less less = {}) {
    const std::size_t n = data.size();
    if (!std::has_single_bit(n))
        throw ParameterError("bitonic sort needs a power-of-two length, got " + std::to_string(n));
    const bool ascending = dir == SortDirection::Ascending;
    std::size_t ops = 0;
    for (std::size_t size = 2; size <= n; size *= 2)
        for (std::size_t stride = size / 2; stride > 0; stride /= 2)
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t j = i ^ stride;
                if (j > i) {
                    // Blocks of `size` alternate direction until the last phase.
                    const bool up = ((i & size) == 0) == ascending;
                    detail::compare_exchange(data[i], data[j], up, less);
                    ++ops;
                }
            }
    return ops;
}

/// Replaces `topk` with the k smallest of topk ∪ batch, ascending. Both
/// inputs must be ascending and of equal power-of-two length. Pairing topk[i]
/// with batch[k-1-i] and keeping the smaller yields a bitonic sequence that
/// holds exactly the k smallest; a half-cleaner cascade then sorts it.
inline void merge_topk(std::span<Neighbor> topk, std::span<const Neighbor> batch) {
    const std::size_t k = topk.size();
    if (batch.size() != k)
        throw ParameterError("merge needs equal lengths, got " + std::to_string(k) + " and " +
                             std::to_string(batch.size()));
    if (!std::has_single_bit(k)) throw ParameterError("merge needs a power-of-two length");
    for (std::size_t i = 0; i < k; ++i) topk[i] = std::min(topk[i], batch[k - 1 - i]);
    std::less<> less;
    detail::bitonic_merge(topk, true, less);
}

inline NeighborList merge_topk(const NeighborList& topk, std::span<const Neighbor> batch) {
    NeighborList out = topk;
    merge_topk(std::span<Neighbor>(out.entries), batch);
    return out;
}

} // namespace ladder::knn
