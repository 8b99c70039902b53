#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/histogram/histogram.hpp"
#include "ladder/parallel.hpp"

namespace ladder::histogram {

/// How a worker's share of the input is laid out.
enum class IterationPattern {
    /// Worker w owns one contiguous slice (balanced split), walked in chunks
    /// of itemsPerWorker; the slice's last chunk may be short.
    ContiguousBlock,
    /// Chunk j covers [j*items, (j+1)*items); worker w takes chunks w,
    /// w + workers, w + 2*workers, ... The final chunk is clipped to the
    /// input length.
    WorkerStride,
};

inline std::string_view to_string(IterationPattern p) noexcept {
    return p == IterationPattern::ContiguousBlock ? "block" : "stride";
}

inline IterationPattern parse_pattern(std::string_view s) {
    if (s == "block" || s == "contiguous") return IterationPattern::ContiguousBlock;
    if (s == "stride") return IterationPattern::WorkerStride;
    throw ParameterError("unknown iteration pattern '" + std::string(s) + "' (valid: block, stride)");
}

/// Calls chunk(begin, end) for every chunk worker w processes.
template <typename ChunkFn>
void for_each_chunk(IterationPattern pattern, std::size_t length, std::size_t workers, std::size_t items,
                    std::size_t w, ChunkFn&& chunk) {
    if (pattern == IterationPattern::ContiguousBlock) {
        const IndexRange slice = partition_range(length, workers, w);
        for (std::size_t b = slice.begin; b < slice.end; b += items) chunk(b, std::min(b + items, slice.end));
    } else {
        const std::size_t stride = workers * items;
        for (std::size_t b = w * items; b < length; b += stride) chunk(b, std::min(b + items, length));
    }
}

namespace detail {

inline void require_workers(std::size_t workers) {
    if (workers == 0) throw ParameterError("worker count must be at least 1");
}

inline void require_items(std::size_t items) {
    if (items == 0) throw ParameterError("items per worker must be at least 1");
}

/// Private counters with one trailing slot that swallows out-of-range bytes.
class PrivateBins {
public:
    explicit PrivateBins(const CharRange& range) : range_(range), counts_(range.bin_count() + 1, 0) {}

    void add(const std::uint8_t* first, const std::uint8_t* last) noexcept {
        for (; first != last; ++first) ++counts_[range_.bin_of(*first)];
    }

    /// Adds the non-zero bins into the shared result.
    void merge_into(std::vector<std::atomic<Count>>& shared) const noexcept {
        for (std::size_t b = 0; b + 1 < counts_.size(); ++b)
            if (counts_[b] != 0) shared[b].fetch_add(counts_[b], std::memory_order_relaxed);
    }

private:
    CharRange range_;
    std::vector<Count> counts_;
};

inline Histogram collect(const CharRange& range, const std::vector<std::atomic<Count>>& shared) {
    Histogram h(range);
    for (std::size_t b = 0; b < shared.size(); ++b) h.bins[b] = shared[b].load(std::memory_order_relaxed);
    return h;
}

} // namespace detail

/// Sequential oracle.
inline Histogram histogram_reference(TextView text, const CharRange& range) {
    Histogram h(range);
    for (const std::uint8_t c : text)
        if (c >= range.from() && c <= range.to()) ++h.bins[c - range.from()];
    return h;
}

/// Every worker increments one shared bin array with atomic adds.
inline Histogram histogram_shared_atomic(TextView text, const CharRange& range, std::size_t workers) {
    detail::require_workers(workers);
    std::vector<std::atomic<Count>> shared(range.bin_count());
    const std::size_t nb = range.bin_count();
    parallel_for(workers, text.size(), [&](std::size_t, IndexRange slice) {
        for (std::size_t i = slice.begin; i < slice.end; ++i) {
            const std::size_t b = range.bin_of(text[i]);
            if (b < nb) shared[b].fetch_add(1, std::memory_order_relaxed);
        }
    });
    return detail::collect(range, shared);
}

/// Each worker owns a local copy updated with atomic adds, then adds every
/// bin into the shared result.
inline Histogram histogram_privatized_atomic(TextView text, const CharRange& range, std::size_t workers) {
    detail::require_workers(workers);
    std::vector<std::atomic<Count>> shared(range.bin_count());
    const std::size_t nb = range.bin_count();
    parallel_for(workers, text.size(), [&](std::size_t, IndexRange slice) {
        std::vector<std::atomic<Count>> local(nb);
        for (std::size_t i = slice.begin; i < slice.end; ++i) {
            const std::size_t b = range.bin_of(text[i]);
            if (b < nb) local[b].fetch_add(1, std::memory_order_relaxed);
        }
        for (std::size_t b = 0; b < nb; ++b)
            shared[b].fetch_add(local[b].load(std::memory_order_relaxed), std::memory_order_relaxed);
    });
    return detail::collect(range, shared);
}

/// Each worker counts its contiguous slice privately and merges once,
/// skipping bins that stayed zero.
inline Histogram histogram_privatized(TextView text, const CharRange& range, std::size_t workers) {
    detail::require_workers(workers);
    std::vector<std::atomic<Count>> shared(range.bin_count());
    parallel_for(workers, text.size(), [&](std::size_t, IndexRange slice) {
        detail::PrivateBins local(range);
        local.add(text.data() + slice.begin, text.data() + slice.end);
        local.merge_into(shared);
    });
    return detail::collect(range, shared);
}

/// Privatized counting where each worker consumes itemsPerWorker bytes per
/// chunk following `pattern`.
inline Histogram histogram_multiitem(TextView text, const CharRange& range, std::size_t workers,
                                     std::size_t items_per_worker, IterationPattern pattern) {
    detail::require_workers(workers);
    detail::require_items(items_per_worker);
    std::vector<std::atomic<Count>> shared(range.bin_count());
    parallel_workers(workers, [&](std::size_t w) {
        detail::PrivateBins local(range);
        for_each_chunk(pattern, text.size(), workers, items_per_worker, w, [&](std::size_t b, std::size_t e) {
            local.add(text.data() + b, text.data() + e);
        });
        local.merge_into(shared);
    });
    return detail::collect(range, shared);
}

inline constexpr std::size_t kCopies = 32;

/// Value i of copy c at offset i*32 + c: the 32 copies of one bin are adjacent.
struct StridedCopies {
    static constexpr std::size_t offset(std::size_t bin, std::size_t copy, std::size_t) noexcept {
        return bin * kCopies + copy;
    }
    static constexpr std::size_t storage_size(std::size_t bins) noexcept { return bins * kCopies; }
};

/// Copy c stored as one contiguous histogram at offset c*bins.
struct CopyMajorCopies {
    static constexpr std::size_t offset(std::size_t bin, std::size_t copy, std::size_t bins) noexcept {
        return copy * bins + bin;
    }
    static constexpr std::size_t storage_size(std::size_t bins) noexcept { return bins * kCopies; }
};

/// Copy-major with one padding slot after every copy.
struct PaddedCopies {
    static constexpr std::size_t offset(std::size_t bin, std::size_t copy, std::size_t bins) noexcept {
        return copy * (bins + 1) + bin;
    }
    static constexpr std::size_t storage_size(std::size_t bins) noexcept { return (bins + 1) * kCopies; }
};

/// 32 histogram copies in one flat array, placed by `Layout`.
template <typename Layout>
class CopySet {
public:
    explicit CopySet(std::size_t bins) : bins_(bins), storage_(Layout::storage_size(bins), 0) {}

    static constexpr std::size_t copies() noexcept { return kCopies; }
    std::size_t bin_count() const noexcept { return bins_; }
    std::size_t offset(std::size_t bin, std::size_t copy) const noexcept { return Layout::offset(bin, copy, bins_); }

    void add(std::size_t bin, std::size_t copy, Count n = 1) noexcept { storage_[offset(bin, copy)] += n; }

    /// For copies shared by more than one worker.
    void add_atomic(std::size_t bin, std::size_t copy, Count n = 1) noexcept {
        std::atomic_ref<Count>(storage_[offset(bin, copy)]).fetch_add(n, std::memory_order_relaxed);
    }

    Count at(std::size_t bin, std::size_t copy) const noexcept { return storage_[offset(bin, copy)]; }

    /// Per-bin sum over all copies.
    std::vector<Count> reduce() const {
        std::vector<Count> out(bins_, 0);
        for (std::size_t b = 0; b < bins_; ++b)
            for (std::size_t c = 0; c < kCopies; ++c) out[b] += at(b, c);
        return out;
    }

    const std::vector<Count>& storage() const noexcept { return storage_; }

private:
    std::size_t bins_;
    std::vector<Count> storage_;
};

using MultiCopyLayout = CopySet<StridedCopies>;

/// Worker w accumulates into copy w mod 32 of a shared copy set, then the
/// copies are reduced by bin. Increments are atomic only when more than 32
/// workers make some copy shared.
template <typename Layout = StridedCopies>
Histogram histogram_multicopy(TextView text, const CharRange& range, std::size_t workers,
                              std::size_t items_per_worker, IterationPattern pattern) {
    detail::require_workers(workers);
    detail::require_items(items_per_worker);
    CopySet<Layout> copies(range.bin_count());
    const std::size_t nb = range.bin_count();
    const bool shared_copies = workers > kCopies;
    parallel_workers(workers, [&](std::size_t w) {
        const std::size_t copy = w % kCopies;
        for_each_chunk(pattern, text.size(), workers, items_per_worker, w, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const std::size_t bin = range.bin_of(text[i]);
                if (bin >= nb) continue;
                if (shared_copies)
                    copies.add_atomic(bin, copy);
                else
                    copies.add(bin, copy);
            }
        });
    });
    return Histogram(range, copies.reduce());
}

} // namespace ladder::histogram
