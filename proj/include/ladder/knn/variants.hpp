#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ladder/errors.hpp"
#include "ladder/knn/bitonic.hpp"
#include "ladder/knn/types.hpp"
#include "ladder/parallel.hpp"

// Multi-query 2-D k-nearest neighbors. All variants return, per query, the k
// smallest (squared distance, index) pairs in ascending order; queries are
// split across `workers`.
namespace ladder::knn {

namespace detail {

inline void validate_problem(std::span<const Point> data, std::span<const Point> queries, std::size_t k) {
    validate_k(k);
    validate_cloud(data, "data");
    validate_cloud(queries, "queries");
    if (data.size() < k)
        throw InsufficientDataError("k = " + std::to_string(k) + " exceeds the " + std::to_string(data.size()) +
                                    " data points");
    if (data.size() >= kInvalidIndex) throw ParameterError("data set too large for 32-bit indices");
}

template <typename PerQuery>
KnnResult for_each_query(std::size_t query_count, std::size_t workers, PerQuery&& per_query) {
    KnnResult result(query_count);
    parallel_for(workers, query_count, [&](std::size_t, IndexRange qs) {
        auto solve = per_query();
        for (std::size_t q = qs.begin; q < qs.end; ++q) result[q] = solve(q);
    });
    return result;
}

struct NoObserver {
    void operator()(std::size_t, const Neighbor&) const noexcept {}
};

} // namespace detail

/// Brute-force oracle: all N distances, partially sorted.
inline KnnResult knn_reference(std::span<const Point> data, std::span<const Point> queries, std::size_t k,
                               std::size_t workers = 1) {
    detail::validate_problem(data, queries, k);
    return detail::for_each_query(queries.size(), workers, [&] {
        return [&, all = std::vector<Neighbor>(data.size())](std::size_t q) mutable {
            for (std::size_t i = 0; i < data.size(); ++i)
                all[i] = {squared_distance(queries[q], data[i]), static_cast<PointIndex>(i)};
            std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
            return NeighborList{{all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k)}};
        };
    });
}

/// Per-query binary max-heap of size k; the root is replaced whenever a
/// closer point arrives.
inline KnnResult knn_heap(std::span<const Point> data, std::span<const Point> queries, std::size_t k,
                          std::size_t workers = 1) {
    detail::validate_problem(data, queries, k);
    return detail::for_each_query(queries.size(), workers, [&] {
        return [&](std::size_t q) {
            std::vector<Neighbor> heap;
            heap.reserve(k);
            for (std::size_t i = 0; i < data.size(); ++i) {
                const Neighbor cand{squared_distance(queries[q], data[i]), static_cast<PointIndex>(i)};
                if (heap.size() < k) {
                    heap.push_back(cand);
                    std::push_heap(heap.begin(), heap.end());
                } else if (cand < heap.front()) {
                    std::pop_heap(heap.begin(), heap.end());
                    heap.back() = cand;
                    std::push_heap(heap.begin(), heap.end());
                }
            }
            std::sort_heap(heap.begin(), heap.end());
            return NeighborList{std::move(heap)};
        };
    });
}

/// Sorted top-k array updated one candidate at a time by insertion.
inline KnnResult knn_sorted_insert(std::span<const Point> data, std::span<const Point> queries, std::size_t k,
                                   std::size_t workers = 1) {
    detail::validate_problem(data, queries, k);
    return detail::for_each_query(queries.size(), workers, [&] {
        return [&](std::size_t q) {
            std::vector<Neighbor> top(k, Neighbor::sentinel());
            for (std::size_t i = 0; i < data.size(); ++i) {
                const Neighbor cand{squared_distance(queries[q], data[i]), static_cast<PointIndex>(i)};
                if (!(cand < top.back())) continue;
                std::size_t pos = k - 1;
                for (; pos > 0 && cand < top[pos - 1]; --pos) top[pos] = top[pos - 1];
                top[pos] = cand;
            }
            return NeighborList{std::move(top)};
        };
    });
}

/// How a full candidate buffer is folded into the top-k list.
enum class FlushMethod {
    /// Bitonic sort of the padded buffer, then bitonic merge.
    Bitonic,
    /// Library sort and merge.
    LibrarySort,
};

/// Top-k plus candidate buffer. Data points stream in batches; a point whose
/// (distance, index) beats the current k-th entry goes to the buffer, and a
/// buffer that reaches k entries is sorted and merged into the top-k list,
/// which tightens the threshold. The last partial buffer is padded with
/// sentinels and flushed the same way. `observer(query, kth)` sees the k-th
/// entry after every merge.
template <typename Observer = detail::NoObserver>
KnnResult knn_buffered(std::span<const Point> data, std::span<const Point> queries, std::size_t k,
                       std::size_t batch_size, std::size_t workers = 1, FlushMethod method = FlushMethod::Bitonic,
                       Observer observer = {}) {
    detail::validate_problem(data, queries, k);
    if (batch_size == 0) throw ParameterError("batch size must be at least 1");
    return detail::for_each_query(queries.size(), workers, [&] {
        return [&, batch = std::vector<double>(std::min(batch_size, data.size())), buffer = CandidateBuffer(k),
                merged = std::vector<Neighbor>(2 * k)](std::size_t q) mutable {
            std::vector<Neighbor> top(k, Neighbor::sentinel());
            const auto flush = [&] {
                auto cands = buffer.padded();
                if (method == FlushMethod::Bitonic) {
                    bitonic_sort(cands);
                    merge_topk(std::span<Neighbor>(top), cands);
                } else {
                    std::sort(cands.begin(), cands.end());
                    std::merge(top.begin(), top.end(), cands.begin(), cands.end(), merged.begin());
                    std::copy_n(merged.begin(), k, top.begin());
                }
                buffer.reset();
                observer(q, top.back());
            };
            const Point query = queries[q];
            for (std::size_t start = 0; start < data.size(); start += batch.size()) {
                const std::size_t len = std::min(batch.size(), data.size() - start);
                for (std::size_t i = 0; i < len; ++i) batch[i] = squared_distance(query, data[start + i]);
                for (std::size_t i = 0; i < len; ++i) {
                    const Neighbor cand{batch[i], static_cast<PointIndex>(start + i)};
                    if (!(cand < top.back())) continue;
                    buffer.push(cand);
                    if (buffer.full()) flush();
                }
            }
            if (!buffer.empty()) flush();
            return NeighborList{std::move(top)};
        };
    });
}

/// A sorted list of k entries viewed as 32 consecutive runs of k/32
/// entries, run t covering positions [t*k/32, (t+1)*k/32).
class LanePartitionView {
public:
    explicit LanePartitionView(std::span<const Neighbor> list) : list_(list), run_length_(list.size() / kLanes) {}

    static constexpr std::size_t run_count() noexcept { return kLanes; }
    std::size_t run_length() const noexcept { return run_length_; }

    std::span<const Neighbor> run(std::size_t t) const { return list_.subspan(t * run_length_, run_length_); }

    std::vector<Neighbor> concatenate() const {
        std::vector<Neighbor> out;
        out.reserve(list_.size());
        for (std::size_t t = 0; t < run_count(); ++t) {
            const auto r = run(t);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }

private:
    std::span<const Neighbor> list_;
    std::size_t run_length_;
};

/// Builds the 32-run view of a valid list and checks that the runs tile it
/// exactly. Cannot fail for k a power of two in [32, 1024]; an invalid list
/// is reported as a ParameterError.
inline LanePartitionView validate_lane_partition(const NeighborList& list) {
    validate_k(list.k());
    LanePartitionView view(list.entries);
    if (view.run_length() * kLanes != list.k() || view.concatenate() != list.entries)
        throw ParameterError("lane partition does not reproduce the list");
    return view;
}

} // namespace ladder::knn
