#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ladder/errors.hpp"

namespace ladder::knn {

using PointIndex = std::uint32_t;

inline constexpr PointIndex kInvalidIndex = std::numeric_limits<PointIndex>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kMinK = 32;
inline constexpr std::size_t kMaxK = 1024;
inline constexpr std::size_t kLanes = 32;

struct Point {
    double x;
    double y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Squared Euclidean distance; every variant goes through this function so
/// results compare bit-exactly.
constexpr double squared_distance(const Point& a, const Point& b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

using PointCloud = std::vector<Point>;

inline void validate_cloud(std::span<const Point> cloud, const char* what) {
    if (cloud.empty()) throw ParameterError(std::string(what) + " must hold at least one point");
    for (std::size_t i = 0; i < cloud.size(); ++i)
        if (!std::isfinite(cloud[i].x) || !std::isfinite(cloud[i].y))
            throw ParameterError(std::string(what) + " point " + std::to_string(i) + " has a non-finite coordinate");
}

/// Candidate neighbor, ordered by (distance, index).
struct Neighbor {
    double distance = kInfinity;
    PointIndex index = kInvalidIndex;

    static constexpr Neighbor sentinel() noexcept { return {}; }
    constexpr bool is_sentinel() const noexcept { return index == kInvalidIndex; }

    friend constexpr bool operator==(const Neighbor&, const Neighbor&) = default;
    friend constexpr bool operator<(const Neighbor& a, const Neighbor& b) noexcept {
        return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
    }
    friend constexpr bool operator>(const Neighbor& a, const Neighbor& b) noexcept { return b < a; }
};

inline bool valid_k(std::size_t k) noexcept { return k >= kMinK && k <= kMaxK && std::has_single_bit(k); }

inline void validate_k(std::size_t k) {
    if (!valid_k(k))
        throw ParameterError("k must be a power of two in [32, 1024], got " + std::to_string(k));
}

/// The k nearest data points of one query, ascending by (distance, index).
struct NeighborList {
    std::vector<Neighbor> entries;

    std::size_t k() const noexcept { return entries.size(); }
    const Neighbor& kth() const { return entries.back(); }

    friend bool operator==(const NeighborList&, const NeighborList&) = default;
};

using KnnResult = std::vector<NeighborList>;

/// Candidates that beat the current k-th neighbor, unordered until flushed.
class CandidateBuffer {
public:
    explicit CandidateBuffer(std::size_t capacity) : entries_(capacity, Neighbor::sentinel()) {}

    std::size_t capacity() const noexcept { return entries_.size(); }
    std::size_t fill() const noexcept { return fill_; }
    bool full() const noexcept { return fill_ == entries_.size(); }
    bool empty() const noexcept { return fill_ == 0; }

    void push(const Neighbor& n) noexcept { entries_[fill_++] = n; }

    /// Pads unused slots with sentinels and exposes all `capacity` slots.
    std::span<Neighbor> padded() noexcept {
        for (std::size_t i = fill_; i < entries_.size(); ++i) entries_[i] = Neighbor::sentinel();
        return entries_;
    }

    std::span<const Neighbor> contents() const noexcept { return {entries_.data(), fill_}; }

    void reset() noexcept { fill_ = 0; }

private:
    std::vector<Neighbor> entries_;
    std::size_t fill_ = 0;
};

} // namespace ladder::knn
