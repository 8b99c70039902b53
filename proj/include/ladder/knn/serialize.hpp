#pragma once

#include <charconv>
#include <string>

#include "ladder/knn/types.hpp"

namespace ladder::knn {

/// Shortest decimal form that parses back to the same double.
inline std::string format_distance(double d) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, res.ptr);
}

/// Per query: "q=<i> k=<k>:" then k lines "<index>\t<distance>".
inline std::string serialize(const KnnResult& result) {
    std::string out;
    for (std::size_t q = 0; q < result.size(); ++q) {
        const auto& list = result[q];
        out += "q=" + std::to_string(q) + " k=" + std::to_string(list.k()) + ":\n";
        for (const auto& n : list.entries) {
            out += std::to_string(n.index);
            out += '\t';
            out += format_distance(n.distance);
            out += '\n';
        }
    }
    return out;
}

} // namespace ladder::knn
