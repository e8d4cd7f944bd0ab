#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "zres/core_model.hpp"

namespace zres::testing {

inline IntMatrix all_ones(int n) {
    return IntMatrix(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

inline ZonotopeSystem ones_system(int n) { return validate_zonotope(all_ones(n)); }

/// A valid random box system: rows 0..n-1 sorted per column, row n free.
inline ZonotopeSystem random_system(std::mt19937_64& rng, int n, int max_bound) {
    std::uniform_int_distribution<int> dist(1, max_bound);
    IntMatrix bounds(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> column;
        for (int i = 0; i < n; ++i) column.push_back(dist(rng));
        std::sort(column.begin(), column.end());
        for (int i = 0; i < n; ++i) bounds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = column[static_cast<std::size_t>(i)];
        bounds[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = dist(rng);
    }
    return validate_zonotope(bounds);
}

}  // namespace zres::testing
