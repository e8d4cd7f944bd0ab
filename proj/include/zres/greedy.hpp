#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zres/construction.hpp"
#include "zres/core_model.hpp"

namespace zres {

/// Prefix-sum bound Sum_{i <= I} t_i <= I + 1 for every I < n.
bool is_greedy(const TypeVector& t);

/// Every phi with |phi^{-1}({0..I})| <= I+1 for all I < n, lexicographically.
std::vector<TypeFunction> enumerate_greedy_typefns(int n);

/// Sum over greedy phi of Prod_j a_{phi(j)j}.
std::uint64_t predicted_size_zonotope(const ZonotopeSystem& sys);

struct GreedyPoint {
    LatticePoint point;
    RowContent content;
    bool mixed = false;
};

/// Least superset of the mixed points of B closed under b -> b - a(b) + A_{i(b)},
/// sorted lexicographically. Throws Internal if a column support leaves B.
std::vector<GreedyPoint> greedy_closure(const Construction& construction);
std::vector<GreedyPoint> greedy_closure(const ZonotopeSystem& sys);

std::vector<LatticePoint> points_of(const std::vector<GreedyPoint>& closure);

/// {b in B : is_greedy(t_b)}, lexicographically.
std::vector<LatticePoint> greedy_predicate_set(const Construction& construction);

/// A greedy point b together with a column b' of its row that is not greedy
/// (or not in B at all), if one exists.
std::optional<std::pair<LatticePoint, LatticePoint>> find_escape(const Construction& construction);

bool check_no_escape(const Construction& construction);
bool check_no_escape(const ZonotopeSystem& sys);

}  // namespace zres
