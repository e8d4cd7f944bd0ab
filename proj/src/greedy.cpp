#include "zres/greedy.hpp"

#include <algorithm>
#include <deque>

#include "zres/subdivision.hpp"

namespace zres {

bool is_greedy(const TypeVector& t) {
    const int n = t.size() - 1;
    int partial = 0;
    for (int I = 0; I < n; ++I) {
        partial += t[I];
        if (partial > I + 1) return false;
    }
    return true;
}

std::vector<TypeFunction> enumerate_greedy_typefns(int n) {
    if (n < 1) throw Error(ErrorKind::BadShape, "n must be at least 1");
    std::vector<TypeFunction> out;
    for (auto& phi : all_type_functions(n))
        if (is_greedy(type_vector_of(phi, n))) out.push_back(std::move(phi));
    return out;
}

std::uint64_t predicted_size_zonotope(const ZonotopeSystem& sys) {
    std::uint64_t total = 0;
    for (const auto& phi : enumerate_greedy_typefns(sys.rank())) total += cell_size(phi, sys);
    return total;
}

std::vector<GreedyPoint> greedy_closure(const Construction& construction) {
    const BoxIndexer& box = construction.box();
    std::vector<char> visited(static_cast<std::size_t>(box.size()), 0);
    std::deque<LatticePoint> queue;
    construction.for_each_point([&](const LatticePoint& b) {
        if (construction.classify(b).mixed) {
            visited[static_cast<std::size_t>(box.index(b))] = 1;
            queue.push_back(b);
        }
    });
    while (!queue.empty()) {
        const LatticePoint b = std::move(queue.front());
        queue.pop_front();
        for (auto& next : construction.column_support(b)) {
            if (!construction.contains(next))
                throw Error(ErrorKind::Internal,
                            "column (" + next.to_string() + ") of row (" + b.to_string() + ") lies outside B");
            auto& seen = visited[static_cast<std::size_t>(box.index(next))];
            if (!seen) {
                seen = 1;
                queue.push_back(std::move(next));
            }
        }
    }
    // Box indices are lexicographic, so a linear scan yields sorted output.
    std::vector<GreedyPoint> out;
    for (std::uint64_t idx = 0; idx < box.size(); ++idx) {
        if (!visited[static_cast<std::size_t>(idx)]) continue;
        LatticePoint b = box.point(idx);
        PointClass c = construction.classify(b);
        out.push_back({std::move(b), std::move(c.content), c.mixed});
    }
    return out;
}

std::vector<GreedyPoint> greedy_closure(const ZonotopeSystem& sys) {
    return greedy_closure(Construction::zonotope(sys));
}

std::vector<LatticePoint> points_of(const std::vector<GreedyPoint>& closure) {
    std::vector<LatticePoint> out;
    out.reserve(closure.size());
    for (const auto& g : closure) out.push_back(g.point);
    return out;
}

std::vector<LatticePoint> greedy_predicate_set(const Construction& construction) {
    std::vector<LatticePoint> out;
    construction.for_each_point([&](const LatticePoint& b) {
        if (construction.classify(b).greedy) out.push_back(b);
    });
    return out;
}

std::optional<std::pair<LatticePoint, LatticePoint>> find_escape(const Construction& construction) {
    std::optional<std::pair<LatticePoint, LatticePoint>> witness;
    construction.for_each_point([&](const LatticePoint& b) {
        if (witness) return;
        const PointClass c = construction.classify(b);
        if (!c.greedy) return;
        for (const auto& next : construction.column_support(b, c.content)) {
            if (!construction.contains(next) || !construction.classify(next).greedy) {
                witness.emplace(b, next);
                return;
            }
        }
    });
    return witness;
}

bool check_no_escape(const Construction& construction) { return !find_escape(construction).has_value(); }

bool check_no_escape(const ZonotopeSystem& sys) { return check_no_escape(Construction::zonotope(sys)); }

}  // namespace zres
