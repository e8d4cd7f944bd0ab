#pragma once

#include <cstdint>
#include <vector>

#include "zres/core_model.hpp"

namespace zres {

/// Mixed-radix indexing of the half-open box [0, e_1) x ... x [0, e_n).
/// Index order is lexicographic on coordinates.
class BoxIndexer {
public:
    BoxIndexer() = default;
    explicit BoxIndexer(std::vector<int> extents);

    int dim() const { return static_cast<int>(extents_.size()); }
    const std::vector<int>& extents() const { return extents_; }
    std::uint64_t size() const { return size_; }

    bool contains(const LatticePoint& p) const;
    std::uint64_t index(const LatticePoint& p) const;
    LatticePoint point(std::uint64_t index) const;

    /// Lexicographic successor inside the box; false after the last point.
    bool next(LatticePoint& p) const;

private:
    std::vector<int> extents_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 1;
};

/// Visits every point of the box [0, e) in lexicographic order.
template <typename Fn>
void for_each_box_point(const std::vector<int>& extents, Fn&& fn) {
    for (int e : extents)
        if (e <= 0) return;
    BoxIndexer box(extents);
    LatticePoint p = LatticePoint::zero(box.dim());
    do {
        fn(static_cast<const LatticePoint&>(p));
    } while (box.next(p));
}

}  // namespace zres
