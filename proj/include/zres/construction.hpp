#pragma once

#include <cstdint>
#include <vector>

#include "zres/box_index.hpp"
#include "zres/core_model.hpp"

namespace zres {

/// Which of the two extreme lifting orientations induces the subdivision.
/// Reflected is the canonical subdivision conjugated by the point reflection
/// of B (composed with the reversal of coordinates inside each variable group).
enum class Orientation { Canonical, Reflected };

/// Everything the matrix machinery needs to know about one lattice point.
struct PointClass {
    TypeFunction phi;
    TypeVector type;
    RowContent content;
    bool mixed = false;
    bool greedy = false;
};

/// A support family together with its point set B and a combinatorial mixed
/// subdivision of it. Two front-ends produce these: the n-zonotope systems
/// directly, and multihomogeneous systems through their zonotope embedding.
///
/// In the grouped (multihomogeneous) case the coordinates are partitioned into
/// consecutive groups; B keeps only points that are strictly increasing inside
/// every group, and the supports only points that are nondecreasing inside
/// every group. Groups of size one impose nothing.
class Construction {
public:
    static Construction zonotope(const ZonotopeSystem& sys, Orientation orientation = Orientation::Canonical);
    static Construction grouped(const ZonotopeSystem& box_system, std::vector<int> group_sizes,
                                Orientation orientation = Orientation::Canonical);

    int rank() const { return box_system_.rank(); }
    const ZonotopeSystem& box_system() const { return box_system_; }
    const std::vector<int>& group_sizes() const { return group_sizes_; }
    Orientation orientation() const { return orientation_; }
    bool is_grouped() const;
    const BoxIndexer& box() const { return box_; }

    Construction with_orientation(Orientation orientation) const;

    bool contains(const LatticePoint& b) const;
    std::vector<LatticePoint> points() const;
    std::uint64_t point_count() const;

    template <typename Fn>
    void for_each_point(Fn&& fn) const {
        for_each_box_point(box_.extents(), [&](const LatticePoint& b) {
            if (group_monotone(b, true)) fn(b);
        });
    }

    /// A_i, lexicographically.
    const std::vector<LatticePoint>& support(int i) const { return supports_[static_cast<std::size_t>(i)]; }
    bool in_support(int i, const LatticePoint& a) const;

    /// Throws PointOutOfRange for points outside B.
    PointClass classify(const LatticePoint& b) const;

    /// b - a(b) + A_{i(b)}.
    std::vector<LatticePoint> column_support(const LatticePoint& b) const;
    std::vector<LatticePoint> column_support(const LatticePoint& b, const RowContent& rc) const;

    /// The orientation involution on points and, per polynomial, on supports.
    LatticePoint flip_point(const LatticePoint& b) const;
    LatticePoint flip_support(int i, const LatticePoint& a) const;

private:
    Construction(ZonotopeSystem box_system, std::vector<int> group_sizes, Orientation orientation);

    bool group_monotone(const LatticePoint& p, bool strict) const;
    LatticePoint reverse_groups(LatticePoint p) const;
    PointClass classify_canonical(const LatticePoint& b) const;

    ZonotopeSystem box_system_;
    std::vector<int> group_sizes_;
    Orientation orientation_;
    BoxIndexer box_;
    std::vector<std::vector<LatticePoint>> supports_;
};

}  // namespace zres
