#include "zres/construction.hpp"

#include <algorithm>
#include <numeric>

#include "zres/greedy.hpp"
#include "zres/subdivision.hpp"

namespace zres {

Construction::Construction(ZonotopeSystem box_system, std::vector<int> group_sizes, Orientation orientation)
    : box_system_(std::move(box_system)),
      group_sizes_(std::move(group_sizes)),
      orientation_(orientation),
      box_(box_extents(box_system_)) {
    const int n = box_system_.rank();
    if (std::accumulate(group_sizes_.begin(), group_sizes_.end(), 0) != n)
        throw Error(ErrorKind::BadShape, "group sizes must add up to the lattice rank");
    for (int i = 0; i <= n; ++i) {
        std::vector<int> extents;
        for (int j = 0; j < n; ++j) extents.push_back(box_system_.bound(i, j) + 1);
        std::vector<LatticePoint> support;
        for_each_box_point(extents, [&](const LatticePoint& a) {
            if (group_monotone(a, false)) support.push_back(a);
        });
        supports_.push_back(std::move(support));
    }
}

Construction Construction::zonotope(const ZonotopeSystem& sys, Orientation orientation) {
    return Construction(sys, std::vector<int>(static_cast<std::size_t>(sys.rank()), 1), orientation);
}

Construction Construction::grouped(const ZonotopeSystem& box_system, std::vector<int> group_sizes,
                                   Orientation orientation) {
    return Construction(box_system, std::move(group_sizes), orientation);
}

bool Construction::is_grouped() const {
    return std::any_of(group_sizes_.begin(), group_sizes_.end(), [](int s) { return s > 1; });
}

Construction Construction::with_orientation(Orientation orientation) const {
    Construction out = *this;
    out.orientation_ = orientation;
    return out;
}

bool Construction::group_monotone(const LatticePoint& p, bool strict) const {
    int start = 0;
    for (int size : group_sizes_) {
        for (int k = start + 1; k < start + size; ++k) {
            if (strict ? p[k - 1] >= p[k] : p[k - 1] > p[k]) return false;
        }
        start += size;
    }
    return true;
}

LatticePoint Construction::reverse_groups(LatticePoint p) const {
    int start = 0;
    for (int size : group_sizes_) {
        auto coords = p.mutable_coords().subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(size));
        std::reverse(coords.begin(), coords.end());
        start += size;
    }
    return p;
}

bool Construction::contains(const LatticePoint& b) const { return box_.contains(b) && group_monotone(b, true); }

std::vector<LatticePoint> Construction::points() const {
    std::vector<LatticePoint> out;
    for_each_point([&](const LatticePoint& b) { out.push_back(b); });
    return out;
}

std::uint64_t Construction::point_count() const {
    if (!is_grouped()) return box_.size();
    std::uint64_t count = 0;
    for_each_point([&](const LatticePoint&) { ++count; });
    return count;
}

bool Construction::in_support(int i, const LatticePoint& a) const {
    if (a.dim() != rank()) return false;
    for (int j = 0; j < rank(); ++j)
        if (a[j] < 0 || a[j] > box_system_.bound(i, j)) return false;
    return group_monotone(a, false);
}

LatticePoint Construction::flip_point(const LatticePoint& b) const {
    return reverse_groups(reflect_point(b, box_system_));
}

LatticePoint Construction::flip_support(int i, const LatticePoint& a) const {
    return reverse_groups(box_system_.top_vertex(i) - a);
}

PointClass Construction::classify_canonical(const LatticePoint& b) const {
    PointClass c;
    c.phi = type_function_of(b, box_system_);
    c.type = type_vector_of(c.phi, rank());
    c.content = row_content_of_cell(c.phi, box_system_);
    c.mixed = is_mixed(c.type);
    c.greedy = is_greedy(c.type);
    return c;
}

PointClass Construction::classify(const LatticePoint& b) const {
    if (!contains(b)) throw Error(ErrorKind::PointOutOfRange, "point (" + b.to_string() + ") is not in B");
    if (orientation_ == Orientation::Canonical) return classify_canonical(b);
    PointClass c = classify_canonical(flip_point(b));
    c.content.vertex = flip_support(c.content.poly, c.content.vertex);
    return c;
}

std::vector<LatticePoint> Construction::column_support(const LatticePoint& b) const {
    return column_support(b, classify(b).content);
}

std::vector<LatticePoint> Construction::column_support(const LatticePoint& b, const RowContent& rc) const {
    const LatticePoint corner = b - rc.vertex;
    std::vector<LatticePoint> out;
    const auto& support = supports_[static_cast<std::size_t>(rc.poly)];
    out.reserve(support.size());
    for (const auto& a : support) out.push_back(corner + a);
    return out;
}

}  // namespace zres
