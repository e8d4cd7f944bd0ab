#include "zres/box_index.hpp"

#include <limits>

namespace zres {

BoxIndexer::BoxIndexer(std::vector<int> extents) : extents_(std::move(extents)) {
    strides_.assign(extents_.size(), 1);
    size_ = 1;
    for (std::size_t k = extents_.size(); k-- > 0;) {
        strides_[k] = size_;
        const auto e = static_cast<std::uint64_t>(extents_[k] < 0 ? 0 : extents_[k]);
        if (e != 0 && size_ > std::numeric_limits<std::uint64_t>::max() / e)
            throw Error(ErrorKind::BadShape, "box is too large to index");
        size_ *= e;
    }
}

bool BoxIndexer::contains(const LatticePoint& p) const {
    if (p.dim() != dim()) return false;
    for (int j = 0; j < dim(); ++j)
        if (p[j] < 0 || p[j] >= extents_[static_cast<std::size_t>(j)]) return false;
    return true;
}

std::uint64_t BoxIndexer::index(const LatticePoint& p) const {
    std::uint64_t idx = 0;
    for (int j = 0; j < dim(); ++j) idx += strides_[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(p[j]);
    return idx;
}

LatticePoint BoxIndexer::point(std::uint64_t index) const {
    LatticePoint p = LatticePoint::zero(dim());
    for (int j = 0; j < dim(); ++j) {
        const auto stride = strides_[static_cast<std::size_t>(j)];
        p[j] = static_cast<int>(index / stride);
        index %= stride;
    }
    return p;
}

bool BoxIndexer::next(LatticePoint& p) const {
    for (int j = dim(); j-- > 0;) {
        if (++p[j] < extents_[static_cast<std::size_t>(j)]) return true;
        p[j] = 0;
    }
    return false;
}

}  // namespace zres
