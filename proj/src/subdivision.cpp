#include "zres/subdivision.hpp"

#include "zres/box_index.hpp"

namespace zres {

std::vector<int> box_extents(const ZonotopeSystem& sys) {
    std::vector<int> extents;
    for (int j = 0; j < sys.rank(); ++j) extents.push_back(sys.column_sum(j));
    return extents;
}

std::uint64_t lattice_size(const ZonotopeSystem& sys) { return BoxIndexer(box_extents(sys)).size(); }

std::vector<LatticePoint> enumerate_B(const ZonotopeSystem& sys) {
    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>(lattice_size(sys)));
    for_each_box_point(box_extents(sys), [&](const LatticePoint& b) { points.push_back(b); });
    return points;
}

bool in_B(const LatticePoint& b, const ZonotopeSystem& sys) {
    if (b.dim() != sys.rank()) return false;
    for (int j = 0; j < sys.rank(); ++j)
        if (b[j] < 0 || b[j] >= sys.column_sum(j)) return false;
    return true;
}

TypeFunction type_function_of(const LatticePoint& b, const ZonotopeSystem& sys) {
    if (!in_B(b, sys)) throw Error(ErrorKind::PointOutOfRange, "point (" + b.to_string() + ") is not in B");
    const int n = sys.rank();
    TypeFunction phi{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int j = 0; j < n; ++j) {
        int i = 0;
        while (b[j] >= sys.prefix(i + 1, j)) ++i;
        phi.values[static_cast<std::size_t>(j)] = i;
    }
    return phi;
}

RowContent row_content_of_cell(const TypeFunction& phi, const ZonotopeSystem& sys) {
    const int n = sys.rank();
    const TypeVector t = type_vector_of(phi, n);
    int row = n;
    while (row >= 0 && t[row] != 0) --row;
    if (row < 0) throw Error(ErrorKind::Internal, "type vector " + to_string(t) + " has no zero entry");
    LatticePoint vertex = LatticePoint::zero(n);
    for (int j = 0; j < n; ++j) {
        if (phi[j] == row) throw Error(ErrorKind::Internal, "coordinate lies in the interval of the row content");
        vertex[j] = phi[j] < row ? 0 : sys.bound(row, j);
    }
    return {row, std::move(vertex)};
}

RowContent row_content_of(const LatticePoint& b, const ZonotopeSystem& sys) {
    return row_content_of_cell(type_function_of(b, sys), sys);
}

bool is_mixed(const TypeVector& t) {
    int zeros = 0;
    for (int v : t.t) zeros += v == 0;
    return zeros == 1;
}

std::vector<LatticePoint> cell_points(const TypeFunction& phi, const ZonotopeSystem& sys) {
    const int n = sys.rank();
    std::vector<int> extents;
    LatticePoint base = LatticePoint::zero(n);
    for (int j = 0; j < n; ++j) {
        extents.push_back(sys.bound(phi[j], j));
        base[j] = sys.prefix(phi[j], j);
    }
    std::vector<LatticePoint> points;
    for_each_box_point(extents, [&](const LatticePoint& offset) { points.push_back(base + offset); });
    return points;
}

std::uint64_t cell_size(const TypeFunction& phi, const ZonotopeSystem& sys) {
    std::uint64_t count = 1;
    for (int j = 0; j < sys.rank(); ++j) count *= static_cast<std::uint64_t>(sys.bound(phi[j], j));
    return count;
}

std::vector<LatticePoint> column_support(const LatticePoint& b, const ZonotopeSystem& sys) {
    const RowContent rc = row_content_of(b, sys);
    const LatticePoint corner = b - rc.vertex;
    std::vector<int> extents;
    for (int j = 0; j < sys.rank(); ++j) extents.push_back(sys.bound(rc.poly, j) + 1);
    std::vector<LatticePoint> points;
    for_each_box_point(extents, [&](const LatticePoint& a) { points.push_back(corner + a); });
    return points;
}

std::vector<TypeFunction> all_type_functions(int n) {
    std::vector<TypeFunction> out;
    for_each_box_point(std::vector<int>(static_cast<std::size_t>(n), n + 1), [&](const LatticePoint& p) {
        out.push_back(TypeFunction{std::vector<int>(p.coords().begin(), p.coords().end())});
    });
    return out;
}

LatticePoint reflect_point(const LatticePoint& b, const ZonotopeSystem& sys) {
    LatticePoint out = b;
    for (int j = 0; j < sys.rank(); ++j) out[j] = sys.column_sum(j) - 1 - b[j];
    return out;
}

}  // namespace zres
