#include "zres/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace zres {

SymbolicMatrix::SymbolicMatrix(int rank, std::vector<LatticePoint> points, std::vector<bool> mixed,
                               std::vector<bool> greedy, std::vector<std::vector<MatrixEntry>> rows)
    : rank_(rank),
      points_(std::move(points)),
      mixed_(std::move(mixed)),
      greedy_(std::move(greedy)),
      rows_(std::move(rows)) {
    const auto n = points_.size();
    if (mixed_.size() != n || greedy_.size() != n || rows_.size() != n)
        throw Error(ErrorKind::BadShape, "inconsistent symbolic matrix layout");
}

std::size_t SymbolicMatrix::entry_count() const {
    return std::accumulate(rows_.begin(), rows_.end(), std::size_t{0},
                           [](std::size_t acc, const auto& r) { return acc + r.size(); });
}

std::optional<CoeffRef> SymbolicMatrix::entry(std::size_t row, std::size_t col) const {
    const auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const MatrixEntry& e, std::size_t c) { return e.col < c; });
    if (it == r.end() || it->col != col) return std::nullopt;
    return it->coeff;
}

SymbolicMatrix build_matrix(const std::vector<LatticePoint>& points, const Construction& construction) {
    struct Row {
        LatticePoint point;
        PointClass cls;
        int block = 0;
    };
    std::vector<Row> layout;
    layout.reserve(points.size());
    for (const auto& b : points) {
        if (!construction.contains(b))
            throw Error(ErrorKind::PointOutOfRange, "point (" + b.to_string() + ") is not in B");
        PointClass c = construction.classify(b);
        const int block = c.greedy ? (c.mixed ? 0 : 1) : 2;
        layout.push_back({b, std::move(c), block});
    }
    std::sort(layout.begin(), layout.end(), [](const Row& x, const Row& y) {
        return x.block != y.block ? x.block < y.block : x.point < y.point;
    });
    layout.erase(std::unique(layout.begin(), layout.end(), [](const Row& x, const Row& y) { return x.point == y.point; }),
                 layout.end());

    const BoxIndexer& box = construction.box();
    std::vector<std::int64_t> position(static_cast<std::size_t>(box.size()), -1);
    for (std::size_t k = 0; k < layout.size(); ++k)
        position[static_cast<std::size_t>(box.index(layout[k].point))] = static_cast<std::int64_t>(k);

    std::vector<LatticePoint> ordered;
    std::vector<bool> mixed;
    std::vector<bool> greedy;
    std::vector<std::vector<MatrixEntry>> rows;
    for (const auto& r : layout) {
        const RowContent& rc = r.cls.content;
        const LatticePoint corner = r.point - rc.vertex;
        std::vector<MatrixEntry> entries;
        for (const auto& a : construction.support(rc.poly)) {
            const LatticePoint col = corner + a;
            const std::int64_t pos = box.contains(col) ? position[static_cast<std::size_t>(box.index(col))] : -1;
            if (pos < 0)
                throw Error(ErrorKind::NotClosed, "row (" + r.point.to_string() + ") needs column (" +
                                                      col.to_string() + ") which is not in the point set");
            entries.push_back({static_cast<std::size_t>(pos), CoeffRef{rc.poly, a}});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const MatrixEntry& x, const MatrixEntry& y) { return x.col < y.col; });
        ordered.push_back(r.point);
        mixed.push_back(r.cls.mixed);
        greedy.push_back(r.cls.greedy);
        rows.push_back(std::move(entries));
    }
    return SymbolicMatrix(construction.rank(), std::move(ordered), std::move(mixed), std::move(greedy),
                          std::move(rows));
}

SymbolicMatrix build_matrix(const std::vector<LatticePoint>& points, const ZonotopeSystem& sys) {
    return build_matrix(points, Construction::zonotope(sys));
}

SymbolicMatrix restrict_matrix(const SymbolicMatrix& m, const std::vector<bool>& keep) {
    if (keep.size() != m.size()) throw Error(ErrorKind::BadShape, "mask length does not match the matrix");
    std::vector<std::int64_t> remap(m.size(), -1);
    std::int64_t next = 0;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (keep[k]) remap[k] = next++;

    std::vector<LatticePoint> points;
    std::vector<bool> mixed;
    std::vector<bool> greedy;
    std::vector<std::vector<MatrixEntry>> rows;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (!keep[k]) continue;
        std::vector<MatrixEntry> entries;
        for (const auto& e : m.row(k))
            if (remap[e.col] >= 0) entries.push_back({static_cast<std::size_t>(remap[e.col]), e.coeff});
        points.push_back(m.point(k));
        mixed.push_back(m.mixed(k));
        greedy.push_back(m.greedy(k));
        rows.push_back(std::move(entries));
    }
    return SymbolicMatrix(m.rank(), std::move(points), std::move(mixed), std::move(greedy), std::move(rows));
}

SymbolicMatrix principal_submatrix(const SymbolicMatrix& m) {
    std::vector<bool> keep(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) keep[k] = !m.mixed(k);
    return restrict_matrix(m, keep);
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "triplet") return ExportFormat::Triplet;
    if (name == "dense") return ExportFormat::Dense;
    throw Error(ErrorKind::UnsupportedFormat, "unknown matrix format '" + std::string(name) +
                                                  "' (expected 'triplet' or 'dense')");
}

void export_matrix(const SymbolicMatrix& m, ExportFormat format, std::ostream& out) {
    out << "# n=" << m.rank() << '\n' << "# rows=" << m.size() << '\n' << "# order=greedy-first-lex\n";
    switch (format) {
        case ExportFormat::Triplet:
            for (std::size_t r = 0; r < m.size(); ++r)
                for (const auto& e : m.row(r))
                    out << m.point(r).to_string() << " ; " << m.point(e.col).to_string() << " ; " << e.coeff.poly
                        << " ; " << e.coeff.support.to_string() << '\n';
            break;
        case ExportFormat::Dense:
            for (std::size_t r = 0; r < m.size(); ++r) {
                const auto& entries = m.row(r);
                auto it = entries.begin();
                for (std::size_t c = 0; c < m.size(); ++c) {
                    if (c) out << ' ';
                    if (it != entries.end() && it->col == c) {
                        out << it->coeff.token();
                        ++it;
                    } else {
                        out << '0';
                    }
                }
                out << '\n';
            }
            break;
    }
}

std::string export_matrix(const SymbolicMatrix& m, ExportFormat format) {
    std::ostringstream out;
    export_matrix(m, format, out);
    return out.str();
}

}  // namespace zres
