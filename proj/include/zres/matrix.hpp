#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zres/construction.hpp"
#include "zres/core_model.hpp"

namespace zres {

struct MatrixEntry {
    std::size_t col = 0;
    CoeffRef coeff;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Square sparse matrix whose rows and columns are indexed by the same ordered
/// list of lattice points. Row b holds the coefficients of chi^{b-a(b)} F_{i(b)}:
/// entry (b, b') is u_{i(b), b'-b+a(b)} whenever that support point exists.
///
/// Points are ordered greedy-mixed, greedy-non-mixed, then the rest, each
/// block lexicographic.
class SymbolicMatrix {
public:
    SymbolicMatrix(int rank, std::vector<LatticePoint> points, std::vector<bool> mixed, std::vector<bool> greedy,
                   std::vector<std::vector<MatrixEntry>> rows);

    int rank() const { return rank_; }
    std::size_t size() const { return points_.size(); }
    std::size_t entry_count() const;

    const std::vector<LatticePoint>& points() const { return points_; }
    const LatticePoint& point(std::size_t k) const { return points_[k]; }
    bool mixed(std::size_t k) const { return mixed_[k]; }
    bool greedy(std::size_t k) const { return greedy_[k]; }

    /// Entries of a row, sorted by column.
    const std::vector<MatrixEntry>& row(std::size_t k) const { return rows_[k]; }
    std::optional<CoeffRef> entry(std::size_t row, std::size_t col) const;

private:
    int rank_ = 0;
    std::vector<LatticePoint> points_;
    std::vector<bool> mixed_;
    std::vector<bool> greedy_;
    std::vector<std::vector<MatrixEntry>> rows_;
};

/// Throws PointOutOfRange for points outside B and NotClosed when some row
/// needs a column that is not in the point set.
SymbolicMatrix build_matrix(const std::vector<LatticePoint>& points, const Construction& construction);
SymbolicMatrix build_matrix(const std::vector<LatticePoint>& points, const ZonotopeSystem& sys);

/// Rows and columns with keep[k] set, in the original order.
SymbolicMatrix restrict_matrix(const SymbolicMatrix& m, const std::vector<bool>& keep);

/// E: the rows and columns of points in non-mixed cells.
SymbolicMatrix principal_submatrix(const SymbolicMatrix& m);

enum class ExportFormat { Triplet, Dense };

ExportFormat parse_export_format(std::string_view name);

void export_matrix(const SymbolicMatrix& m, ExportFormat format, std::ostream& out);
std::string export_matrix(const SymbolicMatrix& m, ExportFormat format);

}  // namespace zres
