#include "zres/core_model.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

namespace zres {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadShape: return "BadShape";
        case ErrorKind::NonPositiveBound: return "NonPositiveBound";
        case ErrorKind::OrderingViolated: return "OrderingViolated";
        case ErrorKind::SingularGenerators: return "SingularGenerators";
        case ErrorKind::PointOutOfRange: return "PointOutOfRange";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

std::string join(std::span<const int> values) {
    std::ostringstream out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out << ',';
        out << values[k];
    }
    return out.str();
}

}  // namespace

LatticePoint LatticePoint::operator+(const LatticePoint& other) const {
    LatticePoint out = *this;
    for (int j = 0; j < dim(); ++j) out[j] += other[j];
    return out;
}

LatticePoint LatticePoint::operator-(const LatticePoint& other) const {
    LatticePoint out = *this;
    for (int j = 0; j < dim(); ++j) out[j] -= other[j];
    return out;
}

std::string LatticePoint::to_string() const { return join(coords_); }

std::string CoeffRef::token() const { return "u[" + std::to_string(poly) + "][" + support.to_string() + "]"; }

std::string to_string(const TypeFunction& phi) { return "(" + join(phi.values) + ")"; }
std::string to_string(const TypeVector& t) { return "(" + join(t.t) + ")"; }

// ---------------------------------------------------------------------------
// ZonotopeSystem

ZonotopeSystem::ZonotopeSystem(int n, std::vector<std::vector<int>> bounds)
    : n_(n), bounds_(std::move(bounds)) {
    prefix_.assign(static_cast<std::size_t>(n_ + 2), std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j < n_; ++j)
            prefix_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] = prefix(i, j) + bound(i, j);
}

LatticePoint ZonotopeSystem::top_vertex(int i) const { return LatticePoint(bounds_[static_cast<std::size_t>(i)]); }

ZonotopeSystem validate_zonotope(const IntMatrix& bounds) {
    if (bounds.size() < 2)
        throw Error(ErrorKind::BadShape, "a system needs n+1 >= 2 rows of bounds");
    const int n = static_cast<int>(bounds.size()) - 1;
    std::vector<std::vector<int>> rows;
    rows.reserve(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (static_cast<int>(bounds[i].size()) != n)
            throw Error(ErrorKind::BadShape, "row " + std::to_string(i) + " has " + std::to_string(bounds[i].size()) +
                                                 " entries, expected n=" + std::to_string(n));
        std::vector<int> row;
        for (std::size_t j = 0; j < bounds[i].size(); ++j) {
            const auto a = bounds[i][j];
            if (a < 1)
                throw Error(ErrorKind::NonPositiveBound, "a[" + std::to_string(i) + "][" + std::to_string(j + 1) +
                                                             "] = " + std::to_string(a) + " must be >= 1");
            if (a > 1'000'000)
                throw Error(ErrorKind::BadShape, "bound " + std::to_string(a) + " is too large");
            row.push_back(static_cast<int>(a));
        }
        rows.push_back(std::move(row));
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 1; i < n; ++i) {
            if (rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                throw Error(ErrorKind::OrderingViolated,
                            "a[" + std::to_string(i - 1) + "][" + std::to_string(j + 1) + "] > a[" + std::to_string(i) +
                                "][" + std::to_string(j + 1) +
                                "]; rows 0..n-1 must be nondecreasing in every column. Permute the polynomial "
                                "indices (the resultant is symmetric under reindexing) so that they are.");
            }
        }
    }
    return ZonotopeSystem(n, std::move(rows));
}

// ---------------------------------------------------------------------------
// GeneratorMatrix

GeneratorMatrix::GeneratorMatrix(std::vector<std::vector<std::int64_t>> columns) : columns_(std::move(columns)) {
    for (const auto& c : columns_)
        if (c.size() != columns_.size())
            throw Error(ErrorKind::BadShape, "generator matrix must be square");
}

GeneratorMatrix GeneratorMatrix::identity(int n) {
    std::vector<std::vector<std::int64_t>> cols(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    return GeneratorMatrix(std::move(cols));
}

GeneratorMatrix GeneratorMatrix::operator*(const GeneratorMatrix& other) const {
    if (dim() != other.dim()) throw Error(ErrorKind::BadShape, "dimension mismatch in generator product");
    const int n = dim();
    std::vector<std::vector<std::int64_t>> cols(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            std::int64_t acc = 0;
            for (int k = 0; k < n; ++k) acc += entry(r, k) * other.entry(k, c);
            cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = acc;
        }
    return GeneratorMatrix(std::move(cols));
}

std::int64_t integer_determinant(const IntMatrix& rows) {
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw Error(ErrorKind::BadShape, "determinant needs a square matrix");
    if (n == 0) return 1;
    // Bareiss: every intermediate value is a minor of the input, so it stays exact.
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
            if (swap_with == n) return 0;
            std::swap(m[k], m[swap_with]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * static_cast<std::int64_t>(m[n - 1][n - 1]);
}

std::int64_t determinant(const GeneratorMatrix& gen) {
    const int n = gen.dim();
    IntMatrix rows(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = gen.entry(r, c);
    return integer_determinant(rows);
}

NormalizedZonotope normalize_zonotope(const GeneratorMatrix& gen, const IntMatrix& bounds) {
    ZonotopeSystem sys = validate_zonotope(bounds);
    if (gen.dim() != sys.rank())
        throw Error(ErrorKind::BadShape, "generator matrix is " + std::to_string(gen.dim()) + "x" +
                                             std::to_string(gen.dim()) + " but the system has n=" +
                                             std::to_string(sys.rank()));
    const auto det = determinant(gen);
    if (det == 0) throw Error(ErrorKind::SingularGenerators, "generators are linearly dependent (det V = 0)");
    return {std::move(sys), det < 0 ? -det : det};
}

// ---------------------------------------------------------------------------
// MultiHomoSystem

MultiHomoSystem::MultiHomoSystem(std::vector<int> group_sizes, std::vector<std::vector<int>> degrees)
    : n_(std::accumulate(group_sizes.begin(), group_sizes.end(), 0)),
      group_sizes_(std::move(group_sizes)),
      degrees_(std::move(degrees)) {}

MultiHomoSystem validate_multihomo(const std::vector<int>& group_sizes, const IntMatrix& degrees) {
    if (group_sizes.empty()) throw Error(ErrorKind::BadShape, "at least one variable group is required");
    int n = 0;
    for (int size : group_sizes) {
        if (size < 1) throw Error(ErrorKind::BadShape, "group sizes must be positive");
        n += size;
    }
    const auto s = group_sizes.size();
    if (degrees.size() != static_cast<std::size_t>(n + 1))
        throw Error(ErrorKind::BadShape, "expected n+1=" + std::to_string(n + 1) + " multidegrees, got " +
                                             std::to_string(degrees.size()));
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i].size() != s)
            throw Error(ErrorKind::BadShape, "multidegree " + std::to_string(i) + " must have s=" + std::to_string(s) +
                                                 " entries");
        std::vector<int> row;
        for (std::size_t l = 0; l < s; ++l) {
            if (degrees[i][l] < 1)
                throw Error(ErrorKind::NonPositiveBound, "d[" + std::to_string(i) + "][" + std::to_string(l + 1) +
                                                             "] must be >= 1");
            if (degrees[i][l] > 1'000'000) throw Error(ErrorKind::BadShape, "degree too large");
            row.push_back(static_cast<int>(degrees[i][l]));
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t l = 0; l < s; ++l)
        for (int i = 1; i < n; ++i)
            if (rows[static_cast<std::size_t>(i - 1)][l] > rows[static_cast<std::size_t>(i)][l])
                throw Error(ErrorKind::OrderingViolated,
                            "d[" + std::to_string(i - 1) + "][" + std::to_string(l + 1) + "] > d[" +
                                std::to_string(i) + "][" + std::to_string(l + 1) +
                                "]; multidegrees 0..n-1 must be nondecreasing in every group. Permute the polynomial "
                                "indices (the resultant is symmetric under reindexing) so that they are.");
    return MultiHomoSystem(group_sizes, std::move(rows));
}

// ---------------------------------------------------------------------------

TypeVector type_vector_of(const TypeFunction& phi, int n) {
    TypeVector t{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
    for (int v : phi.values) {
        if (v < 0 || v > n) throw Error(ErrorKind::PointOutOfRange, "type function value out of {0..n}");
        ++t.t[static_cast<std::size_t>(v)];
    }
    return t;
}

}  // namespace zres
