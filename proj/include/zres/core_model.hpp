#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zres/errors.hpp"

namespace zres {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// An integer vector of length n. Used both for points of B and for support
/// points a in A_i.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<int> coords) : coords_(coords) {}

    static LatticePoint zero(int n) { return LatticePoint(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int dim() const { return static_cast<int>(coords_.size()); }
    int operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }
    int& operator[](int j) { return coords_[static_cast<std::size_t>(j)]; }
    std::span<const int> coords() const { return coords_; }
    std::span<int> mutable_coords() { return coords_; }

    LatticePoint operator+(const LatticePoint& other) const;
    LatticePoint operator-(const LatticePoint& other) const;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

    /// "b_1,...,b_n"
    std::string to_string() const;

private:
    std::vector<int> coords_;
};

/// n+1 axis-aligned box supports A_i = {0 <= b_j <= a_ij}. Rows 0..n-1 are
/// coordinatewise nondecreasing; row n is free.
class ZonotopeSystem {
public:
    int rank() const { return n_; }
    int bound(int i, int j) const { return bounds_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& bounds() const { return bounds_; }

    /// Sum_{k < i} a_kj: the left end of the interval of index i in coordinate j.
    int prefix(int i, int j) const { return prefix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    /// Sum_i a_ij, the exclusive upper end of coordinate j in B.
    int column_sum(int j) const { return prefix(n_ + 1, j); }

    /// The top vertex (a_i1, ..., a_in) of the box A_i.
    LatticePoint top_vertex(int i) const;

    friend bool operator==(const ZonotopeSystem& a, const ZonotopeSystem& b) { return a.bounds_ == b.bounds_; }

private:
    friend ZonotopeSystem validate_zonotope(const IntMatrix& bounds);
    ZonotopeSystem(int n, std::vector<std::vector<int>> bounds);

    int n_ = 0;
    std::vector<std::vector<int>> bounds_;
    std::vector<std::vector<int>> prefix_;
};

/// Checks shape, positivity and the row ordering; throws Error otherwise.
ZonotopeSystem validate_zonotope(const IntMatrix& bounds);

/// Columns v_1..v_n of a nonsingular integer matrix.
class GeneratorMatrix {
public:
    /// columns[j] is the generator v_{j+1}.
    explicit GeneratorMatrix(std::vector<std::vector<std::int64_t>> columns);

    static GeneratorMatrix identity(int n);

    int dim() const { return static_cast<int>(columns_.size()); }
    const std::vector<std::vector<std::int64_t>>& columns() const { return columns_; }
    std::int64_t entry(int row, int col) const {
        return columns_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
    }

    GeneratorMatrix operator*(const GeneratorMatrix& other) const;

private:
    std::vector<std::vector<std::int64_t>> columns_;
};

/// Exact determinant of a square integer matrix (fraction-free elimination).
std::int64_t integer_determinant(const IntMatrix& rows);
std::int64_t determinant(const GeneratorMatrix& gen);

struct NormalizedZonotope {
    ZonotopeSystem system;
    /// |det V|; the resultant of the original supports is Res^exponent.
    std::int64_t exponent;
};

NormalizedZonotope normalize_zonotope(const GeneratorMatrix& gen, const IntMatrix& bounds);

/// Multidegrees d[i][l] over s variable groups of sizes n_1..n_s.
class MultiHomoSystem {
public:
    int rank() const { return n_; }
    int group_count() const { return static_cast<int>(group_sizes_.size()); }
    int group_size(int l) const { return group_sizes_[static_cast<std::size_t>(l)]; }
    const std::vector<int>& group_sizes() const { return group_sizes_; }
    int degree(int i, int l) const { return degrees_[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]; }
    const std::vector<std::vector<int>>& degrees() const { return degrees_; }

private:
    friend MultiHomoSystem validate_multihomo(const std::vector<int>& group_sizes, const IntMatrix& degrees);
    MultiHomoSystem(std::vector<int> group_sizes, std::vector<std::vector<int>> degrees);

    int n_ = 0;
    std::vector<int> group_sizes_;
    std::vector<std::vector<int>> degrees_;
};

MultiHomoSystem validate_multihomo(const std::vector<int>& group_sizes, const IntMatrix& degrees);

/// phi: {1..n} -> {0..n}, stored 0-based by coordinate.
struct TypeFunction {
    std::vector<int> values;

    int dim() const { return static_cast<int>(values.size()); }
    int operator[](int j) const { return values[static_cast<std::size_t>(j)]; }
    friend auto operator<=>(const TypeFunction&, const TypeFunction&) = default;
    friend bool operator==(const TypeFunction&, const TypeFunction&) = default;
};

/// t_i = |phi^{-1}(i)|, length n+1, sums to n.
struct TypeVector {
    std::vector<int> t;

    int size() const { return static_cast<int>(t.size()); }
    int operator[](int i) const { return t[static_cast<std::size_t>(i)]; }
    friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

TypeVector type_vector_of(const TypeFunction& phi, int n);

struct RowContent {
    int poly = 0;
    LatticePoint vertex;

    friend bool operator==(const RowContent&, const RowContent&) = default;
};

/// The coefficient label u_{i,a}.
struct CoeffRef {
    int poly = 0;
    LatticePoint support;

    friend auto operator<=>(const CoeffRef&, const CoeffRef&) = default;
    friend bool operator==(const CoeffRef&, const CoeffRef&) = default;

    /// "u[i][a_1,...,a_n]"
    std::string token() const;
};

std::string to_string(const TypeFunction& phi);
std::string to_string(const TypeVector& t);

}  // namespace zres
