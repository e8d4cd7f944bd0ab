#pragma once

#include <cstdint>
#include <vector>

#include "zres/core_model.hpp"

namespace zres {

// The mixed subdivision is never built geometrically. A point b of B lies in
// the cell labelled by its type function phi_b, where
//     sum_{k < phi(j)} a_kj <= b_j < sum_{k <= phi(j)} a_kj
// and everything else (type vector, row content, mixedness) follows from phi.

/// Extents (Sum_i a_i1, ..., Sum_i a_in) of the half-open box B.
std::vector<int> box_extents(const ZonotopeSystem& sys);

/// |B| = Prod_j Sum_i a_ij.
std::uint64_t lattice_size(const ZonotopeSystem& sys);

/// All of B in lexicographic order.
std::vector<LatticePoint> enumerate_B(const ZonotopeSystem& sys);

bool in_B(const LatticePoint& b, const ZonotopeSystem& sys);

/// Throws PointOutOfRange when b is not in B.
TypeFunction type_function_of(const LatticePoint& b, const ZonotopeSystem& sys);

/// Row content of every point in the cell phi: i(b) is the largest index
/// with t_i = 0, and a(b)_j is 0 below that interval and a_{i(b)j} above it.
RowContent row_content_of_cell(const TypeFunction& phi, const ZonotopeSystem& sys);
RowContent row_content_of(const LatticePoint& b, const ZonotopeSystem& sys);

/// Exactly one zero entry in the type vector.
bool is_mixed(const TypeVector& t);

/// The fiber of type_function_of over phi, lexicographically: Prod_j a_{phi(j)j} points.
std::vector<LatticePoint> cell_points(const TypeFunction& phi, const ZonotopeSystem& sys);
std::uint64_t cell_size(const TypeFunction& phi, const ZonotopeSystem& sys);

/// b - a(b) + A_{i(b)}, lexicographically.
std::vector<LatticePoint> column_support(const LatticePoint& b, const ZonotopeSystem& sys);

/// Every function {1..n} -> {0..n}, lexicographically.
std::vector<TypeFunction> all_type_functions(int n);

/// b_j -> Sum_i a_ij - 1 - b_j. Conjugating by this involution gives the
/// subdivision of the opposite lifting orientation.
LatticePoint reflect_point(const LatticePoint& b, const ZonotopeSystem& sys);

}  // namespace zres
