#pragma once

#include <cstdint>
#include <vector>

#include "zres/construction.hpp"
#include "zres/core_model.hpp"

namespace zres {

// A multihomogeneous system with supports {b >= 0, Sum_j b_jl <= d_il} becomes
// a sub-system of the n-zonotope generated by the columns of the block
// upper-bidiagonal matrix W: in the basis w_{j,l} a point has coordinates
// lambda_{j,l} = Sum_{J >= j} b_{J,l}, and every support is a box in lambda.
//
// The embedded zonotope lists the lambda coordinates of a group in reverse
// (lambda_{n_l,l} first). With that layout the multihomogeneous supports are the
// points that are nondecreasing inside each group, the lattice points of the
// translated Minkowski sum are the ones that are strictly increasing, and the
// occupied cells have type functions that are nondecreasing inside each group.

struct Embedding {
    struct Slot {
        int group = 0;
        /// 0-based j of lambda_{j,l} in the group's own variable order.
        int index = 0;
    };

    std::vector<int> group_sizes;
    /// Generators w_{j,l} as columns (row-major storage).
    IntMatrix W;
    /// Facet normals eta_{j,l} as columns (row-major storage).
    IntMatrix H;
    /// Embedded coordinate c holds lambda_{layout[c].index, layout[c].group}.
    std::vector<Slot> layout;
    /// Offset of each group in both coordinate systems.
    std::vector<int> group_start;
};

struct EmbeddedSystem {
    ZonotopeSystem zonotope;
    Embedding embedding;
};

/// Zonotope bounds a_ij = d_{i,l(j)} plus the embedding data.
EmbeddedSystem embed(const MultiHomoSystem& sys);

/// Suffix sums lambda_{j,l} = Sum_{J >= j} b_{J,l}, in the group's variable order.
LatticePoint zono_coords(const LatticePoint& b, const Embedding& emb);

/// zono_coords followed by the layout permutation.
LatticePoint to_embedded(const LatticePoint& b, const Embedding& emb);
/// Inverse of to_embedded.
LatticePoint from_embedded(const LatticePoint& e, const Embedding& emb);

/// phi (on embedded coordinates) is nondecreasing along every group.
bool is_valid_group_typefn(const TypeFunction& phi, const Embedding& emb);

/// Prod_l Prod_k binom(d_{k,l}, #{j in group l : phi(j) = k}).
std::uint64_t cell_binomial_count(const TypeFunction& phi, const MultiHomoSystem& sys, const Embedding& emb);

/// Sum of cell_binomial_count over greedy phi that are monotone in every group.
std::uint64_t predicted_size_multihomo(const MultiHomoSystem& sys);

/// Lattice points of the translated Minkowski sum in the original (b)
/// coordinates, ordered lexicographically in the embedded coordinates.
std::vector<LatticePoint> enumerate_B_multi(const MultiHomoSystem& sys);

/// The grouped construction over the embedded zonotope.
Construction multihomo_construction(const MultiHomoSystem& sys, Orientation orientation = Orientation::Canonical);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace zres
