#include "zres/multihomo.hpp"

#include "zres/greedy.hpp"
#include "zres/subdivision.hpp"

namespace zres {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t out = 1;
    for (std::int64_t m = 1; m <= k; ++m) out = out * static_cast<std::uint64_t>(n - k + m) / static_cast<std::uint64_t>(m);
    return out;
}

EmbeddedSystem embed(const MultiHomoSystem& sys) {
    const int n = sys.rank();
    Embedding emb;
    emb.group_sizes = sys.group_sizes();
    emb.W.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    emb.H = emb.W;
    IntMatrix bounds(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    int start = 0;
    for (int l = 0; l < sys.group_count(); ++l) {
        const int size = sys.group_size(l);
        emb.group_start.push_back(start);
        for (int r = 0; r < size; ++r) {
            const auto R = static_cast<std::size_t>(start + r);
            emb.W[R][R] = 1;
            if (r + 1 < size) emb.W[R][R + 1] = -1;
            for (int c = 0; c <= r; ++c) emb.H[R][static_cast<std::size_t>(start + c)] = 1;
        }
        for (int p = 0; p < size; ++p) {
            emb.layout.push_back({l, size - 1 - p});
            for (int i = 0; i <= n; ++i)
                bounds[static_cast<std::size_t>(i)][static_cast<std::size_t>(start + p)] = sys.degree(i, l);
        }
        start += size;
    }
    return {validate_zonotope(bounds), std::move(emb)};
}

LatticePoint zono_coords(const LatticePoint& b, const Embedding& emb) {
    LatticePoint lambda = b;
    for (std::size_t l = 0; l < emb.group_sizes.size(); ++l) {
        const int start = emb.group_start[l];
        int suffix = 0;
        for (int j = emb.group_sizes[l]; j-- > 0;) {
            suffix += b[start + j];
            lambda[start + j] = suffix;
        }
    }
    return lambda;
}

LatticePoint to_embedded(const LatticePoint& b, const Embedding& emb) {
    const LatticePoint lambda = zono_coords(b, emb);
    LatticePoint e = lambda;
    for (std::size_t c = 0; c < emb.layout.size(); ++c) {
        const auto& slot = emb.layout[c];
        e[static_cast<int>(c)] = lambda[emb.group_start[static_cast<std::size_t>(slot.group)] + slot.index];
    }
    return e;
}

LatticePoint from_embedded(const LatticePoint& e, const Embedding& emb) {
    LatticePoint lambda = e;
    for (std::size_t c = 0; c < emb.layout.size(); ++c) {
        const auto& slot = emb.layout[c];
        lambda[emb.group_start[static_cast<std::size_t>(slot.group)] + slot.index] = e[static_cast<int>(c)];
    }
    LatticePoint b = lambda;
    for (std::size_t l = 0; l < emb.group_sizes.size(); ++l) {
        const int start = emb.group_start[l];
        const int size = emb.group_sizes[l];
        for (int j = 0; j < size; ++j)
            b[start + j] = lambda[start + j] - (j + 1 < size ? lambda[start + j + 1] : 0);
    }
    return b;
}

bool is_valid_group_typefn(const TypeFunction& phi, const Embedding& emb) {
    for (std::size_t l = 0; l < emb.group_sizes.size(); ++l) {
        const int start = emb.group_start[l];
        for (int p = 1; p < emb.group_sizes[l]; ++p)
            if (phi[start + p - 1] > phi[start + p]) return false;
    }
    return true;
}

std::uint64_t cell_binomial_count(const TypeFunction& phi, const MultiHomoSystem& sys, const Embedding& emb) {
    const int n = sys.rank();
    std::uint64_t count = 1;
    for (int l = 0; l < sys.group_count(); ++l) {
        std::vector<int> per_index(static_cast<std::size_t>(n + 1), 0);
        const int start = emb.group_start[static_cast<std::size_t>(l)];
        for (int p = 0; p < sys.group_size(l); ++p) ++per_index[static_cast<std::size_t>(phi[start + p])];
        for (int k = 0; k <= n; ++k) count *= binomial(sys.degree(k, l), per_index[static_cast<std::size_t>(k)]);
    }
    return count;
}

std::uint64_t predicted_size_multihomo(const MultiHomoSystem& sys) {
    const Embedding emb = embed(sys).embedding;
    std::uint64_t total = 0;
    for (const auto& phi : enumerate_greedy_typefns(sys.rank()))
        if (is_valid_group_typefn(phi, emb)) total += cell_binomial_count(phi, sys, emb);
    return total;
}

Construction multihomo_construction(const MultiHomoSystem& sys, Orientation orientation) {
    EmbeddedSystem embedded = embed(sys);
    return Construction::grouped(embedded.zonotope, sys.group_sizes(), orientation);
}

std::vector<LatticePoint> enumerate_B_multi(const MultiHomoSystem& sys) {
    const EmbeddedSystem embedded = embed(sys);
    const Construction construction = Construction::grouped(embedded.zonotope, sys.group_sizes());
    std::vector<LatticePoint> out;
    construction.for_each_point([&](const LatticePoint& e) { out.push_back(from_embedded(e, embedded.embedding)); });
    return out;
}

}  // namespace zres
