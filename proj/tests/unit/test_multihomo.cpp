#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "zres/greedy.hpp"
#include "zres/multihomo.hpp"
#include "zres/oracles.hpp"
#include "zres/subdivision.hpp"

using namespace zres;

namespace {

// Lattice points b of (d_0 + ... + d_n)-dilated simplices in every group,
// shifted by a small generic vector. The shift is -eps^{p+1} along the
// embedded coordinate p (suffix sums, listed from the last coordinate of the
// group), pulled back to the b coordinates. Counted straight from the simplex
// inequalities x >= 0, sum x <= D_l with x = b - shift.
std::set<LatticePoint> simplex_points(const MultiHomoSystem& sys) {
    const int n = sys.rank();
    const double eps = 1e-3;
    std::vector<double> shift(static_cast<std::size_t>(n));
    std::vector<int> total(static_cast<std::size_t>(sys.group_count()), 0);
    int start = 0;
    for (int l = 0; l < sys.group_count(); ++l) {
        const int size = sys.group_size(l);
        for (int i = 0; i <= n; ++i) total[static_cast<std::size_t>(l)] += sys.degree(i, l);
        // lambda_j (suffix sum at coordinate j) sits at embedded position size-1-j.
        std::vector<double> lambda(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j) lambda[static_cast<std::size_t>(j)] = -std::pow(eps, start + size - j);
        for (int j = 0; j < size; ++j)
            shift[static_cast<std::size_t>(start + j)] =
                lambda[static_cast<std::size_t>(j)] - (j + 1 < size ? lambda[static_cast<std::size_t>(j + 1)] : 0.0);
        start += size;
    }
    std::set<LatticePoint> out;
    LatticePoint b = LatticePoint::zero(n);
    std::function<void(int)> walk = [&](int j) {
        if (j == n) {
            int s0 = 0;
            for (int l = 0; l < sys.group_count(); ++l) {
                double sum = 0;
                for (int k = s0; k < s0 + sys.group_size(l); ++k) {
                    const double x = b[k] - shift[static_cast<std::size_t>(k)];
                    if (x < 0) return;
                    sum += x;
                }
                if (sum > total[static_cast<std::size_t>(l)]) return;
                s0 += sys.group_size(l);
            }
            out.insert(b);
            return;
        }
        for (int v = -1; v <= 20; ++v) {
            b[j] = v;
            walk(j + 1);
        }
    };
    walk(0);
    return out;
}

// Coefficient of prod_l x_l^{n_l} in prod_{k != excluded} (sum_l d_kl x_l),
// by assigning each polynomial to a group.
std::int64_t bezout_by_assignment(const MultiHomoSystem& sys, int excluded) {
    std::vector<int> room = sys.group_sizes();
    std::function<std::int64_t(int)> go = [&](int k) -> std::int64_t {
        if (k > sys.rank()) return 1;
        if (k == excluded) return go(k + 1);
        std::int64_t total = 0;
        for (int l = 0; l < sys.group_count(); ++l) {
            if (room[static_cast<std::size_t>(l)] == 0) continue;
            --room[static_cast<std::size_t>(l)];
            total += sys.degree(k, l) * go(k + 1);
            ++room[static_cast<std::size_t>(l)];
        }
        return total;
    };
    return go(0);
}

MultiHomoSystem random_multihomo(std::mt19937_64& rng, const std::vector<int>& groups, int max_degree) {
    std::uniform_int_distribution<int> dist(1, max_degree);
    int n = 0;
    for (int g : groups) n += g;
    IntMatrix degrees(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(groups.size()));
    for (std::size_t l = 0; l < groups.size(); ++l) {
        std::vector<std::int64_t> col;
        for (int i = 0; i < n; ++i) col.push_back(dist(rng));
        std::sort(col.begin(), col.end());
        for (int i = 0; i < n; ++i) degrees[static_cast<std::size_t>(i)][l] = col[static_cast<std::size_t>(i)];
        degrees[static_cast<std::size_t>(n)][l] = dist(rng);
    }
    return validate_multihomo(groups, degrees);
}

std::vector<MultiHomoSystem> sample_multihomo() {
    std::vector<MultiHomoSystem> out{validate_multihomo({2}, {{2}, {2}, {1}}),
                                     validate_multihomo({1, 1}, {{1, 1}, {1, 1}, {1, 1}}),
                                     validate_multihomo({1}, {{1}, {1}}), validate_multihomo({3}, {{1}, {1}, {2}, {1}}),
                                     validate_multihomo({2, 1}, {{1, 1}, {1, 1}, {1, 2}, {2, 1}})};
    std::mt19937_64 rng(41);
    const std::vector<std::vector<int>> shapes{{2}, {2}, {3}, {2, 1}, {1, 2}, {1, 1}, {2, 2}};
    for (const auto& shape : shapes) out.push_back(random_multihomo(rng, shape, shape.size() > 1 ? 2 : 3));
    return out;
}

}  // namespace

TEST_CASE("embedding of the single-group example") {
    const auto e = embed(validate_multihomo({2}, {{2}, {2}, {1}}));
    CHECK(e.zonotope == validate_zonotope({{2, 2}, {2, 2}, {1, 1}}));
    CHECK(e.embedding.W == IntMatrix{{1, -1}, {0, 1}});
    CHECK(e.embedding.H == IntMatrix{{1, 0}, {1, 1}});
}

TEST_CASE("groups of size one embed as the identity") {
    const auto e = embed(validate_multihomo({1, 1}, {{1, 1}, {1, 1}, {1, 1}}));
    CHECK(e.embedding.W == IntMatrix{{1, 0}, {0, 1}});
    CHECK(e.zonotope == testing::ones_system(2));
    const LatticePoint b{1, 2};
    CHECK(zono_coords(b, e.embedding) == b);
    CHECK(to_embedded(b, e.embedding) == b);
}

TEST_CASE("generators and normals pair to the identity") {
    for (const auto& sys : sample_multihomo()) {
        const auto emb = embed(sys).embedding;
        const std::size_t n = emb.W.size();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::int64_t wth = 0, wht = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    wth += emb.W[k][r] * emb.H[k][c];
                    wht += emb.W[r][k] * emb.H[c][k];
                }
                CHECK(wth == (r == c ? 1 : 0));
                CHECK(wht == (r == c ? 1 : 0));
            }
    }
}

TEST_CASE("zono_coords are suffix sums") {
    const auto emb = embed(validate_multihomo({2}, {{2}, {2}, {1}})).embedding;
    CHECK(zono_coords(LatticePoint{1, 1}, emb) == LatticePoint{2, 1});
    CHECK(zono_coords(LatticePoint{0, 0}, emb) == LatticePoint{0, 0});
    const auto emb3 = embed(validate_multihomo({3, 1}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})).embedding;
    CHECK(zono_coords(LatticePoint{1, 2, 3, 4}, emb3) == LatticePoint{6, 5, 3, 4});
    for (const auto& b : {LatticePoint{1, 2, 3, 4}, LatticePoint{0, 0, 5, 1}})
        CHECK(from_embedded(to_embedded(b, emb3), emb3) == b);
}

TEST_CASE("group type functions") {
    const auto one = embed(validate_multihomo({2}, {{2}, {2}, {1}})).embedding;
    CHECK(is_valid_group_typefn(TypeFunction{{0, 1}}, one));
    CHECK_FALSE(is_valid_group_typefn(TypeFunction{{1, 0}}, one));
    const auto two = embed(validate_multihomo({1, 1}, {{1, 1}, {1, 1}, {1, 1}})).embedding;
    for (const auto& phi : all_type_functions(2)) CHECK(is_valid_group_typefn(phi, two));
}

TEST_CASE("predicted multihomogeneous sizes") {
    CHECK(predicted_size_multihomo(validate_multihomo({2}, {{2}, {2}, {1}})) == 9);
    CHECK(predicted_size_multihomo(validate_multihomo({1, 1}, {{1, 1}, {1, 1}, {1, 1}})) == 8);
    for (int d0 = 1; d0 <= 4; ++d0)
        for (int d1 = 1; d1 <= 4; ++d1)
            CHECK(predicted_size_multihomo(validate_multihomo({1}, {{d0}, {d1}})) ==
                  static_cast<std::uint64_t>(d0 + d1));
}

TEST_CASE("B for the single-group example") {
    const auto sys = validate_multihomo({2}, {{2}, {2}, {1}});
    const auto pts = enumerate_B_multi(sys);
    CHECK(pts.size() == 10);
    CHECK(std::set<LatticePoint>(pts.begin(), pts.end()) == simplex_points(sys));
    CHECK(enumerate_B_multi(validate_multihomo({1, 1}, {{1, 1}, {1, 1}, {1, 1}})).size() == 9);
    CHECK(enumerate_B_multi(validate_multihomo({1}, {{1}, {1}})).size() == 2);
}

TEST_CASE("per-cell counts of the single-group example") {
    const auto sys = validate_multihomo({2}, {{2}, {2}, {1}});
    const auto e = embed(sys);
    const auto c = multihomo_construction(sys);
    std::map<TypeFunction, std::uint64_t> cells;
    c.for_each_point([&](const LatticePoint& p) { ++cells[type_function_of(p, e.zonotope)]; });
    const std::vector<std::pair<TypeFunction, std::uint64_t>> greedy_cells{
        {TypeFunction{{0, 1}}, 4}, {TypeFunction{{0, 2}}, 2}, {TypeFunction{{1, 1}}, 1},
        {TypeFunction{{1, 2}}, 2}, {TypeFunction{{2, 2}}, 0}};
    std::uint64_t sum = 0;
    for (const auto& [phi, count] : greedy_cells) {
        CHECK(is_greedy(type_vector_of(phi, 2)));
        CHECK(cell_binomial_count(phi, sys, e.embedding) == count);
        CHECK(cells[phi] == count);
        sum += count;
    }
    CHECK(sum == 9);
    CHECK(cells[TypeFunction{{0, 0}}] == 1);
    CHECK(greedy_closure(c).size() == 9);
}

TEST_CASE("enumeration matches the translated simplex sum") {
    for (const auto& sys : sample_multihomo()) {
        const auto pts = enumerate_B_multi(sys);
        CHECK(std::set<LatticePoint>(pts.begin(), pts.end()) == simplex_points(sys));
    }
}

TEST_CASE("monotone cells carry their binomial counts") {
    for (const auto& sys : sample_multihomo()) {
        const auto e = embed(sys);
        const auto c = multihomo_construction(sys);
        std::map<TypeFunction, std::uint64_t> cells;
        c.for_each_point([&](const LatticePoint& p) {
            const auto phi = type_function_of(p, e.zonotope);
            CHECK(is_valid_group_typefn(phi, e.embedding));
            ++cells[phi];
        });
        std::uint64_t total = 0;
        for (const auto& phi : all_type_functions(sys.rank())) {
            if (!is_valid_group_typefn(phi, e.embedding)) continue;
            const auto expected = cell_binomial_count(phi, sys, e.embedding);
            CHECK(cells[phi] == expected);
            total += expected;
        }
        CHECK(total == c.point_count());
    }
}

TEST_CASE("multihomogeneous closure matches greedy and monotone points") {
    for (const auto& sys : sample_multihomo()) {
        const auto c = multihomo_construction(sys);
        const auto closure = greedy_closure(c);
        CHECK(points_of(closure) == greedy_predicate_set(c));
        CHECK(closure.size() == predicted_size_multihomo(sys));
        CHECK_FALSE(find_escape(c).has_value());

        std::vector<std::int64_t> mixed(static_cast<std::size_t>(sys.rank() + 1), 0);
        for (const auto& g : closure)
            if (g.mixed) ++mixed[static_cast<std::size_t>(g.content.poly)];
        const auto mv = mixed_volumes(c);
        for (int i = 0; i <= sys.rank(); ++i) {
            CHECK(mv[static_cast<std::size_t>(i)] == bezout_by_assignment(sys, i));
            CHECK(mixed[static_cast<std::size_t>(i)] == mv[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("supports in embedded coordinates are images of the simplices") {
    const auto sys = validate_multihomo({2, 1}, {{1, 1}, {1, 1}, {1, 2}, {2, 1}});
    const auto e = embed(sys);
    const auto c = multihomo_construction(sys);
    for (int i = 0; i <= sys.rank(); ++i) {
        std::set<LatticePoint> expected;
        for (int x = 0; x <= 3; ++x)
            for (int y = 0; y <= 3; ++y)
                for (int z = 0; z <= 3; ++z)
                    if (x + y <= sys.degree(i, 0) && z <= sys.degree(i, 1))
                        expected.insert(to_embedded(LatticePoint{x, y, z}, e.embedding));
        const auto& support = c.support(i);
        CHECK(std::set<LatticePoint>(support.begin(), support.end()) == expected);
    }
}
