// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "zres/greedy.hpp"
#include "zres/matrix.hpp"
#include "zres/multihomo.hpp"
#include "zres/oracles.hpp"
#include "zres/subdivision.hpp"
#include "zres_cli/commands.hpp"

using namespace zres;

namespace {

constexpr std::uint64_t kPrime = 2147483647;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

IntMatrix all_ones(int n) {
    return IntMatrix(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

std::vector<ZonotopeSystem> theorem_family() {
    // Fixed seed; n alternates between 2 and 3, bounds in 1..3.
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> dist(1, 3);
    std::vector<ZonotopeSystem> out;
    for (int k = 0; k < 24; ++k) {
        const int n = 2 + k % 2;
        IntMatrix bounds(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
        for (int j = 0; j < n; ++j) {
            std::vector<std::int64_t> col;
            for (int i = 0; i < n; ++i) col.push_back(dist(rng));
            std::sort(col.begin(), col.end());
            for (int i = 0; i < n; ++i) bounds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
            bounds[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = dist(rng);
        }
        out.push_back(validate_zonotope(bounds));
    }
    return out;
}

std::string describe(const ZonotopeSystem& sys) {
    std::string s = "[";
    for (const auto& row : sys.bounds()) {
        s += "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + std::to_string(row[j]);
        s += "]";
    }
    return s + "]";
}

// AC1: all-ones sizes for n = 2..5, closure and formula both.
Outcome all_ones_sizes() {
    Outcome o;
    const std::pair<std::uint64_t, std::uint64_t> expected[] = {{9, 8}, {64, 50}, {625, 432}, {7776, 4802}};
    std::ostringstream got;
    for (int n = 2; n <= 5; ++n) {
        const auto sys = validate_zonotope(all_ones(n));
        const std::uint64_t b = lattice_size(sys);
        const std::uint64_t closure = greedy_closure(sys).size();
        const std::uint64_t formula = predicted_size_zonotope(sys);
        got << (n > 2 ? " " : "") << "(" << b << "," << closure << ")";
        const auto [eb, eg] = expected[n - 2];
        o.require(b == eb && enumerate_B(sys).size() == eb, "n=" + std::to_string(n) + " |B|=" + std::to_string(b));
        o.require(closure == eg, "n=" + std::to_string(n) + " closure=" + std::to_string(closure));
        o.require(formula == eg, "n=" + std::to_string(n) + " formula=" + std::to_string(formula));
    }
    if (o.ok) o.detail = got.str();
    return o;
}

// AC2: the degree (2,2,1) two-variable system.
Outcome multihomo_example() {
    Outcome o;
    const auto sys = validate_multihomo({2}, {{2}, {2}, {1}});
    const auto embedded = embed(sys);
    const auto c = multihomo_construction(sys);
    const auto h = build_matrix(points_of(greedy_closure(c)), c);
    o.require(h.size() == 9, "greedy matrix has " + std::to_string(h.size()) + " rows");
    o.require(predicted_size_multihomo(sys) == 9, "binomial formula disagrees");

    std::map<TypeFunction, std::uint64_t> cells;
    c.for_each_point([&](const LatticePoint& p) { ++cells[type_function_of(p, embedded.zonotope)]; });
    const std::pair<TypeFunction, std::uint64_t> expected[] = {
        {TypeFunction{{0, 1}}, 4}, {TypeFunction{{0, 2}}, 2}, {TypeFunction{{1, 1}}, 1},
        {TypeFunction{{1, 2}}, 2}, {TypeFunction{{2, 2}}, 0}};
    std::uint64_t sum = 0;
    std::string counts;
    for (const auto& [phi, count] : expected) {
        const auto binomial = cell_binomial_count(phi, sys, embedded.embedding);
        o.require(binomial == count && cells[phi] == count, "cell " + to_string(phi));
        o.require(is_greedy(type_vector_of(phi, 2)) && is_valid_group_typefn(phi, embedded.embedding),
                  "cell " + to_string(phi) + " not greedy and monotone");
        sum += binomial;
        counts += (counts.empty() ? "" : ",") + std::to_string(binomial);
    }
    o.require(sum == 9, "cell counts sum to " + std::to_string(sum));
    if (o.ok) o.detail = "9x9, cells " + counts;
    return o;
}

// AC3: the bilinear system.
Outcome bilinear_example() {
    Outcome o;
    const auto sys = validate_zonotope(all_ones(2));
    const auto all = enumerate_B(sys);
    o.require(all.size() == 9, "|B| != 9");
    const auto closure = points_of(greedy_closure(sys));
    const auto h = build_matrix(closure, sys);
    o.require(h.size() == 8, "greedy matrix is not 8x8");
    std::vector<LatticePoint> excluded;
    for (const auto& b : all)
        if (!std::binary_search(closure.begin(), closure.end(), b)) excluded.push_back(b);
    o.require(excluded.size() == 1, "expected exactly one excluded point");
    if (excluded.size() == 1) {
        const auto t = type_vector_of(type_function_of(excluded[0], sys), 2);
        o.require(t.t == std::vector<int>{2, 0, 0}, "excluded point has type " + to_string(t));
        int with_type = 0;
        for (const auto& b : all) with_type += type_vector_of(type_function_of(b, sys), 2).t == std::vector<int>{2, 0, 0};
        o.require(with_type == 1, "type (2,0,0) is not unique");
        if (o.ok) o.detail = "|B|=9, 8x8, excluded (" + excluded[0].to_string() + ") t=(2,0,0)";
    }
    return o;
}

// AC4: closure identity, no escape, partition and mixed volumes on the family.
Outcome theorem_suite(const std::vector<ZonotopeSystem>& family) {
    Outcome o;
    for (const auto& sys : family) {
        const int n = sys.rank();
        const auto c = Construction::zonotope(sys);
        const auto closure = greedy_closure(c);
        const auto pts = points_of(closure);
        const std::string tag = describe(sys);

        std::vector<LatticePoint> predicate;
        for (const auto& b : enumerate_B(sys))
            if (is_greedy(type_vector_of(type_function_of(b, sys), n))) predicate.push_back(b);
        o.require(pts == predicate, tag + ": closure differs from the greedy predicate set");

        for (const auto& g : closure)
            for (const auto& col : column_support(g.point, sys))
                o.require(std::binary_search(pts.begin(), pts.end(), col),
                          tag + ": (" + g.point.to_string() + ") escapes to (" + col.to_string() + ")");

        std::uint64_t tiles = 0;
        for (const auto& phi : all_type_functions(n)) {
            std::uint64_t prod = 1;
            for (int j = 0; j < n; ++j) prod *= static_cast<std::uint64_t>(sys.bound(phi[j], j));
            tiles += prod;
        }
        o.require(tiles == lattice_size(sys), tag + ": cells do not tile B");

        std::vector<std::int64_t> mixed(static_cast<std::size_t>(n + 1), 0);
        for (const auto& g : closure)
            if (g.mixed) ++mixed[static_cast<std::size_t>(g.content.poly)];
        const IntMatrix bounds = to_int_matrix(sys);
        for (int i = 0; i <= n; ++i)
            o.require(mixed[static_cast<std::size_t>(i)] == mixed_volume(bounds, i),
                      tag + ": mixed count for i=" + std::to_string(i));
    }
    if (o.ok) o.detail = std::to_string(family.size()) + " systems";
    return o;
}

// AC5: univariate quotient against Sylvester; n = 2 quotient checks.
Outcome quotient_suite() {
    Outcome o;
    QuotientOptions options;
    options.prime = kPrime;
    options.trials = 50;
    int univariate = 0;
    for (int a0 = 1; a0 <= 3; ++a0)
        for (int a1 = 1; a1 <= 4; ++a1) {
            const auto report = verify_quotient(validate_zonotope({{a0}, {a1}}), options);
            const auto* syl = report.find("sylvester");
            const std::string tag = "n=1 (" + std::to_string(a0) + "," + std::to_string(a1) + ")";
            o.require(syl && syl->passed == 50 && syl->failed == 0, tag + ": Sylvester mismatch");
            o.require(report.singular_e_seeds.empty(), tag + ": singular E");
            ++univariate;
        }
    const std::pair<const char*, Construction> systems[] = {
        {"all-ones", Construction::zonotope(validate_zonotope(all_ones(2)))},
        {"[[2,2],[2,2],[1,1]]", Construction::zonotope(validate_zonotope({{2, 2}, {2, 2}, {1, 1}}))},
        {"multihomogeneous (2,2,1)", multihomo_construction(validate_multihomo({2}, {{2}, {2}, {1}}))}};
    for (const auto& [name, c] : systems) {
        const auto report = verify_quotient(c, options);
        for (const char* check : {"e_nonsingular", "h_nonsingular", "full_vs_greedy", "orientation"}) {
            const auto* tally = report.find(check);
            o.require(tally && tally->passed == 50 && tally->failed == 0,
                      std::string(name) + ": " + check + " did not pass 50/50");
        }
        o.require(report.singular_e_seeds.empty(), std::string(name) + ": singular E");
        // Plain equality of the two orientations, not just up to sign.
        o.require(report.orientation_sign == 1, std::string(name) + ": reflected quotient is not equal");
    }
    if (o.ok) o.detail = std::to_string(univariate) + " univariate systems, 3 bivariate systems, 50 trials each";
    return o;
}

// AC6: block-triangular full matrix and determinant factorization.
Outcome block_triangularity(const std::vector<ZonotopeSystem>& family) {
    Outcome o;
    const PrimeField field(kPrime);
    std::size_t largest = 0;
    for (const auto& sys : family) {
        const auto c = Construction::zonotope(sys);
        const auto full = build_matrix(enumerate_B(sys), c);
        const auto closure = points_of(greedy_closure(c));
        const std::set<LatticePoint> g(closure.begin(), closure.end());
        std::vector<bool> keep(full.size()), rest(full.size());
        for (std::size_t k = 0; k < full.size(); ++k) {
            keep[k] = g.count(full.point(k)) > 0;
            rest[k] = !keep[k];
            // Greedy-first order: no non-greedy point precedes a greedy one.
            if (k > 0 && keep[k]) o.require(keep[k - 1], describe(sys) + ": order is not greedy-first");
        }
        for (std::size_t r = 0; r < full.size(); ++r) {
            if (!keep[r]) continue;
            for (const auto& e : full.row(r))
                o.require(keep[e.col], describe(sys) + ": entry (" + full.point(r).to_string() + ") x (" +
                                           full.point(e.col).to_string() + ")");
        }
        const auto top = restrict_matrix(full, keep);
        const auto bottom = restrict_matrix(full, rest);
        largest = std::max(largest, full.size());
        std::mt19937_64 rng(derive_seed(99, full.size(), 0));
        for (int trial = 0; trial < 10; ++trial) {
            const auto values = random_specialization(c, field, rng);
            const auto whole = ff_det(specialize(full, values, field), field);
            const auto product =
                field.mul(ff_det(specialize(top, values, field), field), ff_det(specialize(bottom, values, field), field));
            o.require(whole == product, describe(sys) + ": det(H) != det(H_G) det(H_{B-G})");
        }
    }
    if (o.ok) o.detail = std::to_string(family.size()) + " systems, 10 specializations each, up to " +
                         std::to_string(largest) + " rows";
    return o;
}

// AC7: degree audit, including the flag in the verify report.
Outcome degree_column() {
    Outcome o;
    const std::int64_t expected[] = {6, 24, 120, 720};
    std::string got;
    for (int n = 2; n <= 5; ++n) {
        const auto sys = validate_zonotope(all_ones(n));
        const auto audit = degree_audit(sys);
        got += (got.empty() ? "" : ",") + std::to_string(audit.computed_total);
        o.require(audit.computed_total == expected[n - 2], "n=" + std::to_string(n) + " total degree");
        o.require(audit.diverges == (n >= 4), "n=" + std::to_string(n) + " divergence flag");

        cli::VerifyOptions options;
        options.quotient.trials = 2;
        std::ostringstream out;
        cli::cmd_verify(cli::make_target(cli::ZonotopeSpec{sys, 1}), options, out);
        const bool flagged = out.str().find("DIVERGES") != std::string::npos &&
                             out.str().find("\"diverges\":true") != std::string::npos;
        o.require(flagged == (n >= 4), "n=" + std::to_string(n) + " verify report flag");
    }
    if (o.ok) o.detail = "totals " + got + "; table values 360/3720 flagged as divergent";
    return o;
}

}  // namespace

int main() {
    const auto family = theorem_family();
    struct Criterion {
        const char* id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1", "all-ones sizes", 10, all_ones_sizes},
        {"AC2", "multihomogeneous (2,2,1) example", 1, multihomo_example},
        {"AC3", "bilinear example", 1, bilinear_example},
        {"AC4", "theorem suite", 60, [&] { return theorem_suite(family); }},
        {"AC5", "quotient suite", 120, quotient_suite},
        {"AC6", "block triangularity", 60, [&] { return block_triangularity(family); }},
        {"AC7", "degree column audit", 60, degree_column},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && seconds > c.budget_seconds) {
            o.ok = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
        }
        failures += !o.ok;
        std::printf("%s %s: %s [%.2fs] %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, seconds, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
