#include "zres/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "zres/greedy.hpp"
#include "zres/multihomo.hpp"

namespace zres {

namespace {

using Monomials = std::map<std::vector<int>, std::int64_t>;

/// Multiplies a polynomial by the linear form Sum_v coeffs[v] x_v.
Monomials times_linear(const Monomials& poly, const std::vector<std::int64_t>& coeffs) {
    Monomials out;
    for (const auto& [exps, c] : poly) {
        for (std::size_t v = 0; v < coeffs.size(); ++v) {
            if (coeffs[v] == 0) continue;
            auto e = exps;
            ++e[v];
            out[e] += c * coeffs[v];
        }
    }
    return out;
}

void check_bounds_shape(const IntMatrix& bounds, int excluded_row) {
    if (bounds.size() < 2) throw Error(ErrorKind::BadShape, "need n+1 >= 2 rows");
    const auto n = bounds.size() - 1;
    for (const auto& row : bounds)
        if (row.size() != n) throw Error(ErrorKind::BadShape, "every row must have n entries");
    if (excluded_row < 0 || static_cast<std::size_t>(excluded_row) > n)
        throw Error(ErrorKind::BadShape, "excluded row out of range");
}

}  // namespace

std::int64_t mixed_volume(const IntMatrix& bounds, int excluded_row) {
    check_bounds_shape(bounds, excluded_row);
    const std::size_t n = bounds.size() - 1;
    // Variables are the n polytopes other than the excluded one.
    std::vector<std::size_t> polys;
    for (std::size_t i = 0; i <= n; ++i)
        if (static_cast<int>(i) != excluded_row) polys.push_back(i);
    Monomials volume{{std::vector<int>(n, 0), 1}};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::int64_t> edge;
        for (auto i : polys) edge.push_back(bounds[i][j]);
        volume = times_linear(volume, edge);
    }
    auto it = volume.find(std::vector<int>(n, 1));
    return it == volume.end() ? 0 : it->second;
}

std::int64_t permanent(const IntMatrix& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    if (n > 30) throw Error(ErrorKind::BadShape, "permanent too large");
    std::int64_t total = 0;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
        std::int64_t prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) {
            std::int64_t row_sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (subset >> j & 1U) row_sum += rows[i][j];
            prod *= row_sum;
        }
        const int bits = std::popcount(subset);
        total += ((n - static_cast<std::size_t>(bits)) % 2 == 0) ? prod : -prod;
    }
    return total;
}

std::int64_t mixed_volume_permanent(const IntMatrix& bounds, int excluded_row) {
    check_bounds_shape(bounds, excluded_row);
    IntMatrix rows;
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (static_cast<int>(i) != excluded_row) rows.push_back(bounds[i]);
    return permanent(rows);
}

std::int64_t multihomogeneous_bezout(const MultiHomoSystem& sys, int excluded_row) {
    const int n = sys.rank();
    if (excluded_row < 0 || excluded_row > n) throw Error(ErrorKind::BadShape, "excluded row out of range");
    const auto s = static_cast<std::size_t>(sys.group_count());
    Monomials product{{std::vector<int>(s, 0), 1}};
    for (int k = 0; k <= n; ++k) {
        if (k == excluded_row) continue;
        std::vector<std::int64_t> form;
        for (int l = 0; l < sys.group_count(); ++l) form.push_back(sys.degree(k, l));
        product = times_linear(product, form);
    }
    auto it = product.find(sys.group_sizes());
    return it == product.end() ? 0 : it->second;
}

IntMatrix to_int_matrix(const ZonotopeSystem& sys) {
    IntMatrix out;
    for (const auto& row : sys.bounds()) out.emplace_back(row.begin(), row.end());
    return out;
}

DegreeAudit degree_audit(const ZonotopeSystem& sys) {
    DegreeAudit audit;
    const IntMatrix bounds = to_int_matrix(sys);
    for (int i = 0; i <= sys.rank(); ++i) audit.computed_total += mixed_volume(bounds, i);
    bool all_ones = true;
    for (const auto& row : sys.bounds())
        for (int a : row) all_ones = all_ones && a == 1;
    // Degree column of the reference size table for the all-ones family.
    static const std::map<int, std::int64_t> kReferenceDegrees{{2, 6}, {3, 24}, {4, 360}, {5, 3720}};
    if (all_ones) {
        if (auto it = kReferenceDegrees.find(sys.rank()); it != kReferenceDegrees.end()) {
            audit.reference = it->second;
            audit.diverges = it->second != audit.computed_total;
        }
    }
    return audit;
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is outside the supported range p < 2^32");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

FieldElem PrimeField::reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    const std::int64_t r = v % m;
    return static_cast<FieldElem>(r < 0 ? r + m : r);
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const {
    FieldElem result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1U) result = mul(result, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
    if (a % p_ == 0) throw Error(ErrorKind::Internal, "inverse of zero");
    return pow(a, p_ - 2);
}

FieldElem ff_det(const FieldMatrix& m, const PrimeField& field) {
    const std::size_t n = m.size();
    const std::uint64_t p = field.modulus();
    std::vector<FieldElem> a(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n) throw Error(ErrorKind::BadShape, "determinant needs a square matrix");
        for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m[r][c] % p;
    }
    FieldElem det = 1 % p;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                             a.begin() + static_cast<std::ptrdiff_t>(pivot * n + n),
                             a.begin() + static_cast<std::ptrdiff_t>(col * n));
            det = field.neg(det);
        }
        const FieldElem pv = a[col * n + col];
        det = field.mul(det, pv);
        const FieldElem pinv = field.inv(pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const FieldElem f = field.mul(a[r * n + col], pinv);
            if (f == 0) continue;
            FieldElem* row = &a[r * n];
            const FieldElem* top = &a[col * n];
            for (std::size_t c = col; c < n; ++c) row[c] = (row[c] + (p - f) * top[c]) % p;
        }
    }
    return det;
}

FieldElem ff_det(const FieldMatrix& m, std::uint64_t p) { return ff_det(m, PrimeField(p)); }

FieldMatrix sylvester_matrix(const std::vector<FieldElem>& coeffs0, const std::vector<FieldElem>& coeffs1) {
    if (coeffs0.empty() || coeffs1.empty()) throw Error(ErrorKind::BadShape, "empty coefficient list");
    const std::size_t a0 = coeffs0.size() - 1;
    const std::size_t a1 = coeffs1.size() - 1;
    const std::size_t size = a0 + a1;
    FieldMatrix s(size, std::vector<FieldElem>(size, 0));
    for (std::size_t shift = 0; shift < a1; ++shift)
        for (std::size_t k = 0; k <= a0; ++k) s[shift][shift + k] = coeffs0[a0 - k];
    for (std::size_t shift = 0; shift < a0; ++shift)
        for (std::size_t k = 0; k <= a1; ++k) s[a1 + shift][shift + k] = coeffs1[a1 - k];
    return s;
}

FieldElem sylvester_resultant(const std::vector<FieldElem>& coeffs0, const std::vector<FieldElem>& coeffs1,
                              const PrimeField& field) {
    return ff_det(sylvester_matrix(coeffs0, coeffs1), field);
}

// ---------------------------------------------------------------------------

Specialization random_specialization(const Construction& construction, const PrimeField& field,
                                     std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
    Specialization values;
    for (int i = 0; i <= construction.rank(); ++i)
        for (const auto& a : construction.support(i)) values.emplace(CoeffRef{i, a}, dist(rng));
    return values;
}

FieldMatrix specialize(const SymbolicMatrix& m, const Specialization& values, const PrimeField& field) {
    FieldMatrix out(m.size(), std::vector<FieldElem>(m.size(), 0));
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (const auto& e : m.row(r)) {
            auto it = values.find(e.coeff);
            if (it == values.end()) throw Error(ErrorKind::Internal, "no value for " + e.coeff.token());
            out[r][e.col] = it->second % field.modulus();
        }
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t attempt) {
    // splitmix64 finalizer over a simple combination of the three inputs.
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1) + 0xbf58476d1ce4e5b9ULL * (attempt + 1);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

bool QuotientReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.ok(); });
}

const CheckTally* QuotientReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::int64_t> mixed_volumes(const Construction& construction) {
    const ZonotopeSystem& box = construction.box_system();
    const int n = construction.rank();
    std::vector<std::int64_t> out;
    if (!construction.is_grouped()) {
        const IntMatrix bounds = to_int_matrix(box);
        for (int i = 0; i <= n; ++i) out.push_back(mixed_volume_permanent(bounds, i));
        return out;
    }
    // Every coordinate of a group carries the same bound, so the degrees are
    // read off the first coordinate of each group.
    IntMatrix degrees(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        int start = 0;
        for (int size : construction.group_sizes()) {
            degrees[static_cast<std::size_t>(i)].push_back(box.bound(i, start));
            start += size;
        }
    }
    const MultiHomoSystem sys = validate_multihomo(construction.group_sizes(), degrees);
    for (int i = 0; i <= n; ++i) out.push_back(multihomogeneous_bezout(sys, i));
    return out;
}

namespace {

enum class Outcome { NotRun, Pass, Fail };

constexpr const char* kCheckNames[] = {"e_nonsingular", "h_nonsingular", "sylvester",
                                       "full_vs_greedy", "orientation",   "block_product"};
constexpr std::size_t kCheckCount = std::size(kCheckNames);

struct TrialResult {
    std::uint64_t seed = 0;
    bool singular_e = false;
    Outcome outcome[kCheckCount] = {};
    /// Reflected over canonical quotient: +1, -1, or 0 when it is neither.
    int orientation_ratio = 0;
};

struct Matrices {
    SymbolicMatrix greedy;
    SymbolicMatrix greedy_e;
    SymbolicMatrix reflected;
    SymbolicMatrix reflected_e;
    std::optional<SymbolicMatrix> full;
    std::optional<SymbolicMatrix> full_e;
    std::optional<SymbolicMatrix> full_g_block;
    std::optional<SymbolicMatrix> full_rest_block;
};

Matrices assemble(const Construction& construction, std::size_t max_dense) {
    const Construction canonical = construction.with_orientation(Orientation::Canonical);
    const Construction flipped = construction.with_orientation(Orientation::Reflected);
    const auto closure = points_of(greedy_closure(canonical));
    SymbolicMatrix greedy = build_matrix(closure, canonical);
    SymbolicMatrix greedy_e = principal_submatrix(greedy);
    SymbolicMatrix reflected = build_matrix(points_of(greedy_closure(flipped)), flipped);
    SymbolicMatrix reflected_e = principal_submatrix(reflected);
    Matrices m{std::move(greedy),
               std::move(greedy_e),
               std::move(reflected),
               std::move(reflected_e),
               std::nullopt,
               std::nullopt,
               std::nullopt,
               std::nullopt};
    if (canonical.point_count() <= max_dense) {
        SymbolicMatrix full = build_matrix(canonical.points(), canonical);
        const std::set<LatticePoint> in_g(closure.begin(), closure.end());
        std::vector<bool> keep(full.size()), rest(full.size());
        for (std::size_t k = 0; k < full.size(); ++k) {
            keep[k] = in_g.count(full.point(k)) > 0;
            rest[k] = !keep[k];
        }
        m.full_e = principal_submatrix(full);
        m.full_g_block = restrict_matrix(full, keep);
        m.full_rest_block = restrict_matrix(full, rest);
        m.full = std::move(full);
    }
    return m;
}

TrialResult run_trial(const Construction& construction, const Matrices& m, const PrimeField& field,
                      const QuotientOptions& options, int trial) {
    TrialResult result;
    const bool dense_greedy = m.greedy.size() <= options.max_dense && m.reflected.size() <= options.max_dense;
    if (!dense_greedy) return result;

    Specialization values;
    FieldElem det_h = 0;
    FieldElem det_e = 0;
    for (int attempt = 0; attempt <= options.singular_retries; ++attempt) {
        result.seed = derive_seed(options.seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(attempt));
        std::mt19937_64 rng(result.seed);
        values = random_specialization(construction, field, rng);
        det_e = ff_det(specialize(m.greedy_e, values, field), field);
        if (det_e != 0) break;
    }
    result.singular_e = det_e == 0;
    det_h = ff_det(specialize(m.greedy, values, field), field);
    auto set = [&](std::size_t k, bool ok) { result.outcome[k] = ok ? Outcome::Pass : Outcome::Fail; };
    set(0, det_e != 0);
    set(1, det_h != 0);

    const ZonotopeSystem& box = construction.box_system();
    if (construction.rank() == 1) {
        std::vector<FieldElem> c0, c1;
        for (int k = 0; k <= box.bound(0, 0); ++k) c0.push_back(values.at(CoeffRef{0, LatticePoint{k}}));
        for (int k = 0; k <= box.bound(1, 0); ++k) c1.push_back(values.at(CoeffRef{1, LatticePoint{k}}));
        const FieldElem expected = sylvester_resultant(c0, c1, field);
        set(2, field.mul(expected, det_e) == det_h);
    }

    if (m.full) {
        const FieldElem det_full = ff_det(specialize(*m.full, values, field), field);
        const FieldElem det_full_e = ff_det(specialize(*m.full_e, values, field), field);
        set(3, field.mul(det_full, det_e) == field.mul(det_h, det_full_e));
        const FieldElem det_g = ff_det(specialize(*m.full_g_block, values, field), field);
        const FieldElem det_rest = ff_det(specialize(*m.full_rest_block, values, field), field);
        set(5, det_full == field.mul(det_g, det_rest));
    }

    const FieldElem det_hr = ff_det(specialize(m.reflected, values, field), field);
    const FieldElem det_er = ff_det(specialize(m.reflected_e, values, field), field);
    // Settled once all trials are in: the ratio must be the same sign everywhere.
    if (det_e != 0 && det_er != 0) {
        const FieldElem lhs = field.mul(det_hr, det_e);
        const FieldElem rhs = field.mul(det_h, det_er);
        result.orientation_ratio = lhs == rhs ? 1 : lhs == field.neg(rhs) ? -1 : 0;
    }
    return result;
}

}  // namespace

QuotientReport verify_quotient(const Construction& construction, const QuotientOptions& options) {
    const PrimeField field(options.prime);
    const Matrices m = assemble(construction, options.max_dense);

    QuotientReport report;
    report.prime = options.prime;
    report.trials = options.trials;
    report.seed = options.seed;
    report.greedy_size = m.greedy.size();
    report.greedy_principal_size = m.greedy_e.size();
    report.full_size = construction.point_count();
    report.full_principal_size = m.full_e ? m.full_e->size() : 0;

    std::vector<TrialResult> results(static_cast<std::size_t>(std::max(options.trials, 0)));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < options.trials; t = next++)
            results[static_cast<std::size_t>(t)] = run_trial(construction, m, field, options, t);
    };
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(options.trials, 1)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (std::size_t k = 0; k < kCheckCount; ++k) {
        CheckTally tally;
        tally.name = kCheckNames[k];
        report.checks.push_back(std::move(tally));
    }
    for (const auto& r : results) {
        if (!report.orientation_sign && r.orientation_ratio) report.orientation_sign = r.orientation_ratio;
    }
    for (auto& r : results) {
        if (r.outcome[1] != Outcome::NotRun && (r.orientation_ratio || !r.singular_e))
            r.outcome[4] = r.orientation_ratio != 0 && r.orientation_ratio == report.orientation_sign ? Outcome::Pass
                                                                                                     : Outcome::Fail;
    }
    for (const auto& r : results) {
        if (r.singular_e) report.singular_e_seeds.push_back(r.seed);
        for (std::size_t k = 0; k < kCheckCount; ++k) {
            auto& tally = report.checks[k];
            if (r.outcome[k] == Outcome::Pass) ++tally.passed;
            if (r.outcome[k] == Outcome::Fail) {
                ++tally.failed;
                tally.failing_seeds.push_back(r.seed);
            }
        }
    }
    const bool dense_greedy = m.greedy.size() <= options.max_dense && m.reflected.size() <= options.max_dense;
    for (auto& tally : report.checks) {
        if (tally.passed + tally.failed > 0) continue;
        tally.skipped = true;
        if (!dense_greedy)
            tally.skip_reason = "greedy matrix larger than the dense limit";
        else if (tally.name == "sylvester")
            tally.skip_reason = "only defined for n = 1";
        else if (!m.full)
            tally.skip_reason = "full matrix larger than the dense limit";
        else
            tally.skip_reason = "no trials";
    }
    return report;
}

QuotientReport verify_quotient(const ZonotopeSystem& sys, const QuotientOptions& options) {
    return verify_quotient(Construction::zonotope(sys), options);
}

QuotientReport verify_quotient(const MultiHomoSystem& sys, const QuotientOptions& options) {
    return verify_quotient(multihomo_construction(sys), options);
}

}  // namespace zres
