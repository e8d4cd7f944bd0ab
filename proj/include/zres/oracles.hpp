#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zres/construction.hpp"
#include "zres/core_model.hpp"
#include "zres/matrix.hpp"

namespace zres {

// ---------------------------------------------------------------------------
// Mixed volumes

/// Coefficient of lambda_1...lambda_n in Prod_j (Sum_{i != excluded} lambda_i a_ij),
/// by full expansion of the product.
std::int64_t mixed_volume(const IntMatrix& bounds, int excluded_row);

/// The same number as the permanent of the n x n matrix of non-excluded rows (Ryser).
std::int64_t mixed_volume_permanent(const IntMatrix& bounds, int excluded_row);

/// Permanent of a square integer matrix by Ryser's formula.
std::int64_t permanent(const IntMatrix& rows);

/// Mixed volume of the multihomogeneous supports other than excluded_row:
/// the coefficient of Prod_l x_l^{n_l} in Prod_{k != excluded} (Sum_l d_kl x_l).
std::int64_t multihomogeneous_bezout(const MultiHomoSystem& sys, int excluded_row);

IntMatrix to_int_matrix(const ZonotopeSystem& sys);

/// MV_0..MV_n of the supports of a construction: permanents for boxes,
/// multihomogeneous Bezout numbers for grouped simplices.
std::vector<std::int64_t> mixed_volumes(const Construction& construction);

/// Total resultant degree Sum_i MV_i against the reference table for the
/// all-ones family (n = 2..5), whose n = 4, 5 entries do not agree with the
/// mixed-volume degree.
struct DegreeAudit {
    std::int64_t computed_total = 0;
    std::optional<std::int64_t> reference;
    bool diverges = false;
};

DegreeAudit degree_audit(const ZonotopeSystem& sys);

// ---------------------------------------------------------------------------
// Arithmetic in Z/p

using FieldElem = std::uint64_t;
using FieldMatrix = std::vector<std::vector<FieldElem>>;

/// Z/p for a prime 2 <= p < 2^32, so products fit in 64 bits.
class PrimeField {
public:
    /// Throws NotPrime.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    FieldElem reduce(std::int64_t v) const;
    FieldElem add(FieldElem a, FieldElem b) const { return (a + b) % p_; }
    FieldElem sub(FieldElem a, FieldElem b) const { return (a + p_ - b) % p_; }
    FieldElem neg(FieldElem a) const { return (p_ - a) % p_; }
    FieldElem mul(FieldElem a, FieldElem b) const { return (a * b) % p_; }
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    /// a must be nonzero.
    FieldElem inv(FieldElem a) const;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

/// Determinant over Z/p by pivoted Gaussian elimination; det of 0x0 is 1.
FieldElem ff_det(const FieldMatrix& m, const PrimeField& field);
FieldElem ff_det(const FieldMatrix& m, std::uint64_t p);

/// The classical (a0+a1) x (a0+a1) Sylvester matrix of
/// f0 = Sum_k coeffs0[k] x^k and f1 = Sum_k coeffs1[k] x^k: a1 shifted rows of f0
/// followed by a0 shifted rows of f1, each row starting from the leading
/// coefficient. Its determinant is lc(f0)^a1 Prod_{f0(r)=0} f1(r).
FieldMatrix sylvester_matrix(const std::vector<FieldElem>& coeffs0, const std::vector<FieldElem>& coeffs1);
FieldElem sylvester_resultant(const std::vector<FieldElem>& coeffs0, const std::vector<FieldElem>& coeffs1,
                              const PrimeField& field);

// ---------------------------------------------------------------------------
// Specialization and the quotient check

using Specialization = std::map<CoeffRef, FieldElem>;

/// Uniform values in Z/p (zero included) for every u_{i,a}, a in A_i.
Specialization random_specialization(const Construction& construction, const PrimeField& field, std::mt19937_64& rng);

FieldMatrix specialize(const SymbolicMatrix& m, const Specialization& values, const PrimeField& field);

/// Deterministic per-trial seed derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t attempt);

struct QuotientOptions {
    std::uint64_t prime = 2147483647;
    int trials = 50;
    std::uint64_t seed = 1;
    /// Retries of a trial whose greedy E is singular.
    int singular_retries = 3;
    /// Matrices larger than this are not specialized (dense elimination is cubic).
    std::size_t max_dense = 1500;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct CheckTally {
    std::string name;
    int passed = 0;
    int failed = 0;
    bool skipped = false;
    std::string skip_reason;
    std::vector<std::uint64_t> failing_seeds;

    bool ok() const { return failed == 0; }
};

struct QuotientReport {
    std::uint64_t prime = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::size_t greedy_size = 0;
    std::size_t greedy_principal_size = 0;
    std::size_t full_size = 0;
    std::size_t full_principal_size = 0;
    /// Seeds of trials whose greedy E stayed singular after every retry.
    std::vector<std::uint64_t> singular_e_seeds;
    /// Sign relating the reflected quotient to the canonical one; 0 if never measured.
    int orientation_sign = 0;
    std::vector<CheckTally> checks;

    bool ok() const;
    const CheckTally* find(const std::string& name) const;
};

/// Specializes H_G, E_G (greedy matrices of both orientations) and the full-B
/// pair, and checks per trial:
///   e_nonsingular      det(E_G) != 0
///   h_nonsingular      det(H_G) != 0
///   sylvester          n = 1 only: det(H_G)/det(E_G) = sylvester_resultant
///   full_vs_greedy     det(H) det(E_G) = det(H_G) det(E)
///   orientation        reflected greedy quotient = s * canonical quotient, with one
///                      sign s in {+1, -1} shared by every trial (reported as
///                      orientation_sign). The reflected quotient is the canonical
///                      one at u_{i, top_i - a}, and the resultant can change sign
///                      under that reflection: for n = 1 it is (-1)^{a0 a1}.
///   block_product      det(H) = det(H_G) det(H_{B-G}) in greedy-first order
QuotientReport verify_quotient(const Construction& construction, const QuotientOptions& options = {});
QuotientReport verify_quotient(const ZonotopeSystem& sys, const QuotientOptions& options = {});
QuotientReport verify_quotient(const MultiHomoSystem& sys, const QuotientOptions& options = {});

}  // namespace zres
