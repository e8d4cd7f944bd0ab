#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "zres/construction.hpp"
#include "zres/matrix.hpp"
#include "zres/oracles.hpp"
#include "zres_cli/spec_file.hpp"

namespace zres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitIo = 4;

/// Commands refuse systems whose lattice box exceeds this unless forced.
inline constexpr std::uint64_t kMaxLatticePoints = 10'000'000;

/// A parsed spec together with the construction every command works on.
/// For multihomogeneous systems the construction lives in embedded
/// coordinates.
struct Target {
    SystemSpec spec;
    Construction construction;
    std::int64_t exponent = 1;

    bool multihomogeneous() const { return std::holds_alternative<MultiHomoSystem>(spec); }
};

Target make_target(const SystemSpec& spec);

/// Throws SpecError when the lattice box is larger than kMaxLatticePoints.
void check_size_guardrail(const Target& target, bool force);

int cmd_sizes(const Target& target, std::ostream& out, std::ostream& err);
int cmd_subdivision(const Target& target, std::ostream& out);

struct MatrixOptions {
    bool full = false;
    bool principal = false;
    ExportFormat format = ExportFormat::Triplet;
    /// Standard output when empty.
    std::string out_path;
};

int cmd_matrix(const Target& target, const MatrixOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    QuotientOptions quotient;
    /// Structural checks that need the full-B matrix are skipped above this.
    std::uint64_t max_full_points = 1'000'000;
};

int cmd_verify(const Target& target, const VerifyOptions& options, std::ostream& out);

/// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zres::cli
