#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "zres/core_model.hpp"

namespace zres::cli {

// Spec files are JSON documents with a "kind" discriminator:
//
//   {"kind": "zonotope", "bounds": [[1,1],[1,1],[1,1]],
//    "generators": [[1,0],[0,1]]}                      // optional, columns v_j
//
//   {"kind": "multihomogeneous", "groups": [2], "degrees": [[2],[2],[1]]}

struct ZonotopeSpec {
    ZonotopeSystem system;
    /// |det V| of the generators, 1 without them.
    std::int64_t exponent = 1;
};

using SystemSpec = std::variant<ZonotopeSpec, MultiHomoSystem>;

class SpecError : public std::runtime_error {
public:
    enum class Kind { Parse, Invalid };

    SpecError(Kind kind, const std::string& message)
        : std::runtime_error((kind == Kind::Parse ? "SpecParse: " : "SpecInvalid: ") + message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

SystemSpec parse_spec(const std::string& text);

/// Throws std::ios_base::failure when the file cannot be read.
SystemSpec load_spec(const std::string& path);

}  // namespace zres::cli
