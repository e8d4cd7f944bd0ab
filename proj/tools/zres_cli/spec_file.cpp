#include "zres_cli/spec_file.hpp"

#include <fstream>
#include <ios>
#include <sstream>

#include "json.hpp"

namespace zres::cli {

namespace {

using nlohmann::json;

IntMatrix read_matrix(const json& doc, const char* field) {
    if (!doc.contains(field)) throw SpecError(SpecError::Kind::Parse, std::string("missing field '") + field + "'");
    const json& value = doc.at(field);
    if (!value.is_array()) throw SpecError(SpecError::Kind::Parse, std::string("'") + field + "' must be an array");
    IntMatrix out;
    for (const auto& row : value) {
        if (!row.is_array())
            throw SpecError(SpecError::Kind::Parse, std::string("'") + field + "' must be an array of arrays");
        std::vector<std::int64_t> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw SpecError(SpecError::Kind::Parse, std::string("'") + field + "' entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

SystemSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(SpecError::Kind::Parse, e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
        throw SpecError(SpecError::Kind::Parse, "expected an object with a string field 'kind'");
    const auto kind = doc.at("kind").get<std::string>();
    try {
        if (kind == "zonotope") {
            const IntMatrix bounds = read_matrix(doc, "bounds");
            if (doc.contains("generators")) {
                auto normalized = normalize_zonotope(GeneratorMatrix(read_matrix(doc, "generators")), bounds);
                return ZonotopeSpec{std::move(normalized.system), normalized.exponent};
            }
            return ZonotopeSpec{validate_zonotope(bounds), 1};
        }
        if (kind == "multihomogeneous") {
            if (!doc.contains("groups") || !doc.at("groups").is_array())
                throw SpecError(SpecError::Kind::Parse, "missing array field 'groups'");
            std::vector<int> groups;
            for (const auto& g : doc.at("groups")) {
                if (!g.is_number_integer()) throw SpecError(SpecError::Kind::Parse, "'groups' entries must be integers");
                groups.push_back(g.get<int>());
            }
            return validate_multihomo(groups, read_matrix(doc, "degrees"));
        }
    } catch (const zres::Error& e) {
        throw SpecError(SpecError::Kind::Invalid, e.what());
    }
    throw SpecError(SpecError::Kind::Parse, "unknown kind '" + kind + "' (expected 'zonotope' or 'multihomogeneous')");
}

SystemSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

}  // namespace zres::cli
