#pragma once

#include "nova/algebra.hpp"
#include "nova/identity.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nova {

using Json = nlohmann::json;

/// Named components read from a spec document, before role binding.
/// Component names are free-form; the conventional names "dot", "star",
/// "alpha", "del" and "form" bind to engine roles automatically.
struct ParsedSpec {
    std::size_t dim = 0;
    Field field;
    std::vector<std::string> basis;  ///< optional basis names (empty = e_0..)
    std::map<std::string, Algebra> products;
    std::map<std::string, LinearOperator> maps;
    std::map<std::string, BilinearForm> forms;
};

/// Parses a spec document:
///   { "dim": n, "field": "Q" | "GF(p)",
///     "basis": ["x", ...],                      // optional
///     "products": { "name": [[i, j, k, "p/q"], ...], ... },
///     "maps":     { "name": [[i, j, "p/q"], ...], ... },   // map(e_j) coeff on e_i
///     "forms":    { "name": [[i, j, "p/q"], ...], ... } }
/// Scalars are "p/q" or "p" strings (exact); plain JSON integers are also
/// accepted.  Floating literals, out-of-range indices, duplicate entries
/// and unknown top-level keys are rejected with std::invalid_argument.
ParsedSpec parse_spec(const Json& doc);
ParsedSpec parse_spec_text(const std::string& text);
ParsedSpec parse_spec_file(const std::string& path);

/// Emits the document form; parse_spec(spec_to_json(s)) reproduces every
/// component exactly.
Json spec_to_json(const ParsedSpec& spec);

/// Explicit component-to-role selections (each optional).
struct RoleNames {
    std::optional<std::string> dot, star, alpha, del, form;
};

/// Builds a bundle from named components.  Explicit selections win; without
/// one, a component whose name equals the role name is used.  Selecting a
/// missing name throws std::invalid_argument.
StructureBundle bind_roles(const ParsedSpec& spec, const RoleNames& names = {});

/// Renders a bundle as a spec whose components carry their role names.
ParsedSpec bundle_to_spec(const StructureBundle& b);

Json witness_to_json(const Witness& w);
Json report_to_json(const Report& r);

/// Assembles the report document:
///   { "verdict": "pass" | "fail" | "error",
///     "checks": [...], "construction_output": {...}?,
///     "error": "..."?,
///     "provenance": { "command": ..., "input_digest": ..., "seed": ... } }
Json make_report_doc(const std::string& verdict, const Json& checks,
                     const std::optional<Json>& construction_output,
                     const std::optional<std::string>& error, const std::string& command,
                     const std::string& input_digest, std::uint64_t seed);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// Byte-identical across runs for equal documents.
std::string stable_dump(const Json& j);

/// 64-bit FNV-1a digest of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// stable_dump written to a file (or stdout for path "-").
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace nova
