#pragma once

// JSON file formats for algebras, pair actions, extension specs and
// derivation pairs, plus the JSON shape of check reports. Every parse error
// is an InputError naming the file and the offending field, e.g.
// "spec.json: rho.pairs[1].matrix[0][2]: expected a rational".

#include "filippov/extendder.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace filippov::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; syntax errors report line and column.
Json read_json(const std::filesystem::path& path);

/// Parses a document against the algebra format. `where` prefixes diagnostics.
ThreeLieAlgebra algebra_from_json(const Json& doc, const std::string& where);
ThreeLieAlgebra read_algebra(const std::filesystem::path& path);
Json algebra_to_json(const ThreeLieAlgebra& algebra);

/// {"pairs": [{"args": [i, j], "matrix": [[...]]}]}. The target dimension is
/// taken from "target_dim" if present, else from the first matrix, else 0.
PairAction pair_action_from_json(const Json& doc, std::size_t algebra_dim, const std::string& where);
PairAction read_pair_action(const std::filesystem::path& path, std::size_t algebra_dim);
Json pair_action_to_json(const PairAction& action);

/// "M" and "H" are inline algebra documents or paths relative to the spec
/// file. "mu" is {"brackets": [...]} in the algebra format with values in H,
/// "rho" a pair action and "beta" {"entries": [{"args": [i, a], "matrix"}]}.
/// All three default to zero.
ExtensionSpec read_spec(const std::filesystem::path& path);
ExtensionSpec spec_from_json(const Json& doc, const std::filesystem::path& base_dir, const std::string& where);
Json spec_to_json(const ExtensionSpec& spec);

/// {"sigma": matrix, "tau": matrix}.
DerivationPair read_pair(const std::filesystem::path& path, const ExtensionSpec& spec);
DerivationPair pair_from_json(const Json& doc, const ExtensionSpec& spec, const std::string& where);

Json matrix_to_json(const Matrix& m);
Json vector_to_json(std::span<const Scalar> v);
Json report_to_json(const CheckReport& report);

}  // namespace filippov::io
