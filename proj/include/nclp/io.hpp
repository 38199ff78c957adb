#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "nclp/cpmap.hpp"

namespace nclp::io {

using nlohmann::json;

// Matrix encoding: nested row arrays, each entry a two-element array [re, im].
// Plain numbers are accepted on input as real entries.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

enum class SuperOperatorKind { Choi, Action };

// Superoperator encoding: {"dim": n, "kind": "choi" | "action", "data": n^2 x n^2 matrix}.
json superop_to_json(const SuperOperator& t, SuperOperatorKind kind = SuperOperatorKind::Choi);
SuperOperator superop_from_json(const json& j);

// State encoding: {"gamma": n x n matrix} or just the matrix.
json state_to_json(const State& s);
State state_from_json(const json& j);

/// Parses a JSON file; malformed input raises std::invalid_argument.
json load_json_file(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double x);

}  // namespace nclp::io
