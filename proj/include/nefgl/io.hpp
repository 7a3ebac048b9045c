#pragma once

#include <json.hpp>
#include <string>

#include "nefgl/group.hpp"
#include "nefgl/transform.hpp"

namespace nefgl {

// {"n": int, "rows": [["p/q", ...], ...]}
GroupElement group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupElement& g);

// {"n": int, "entries": [["poly", ...], ...], "domain": string}
VarianceSpec variance_from_json(const nlohmann::json& j);
nlohmann::json variance_to_json(const VarianceSpec& v);

// {"n": int, "numerators": [[...]], "denominator": "poly"}
nlohmann::json rational_function_to_json(const RationalMatrixFunction& r);
RationalMatrixFunction rational_function_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nefgl
