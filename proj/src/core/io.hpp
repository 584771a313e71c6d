#pragma once

#include <string>

#include "core/contraction.hpp"

namespace rdmkit {

// Writes content to a temporary sibling file, then renames it into place.
void atomic_write(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

// Accepts {"dim": d, "re": [[..]], "im": [[..]]} ("im" optional) or
// {"eigenvalues": [..]} (diagonal state in the standard basis).
SingleParticleState state_from_json_text(const std::string& text);
SingleParticleState state_from_file(const std::string& path);

std::string operator_to_json_text(const Operator& op);

// Flattened operator payload plus the contraction metadata.
std::string contraction_to_json_text(const ContractionResult& result);

std::string xi_to_json_text(const XiTable& xi);

}  // namespace rdmkit
