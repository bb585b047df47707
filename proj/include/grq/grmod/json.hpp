#pragma once

#include <string>

#include <json.hpp>

#include "grq/grmod/module.hpp"

namespace grq {

using ojson = nlohmann::ordered_json;

// Canonical form: {"algebra":{...},"dim":n,"weights":[[a,b],...],"action":{...}}
ojson module_to_json(const GradedModule& m);
std::string module_to_string(const GradedModule& m);  // compact, byte-stable
GradedModule module_from_json(const ojson& j);
GradedModule module_from_string(const std::string& text);

ojson map_to_json(const ModuleMap& f);

}  // namespace grq
