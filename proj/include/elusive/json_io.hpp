#pragma once

#include <elusive/classes.hpp>
#include <elusive/decide.hpp>
#include <elusive/groups.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace elusive {

using json = nlohmann::json;  // std::map backing: keys always sorted

std::string family_token(Family f);
std::optional<Family> family_parse(const std::string& s);

json spec_to_json(const GroupSpec&);
GroupSpec spec_from_json(const json&);

json label_to_json(const ClassLabel&);
ClassLabel label_from_json(const json&);

json verdict_to_json(const Verdict&);
Verdict verdict_from_json(const json&);

json enum_to_json(const EnumReport&);
json subgroup_to_json(const SubgroupReport&);
json coverage_to_json(const CoverageReport&);

}  // namespace elusive
