#ifndef TOOLS_DOC_HPP
#define TOOLS_DOC_HPP

#include <string>

#include <json.hpp>

#include "gradual/functorial.hpp"
#include "gradual/fuzzy.hpp"
#include "gradual/gradual_group.hpp"
#include "gradual/gradual_subset.hpp"

// Document format: JSON with a top-level "kind" tag
// (fuzzy-subset | gradual-subset | group | fuzzy-subgroup | system);
// every rational is a "p/q" string, never a float.
namespace doc {

using nlohmann::json;

struct BadDocument : gradual::Error {
    using gradual::Error::Error;
};

std::string kind_of(const json& j);

json to_json(const gradual::GroundSet& g);
gradual::GroundSet ground_from_json(const json& j);

json to_json(const gradual::FuzzySubset& mu);
gradual::FuzzySubset fuzzy_from_json(const json& j);

json to_json(const gradual::GradualSubset& s);
gradual::GradualSubset subset_from_json(const json& j);

json to_json(const gradual::FiniteGroup& g);
gradual::FiniteGroup group_from_json(const json& j);

// fuzzy-subgroup: a group plus one grade per element.
json fuzzy_subgroup_to_json(const gradual::FiniteGroup& g, const gradual::FuzzySubset& mu);
std::pair<gradual::FiniteGroup, gradual::FuzzySubset> fuzzy_subgroup_from_json(const json& j);

json to_json(const gradual::SampledSubsetSystem& s);
gradual::SampledSubsetSystem system_from_json(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

} // namespace doc

#endif
