#pragma once

#include <filesystem>
#include <string>

#include "platekit/planner.hpp"

namespace platekit::cli {

struct SceneConfig {
  planner::Scene scene;
  planner::TargetRegion region;
  planner::Objective objective = planner::Objective::kMaxMinDbm;
};

/// Parses the JSON scene document. Unknown keys, missing fields and invalid
/// geometry throw ParseError (syntax, with line) or DomainError naming the
/// offending key path.
SceneConfig parse_scene_config(const std::string& text);
/// IoError when the file cannot be read.
SceneConfig load_scene_config(const std::filesystem::path& path);

}  // namespace platekit::cli
